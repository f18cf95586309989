#include "dipolar/config.hpp"

#include <cmath>
#include <initializer_list>
#include <set>

#include <json.hpp>

#include "dipolar/errors.hpp"

namespace dipolar {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

// Rejects keys outside the allowed set, reporting the full path.
void check_keys(const json& object, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!object.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  const std::set<std::string> names(allowed.begin(), allowed.end());
  for (const auto& [key, value] : object.items()) {
    if (!names.count(key)) fail(path.empty() ? key : path + "." + key, "unknown key");
  }
}

std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }

void read_number(const json& object, const std::string& path, const char* key, double& out) {
  if (!object.contains(key)) return;
  const auto& v = object.at(key);
  if (!v.is_number()) fail(join(path, key), "expected a number");
  out = v.get<double>();
}

void read_int(const json& object, const std::string& path, const char* key, int& out) {
  if (!object.contains(key)) return;
  const auto& v = object.at(key);
  if (!v.is_number_integer()) fail(join(path, key), "expected an integer");
  out = v.get<int>();
}

void read_optional_number(const json& object, const std::string& path, const char* key,
                          std::optional<double>& out) {
  if (!object.contains(key)) return;
  const auto& v = object.at(key);
  if (v.is_null()) {
    out.reset();
  } else if (v.is_number()) {
    out = v.get<double>();
  } else {
    fail(join(path, key), "expected a number or null");
  }
}

PeriodSetting parse_period(const json& v, const std::string& path) {
  if (v.is_null()) return {};
  if (v.is_number()) return {PeriodKind::seconds, v.get<double>()};
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "none") return {};
    if (s == "hbar_over_B") return {PeriodKind::hbar_over_B, 0.0};
    if (s == "pi_hbar_over_B") return {PeriodKind::pi_hbar_over_B, 0.0};
    fail(path, "unknown symbolic period '" + s + "'");
  }
  fail(path, "expected null, seconds, \"hbar_over_B\" or \"pi_hbar_over_B\"");
}

json period_to_json(const PeriodSetting& p) {
  switch (p.kind) {
    case PeriodKind::none:
      return nullptr;
    case PeriodKind::seconds:
      return p.seconds;
    case PeriodKind::hbar_over_B:
      return "hbar_over_B";
    case PeriodKind::pi_hbar_over_B:
      return "pi_hbar_over_B";
  }
  return nullptr;
}

LogBase parse_log_base(const json& v, const std::string& path) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "e") return LogBase::e;
    if (s == "2") return LogBase::two;
    if (s == "d" || s == "d_single") return LogBase::single_dim;
  }
  if (v.is_number_integer() && v.get<int>() == 2) return LogBase::two;
  fail(path, "expected \"e\", \"2\" or \"d_single\"");
}

void require_positive(double v, const std::string& path) {
  if (!(v > 0.0) || !std::isfinite(v)) fail(path, "must be positive");
}

void require_non_negative(double v, const std::string& path) {
  if (!(v >= 0.0) || !std::isfinite(v)) fail(path, "must be non-negative");
}

}  // namespace

std::string log_base_name(LogBase base) {
  switch (base) {
    case LogBase::e:
      return "e";
    case LogBase::two:
      return "2";
    case LogBase::single_dim:
      return "d_single";
  }
  return "e";
}

void RunConfig::validate() const {
  require_positive(molecule.mu_debye, "molecule.mu_debye");
  require_positive(molecule.B_cm1, "molecule.B_cm1");
  require_positive(geometry.R_m, "geometry.R_m");
  require_non_negative(pulse.E0_Vpm, "pulse.E0_Vpm");
  require_positive(pulse.sigma_fs, "pulse.sigma_fs");
  require_non_negative(pulse.t0_fs, "pulse.t0_fs");
  require_non_negative(pulse.omega_cm1, "pulse.omega_cm1");
  if (pulse.period.kind == PeriodKind::seconds) require_positive(pulse.period.seconds, "pulse.period");
  if (pulse.count < 1) fail("pulse.count", "must be at least 1");
  if (pulse.count > 1 && pulse.period.kind == PeriodKind::none) fail("pulse.period", "required when count > 1");
  if (basis.l_max < 1) fail("basis.l_max", "must be at least 1");
  if (basis.restrict_total_m && std::abs(*basis.restrict_total_m) > 2 * basis.l_max) {
    fail("basis.restrict_total_m", "outside the range allowed by l_max");
  }
  if (basis.restrict_total_m && *basis.restrict_total_m != 0) {
    fail("basis.restrict_total_m", "the initial state (0,0;0,0) lives in the M = 0 block");
  }
  if (integrator.dt_pulse_fs) require_positive(*integrator.dt_pulse_fs, "integrator.dt_pulse_fs");
  require_positive(integrator.norm_tolerance, "integrator.norm_tolerance");
  require_positive(output.sample_interval_ps, "output.sample_interval_ps");
  if (output.total_time_ps) require_positive(*output.total_time_ps, "output.total_time_ps");
  for (std::size_t i = 0; i < output.watch_populations.size(); ++i) {
    const auto& w = output.watch_populations[i];
    const std::string path = "output.watch_populations[" + std::to_string(i) + "]";
    if (w.l < 0 || w.lp < 0 || std::abs(w.m) > w.l || std::abs(w.mp) > w.lp) fail(path, "invalid quantum numbers");
    if (w.l > basis.l_max || w.lp > basis.l_max) fail(path, "exceeds basis.l_max");
    if (basis.restrict_total_m && w.m + w.mp != *basis.restrict_total_m) {
      fail(path, "outside the restricted total-M block");
    }
  }
  if (output.out_dir.empty()) fail("output.out_dir", "must not be empty");
}

PhysicalConfig RunConfig::physical() const {
  PhysicalConfig p;
  p.mu_debye = molecule.mu_debye;
  p.B_cm1 = molecule.B_cm1;
  p.R_m = geometry.R_m;
  p.E0_Vpm = pulse.E0_Vpm;
  p.sigma_fs = pulse.sigma_fs;
  p.t0_fs = pulse.t0_fs;
  p.omega_cm1 = pulse.omega_cm1;
  const double unit = time_unit_s(molecule.B_cm1);
  switch (pulse.period.kind) {
    case PeriodKind::none:
      break;
    case PeriodKind::seconds:
      p.period_s = pulse.period.seconds;
      break;
    case PeriodKind::hbar_over_B:
      p.period_s = unit;
      break;
    case PeriodKind::pi_hbar_over_B:
      p.period_s = PhysicalConstants::pi * unit;
      break;
  }
  return p;
}

double RunConfig::period_reduced() const {
  switch (pulse.period.kind) {
    case PeriodKind::none:
      return 0.0;
    case PeriodKind::seconds:
      return pulse.period.seconds / time_unit_s(molecule.B_cm1);
    case PeriodKind::hbar_over_B:
      return 1.0;
    case PeriodKind::pi_hbar_over_B:
      return PhysicalConstants::pi;
  }
  return 0.0;
}

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("<root>: invalid JSON: ") + e.what());
  }

  RunConfig c;
  check_keys(doc, "", {"molecule", "geometry", "pulse", "basis", "integrator", "output"});

  if (doc.contains("molecule")) {
    const auto& o = doc["molecule"];
    check_keys(o, "molecule", {"mu_debye", "B_cm1"});
    read_number(o, "molecule", "mu_debye", c.molecule.mu_debye);
    read_number(o, "molecule", "B_cm1", c.molecule.B_cm1);
  }
  if (doc.contains("geometry")) {
    const auto& o = doc["geometry"];
    check_keys(o, "geometry", {"R_m"});
    read_number(o, "geometry", "R_m", c.geometry.R_m);
  }
  if (doc.contains("pulse")) {
    const auto& o = doc["pulse"];
    check_keys(o, "pulse", {"E0_Vpm", "sigma_fs", "t0_fs", "omega_cm1", "period", "count"});
    read_number(o, "pulse", "E0_Vpm", c.pulse.E0_Vpm);
    read_number(o, "pulse", "sigma_fs", c.pulse.sigma_fs);
    read_number(o, "pulse", "t0_fs", c.pulse.t0_fs);
    read_number(o, "pulse", "omega_cm1", c.pulse.omega_cm1);
    if (o.contains("period")) c.pulse.period = parse_period(o["period"], "pulse.period");
    read_int(o, "pulse", "count", c.pulse.count);
  }
  if (doc.contains("basis")) {
    const auto& o = doc["basis"];
    check_keys(o, "basis", {"l_max", "restrict_total_m"});
    read_int(o, "basis", "l_max", c.basis.l_max);
    if (o.contains("restrict_total_m")) {
      const auto& v = o["restrict_total_m"];
      if (v.is_null()) {
        c.basis.restrict_total_m.reset();
      } else if (v.is_number_integer()) {
        c.basis.restrict_total_m = v.get<int>();
      } else {
        fail("basis.restrict_total_m", "expected an integer or null");
      }
    }
  }
  if (doc.contains("integrator")) {
    const auto& o = doc["integrator"];
    check_keys(o, "integrator", {"dt_pulse_fs", "norm_tolerance"});
    read_optional_number(o, "integrator", "dt_pulse_fs", c.integrator.dt_pulse_fs);
    read_number(o, "integrator", "norm_tolerance", c.integrator.norm_tolerance);
  }
  if (doc.contains("output")) {
    const auto& o = doc["output"];
    check_keys(o, "output",
               {"sample_interval_ps", "total_time_ps", "watch_populations", "entropy_log_base", "out_dir"});
    read_number(o, "output", "sample_interval_ps", c.output.sample_interval_ps);
    read_optional_number(o, "output", "total_time_ps", c.output.total_time_ps);
    if (o.contains("watch_populations")) {
      const auto& list = o["watch_populations"];
      if (!list.is_array()) fail("output.watch_populations", "expected an array");
      c.output.watch_populations.clear();
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& e = list[i];
        const std::string path = "output.watch_populations[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 4) fail(path, "expected [l, m, l', m']");
        for (const auto& q : e) {
          if (!q.is_number_integer()) fail(path, "quantum numbers must be integers");
        }
        c.output.watch_populations.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
      }
    }
    if (o.contains("entropy_log_base")) {
      c.output.entropy_log_base = parse_log_base(o["entropy_log_base"], "output.entropy_log_base");
    }
    if (o.contains("out_dir")) {
      if (!o["out_dir"].is_string()) fail("output.out_dir", "expected a string");
      c.output.out_dir = o["out_dir"].get<std::string>();
    }
  }

  c.validate();
  return c;
}

std::string config_to_json(const RunConfig& c) {
  json watch = json::array();
  for (const auto& w : c.output.watch_populations) watch.push_back({w.l, w.m, w.lp, w.mp});
  json doc = {
      {"molecule", {{"mu_debye", c.molecule.mu_debye}, {"B_cm1", c.molecule.B_cm1}}},
      {"geometry", {{"R_m", c.geometry.R_m}}},
      {"pulse",
       {{"E0_Vpm", c.pulse.E0_Vpm},
        {"sigma_fs", c.pulse.sigma_fs},
        {"t0_fs", c.pulse.t0_fs},
        {"omega_cm1", c.pulse.omega_cm1},
        {"period", period_to_json(c.pulse.period)},
        {"count", c.pulse.count}}},
      {"basis",
       {{"l_max", c.basis.l_max},
        {"restrict_total_m", c.basis.restrict_total_m ? json(*c.basis.restrict_total_m) : json(nullptr)}}},
      {"integrator",
       {{"dt_pulse_fs", c.integrator.dt_pulse_fs ? json(*c.integrator.dt_pulse_fs) : json(nullptr)},
        {"norm_tolerance", c.integrator.norm_tolerance}}},
      {"output",
       {{"sample_interval_ps", c.output.sample_interval_ps},
        {"total_time_ps", c.output.total_time_ps ? json(*c.output.total_time_ps) : json(nullptr)},
        {"watch_populations", watch},
        {"entropy_log_base", log_base_name(c.output.entropy_log_base)},
        {"out_dir", c.output.out_dir}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace dipolar
