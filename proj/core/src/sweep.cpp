#include "dipolar/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "dipolar/csv.hpp"
#include "dipolar/errors.hpp"

namespace dipolar {

using nlohmann::json;

namespace {

const std::vector<std::string> kAxisNames{"R_m", "E0_Vpm", "period", "l_max"};

SweepAxis parse_axis(const json& o, const std::string& path) {
  if (!o.is_object()) throw ConfigError(path + ": expected an object");
  for (const auto& [key, value] : o.items()) {
    if (key != "name" && key != "values") throw ConfigError(path + "." + key + ": unknown key");
  }
  SweepAxis axis;
  if (!o.contains("name") || !o["name"].is_string()) throw ConfigError(path + ".name: expected a string");
  axis.name = o["name"].get<std::string>();
  if (std::find(kAxisNames.begin(), kAxisNames.end(), axis.name) == kAxisNames.end()) {
    throw ConfigError(path + ".name: unsupported axis '" + axis.name + "'");
  }
  if (!o.contains("values") || !o["values"].is_array()) throw ConfigError(path + ".values: expected an array");
  for (std::size_t i = 0; i < o["values"].size(); ++i) {
    const auto& v = o["values"][i];
    const std::string vp = path + ".values[" + std::to_string(i) + "]";
    AxisValue value;
    if (v.is_number()) {
      value.number = v.get<double>();
      if (axis.name == "l_max" && !v.is_number_integer()) throw ConfigError(vp + ": expected an integer");
    } else if (v.is_string() && axis.name == "period") {
      value.symbol = v.get<std::string>();
      if (*value.symbol != "hbar_over_B" && *value.symbol != "pi_hbar_over_B") {
        throw ConfigError(vp + ": unknown symbolic period");
      }
    } else {
      throw ConfigError(vp + ": expected a number");
    }
    axis.values.push_back(value);
  }
  return axis;
}

json value_to_json(const AxisValue& v) {
  if (v.symbol) return *v.symbol;
  return v.number;
}

void apply(RunConfig& config, const std::string& name, const AxisValue& v) {
  if (name == "R_m") {
    config.geometry.R_m = v.number;
  } else if (name == "E0_Vpm") {
    config.pulse.E0_Vpm = v.number;
  } else if (name == "l_max") {
    config.basis.l_max = static_cast<int>(v.number);
  } else if (name == "period") {
    if (!v.symbol) {
      config.pulse.period = {PeriodKind::seconds, v.number};
    } else if (*v.symbol == "hbar_over_B") {
      config.pulse.period = {PeriodKind::hbar_over_B, 0.0};
    } else {
      config.pulse.period = {PeriodKind::pi_hbar_over_B, 0.0};
    }
  }
}

std::string point_dir_name(std::size_t index) {
  char b[32];
  std::snprintf(b, sizeof b, "point_%03zu", index);
  return b;
}

}  // namespace

void SweepSpec::validate() const {
  if (axes.empty() || axes.size() > 2) throw ConfigError("sweep needs one or two axes");
  if (axes.size() == 2 && axes[0].name == axes[1].name) throw ConfigError("axis2.name: duplicates axis1");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i].values.empty()) throw ConfigError("axis" + std::to_string(i + 1) + ".values: must not be empty");
  }
  if (parallelism < 1) throw ConfigError("parallelism: must be at least 1");
  if (out_dir.empty()) throw ConfigError("out_dir: must not be empty");
}

SweepSpec parse_sweep_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("<root>: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("<root>: expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "base" && key != "axis1" && key != "axis2" && key != "parallelism" && key != "out_dir") {
      throw ConfigError(key + ": unknown key");
    }
  }

  SweepSpec spec;
  if (doc.contains("base")) {
    try {
      spec.base = parse_config(doc["base"].dump());
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("base.") + e.what());
    }
  }
  if (!doc.contains("axis1")) throw ConfigError("axis1: required");
  spec.axes.push_back(parse_axis(doc["axis1"], "axis1"));
  if (doc.contains("axis2") && !doc["axis2"].is_null()) spec.axes.push_back(parse_axis(doc["axis2"], "axis2"));
  if (doc.contains("parallelism")) {
    if (!doc["parallelism"].is_number_integer()) throw ConfigError("parallelism: expected an integer");
    spec.parallelism = doc["parallelism"].get<int>();
  }
  if (doc.contains("out_dir")) {
    if (!doc["out_dir"].is_string()) throw ConfigError("out_dir: expected a string");
    spec.out_dir = doc["out_dir"].get<std::string>();
  }
  spec.validate();
  return spec;
}

std::vector<SweepPoint> expand_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepPoint> points;
  const auto& a1 = spec.axes[0];
  const std::size_t n2 = spec.axes.size() > 1 ? spec.axes[1].values.size() : 1;
  for (const auto& v1 : a1.values) {
    for (std::size_t j = 0; j < n2; ++j) {
      SweepPoint p;
      p.index = points.size();
      p.config = spec.base;
      p.params.emplace_back(a1.name, v1);
      apply(p.config, a1.name, v1);
      if (spec.axes.size() > 1) {
        const auto& v2 = spec.axes[1].values[j];
        p.params.emplace_back(spec.axes[1].name, v2);
        apply(p.config, spec.axes[1].name, v2);
      }
      points.push_back(std::move(p));
    }
  }
  return points;
}

int sweep_workers(const SweepSpec& spec) {
  if (const char* env = std::getenv("SIM_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return spec.parallelism;
}

std::vector<SweepPointResult> run_sweep(const SweepSpec& spec) {
  const auto points = expand_sweep(spec);
  const std::filesystem::path root(spec.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(root, ec);
  if (ec) throw IoError("cannot create " + root.string() + ": " + ec.message());

  std::vector<SweepPointResult> results(points.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1)) {
      SweepPointResult& r = results[i];
      r.point = points[i];
      try {
        RunConfig config = points[i].config;
        const auto dir = root / point_dir_name(i);
        config.output.out_dir = dir.string();
        r.csv = run_to_directory(config, dir, "run").csv;
        r.ok = true;
      } catch (const ConfigError& e) {
        r.exit_code = 2;
        r.error = e.what();
      } catch (const IoError& e) {
        r.exit_code = 4;
        r.error = e.what();
      } catch (const std::exception& e) {
        r.exit_code = 3;
        r.error = e.what();
      }
    }
  };

  const int n_workers = std::max(1, std::min<int>(sweep_workers(spec), static_cast<int>(points.size())));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }

  json manifest;
  manifest["out_dir"] = spec.out_dir;
  manifest["axes"] = json::array();
  for (const auto& a : spec.axes) {
    json values = json::array();
    for (const auto& v : a.values) values.push_back(value_to_json(v));
    manifest["axes"].push_back({{"name", a.name}, {"values", values}});
  }
  manifest["points"] = json::array();
  for (const auto& r : results) {
    json params = json::object();
    for (const auto& [name, v] : r.point.params) params[name] = value_to_json(v);
    json entry = {{"index", r.point.index},
                  {"params", params},
                  {"status", r.ok ? "ok" : "failed"},
                  {"exit_code", r.exit_code},
                  {"dir", point_dir_name(r.point.index)}};
    entry["csv"] = r.ok ? json(std::filesystem::relative(r.csv, root).generic_string()) : json(nullptr);
    entry["error"] = r.ok ? json(nullptr) : json(r.error);
    manifest["points"].push_back(entry);
  }
  std::ofstream out(root / "manifest.json", std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write manifest in " + root.string());
  out << manifest.dump(2) << '\n';
  return results;
}

}  // namespace dipolar
