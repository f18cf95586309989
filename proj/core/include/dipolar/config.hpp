#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dipolar/entanglement.hpp"
#include "dipolar/observables.hpp"
#include "dipolar/units.hpp"

namespace dipolar {

enum class PeriodKind { none, seconds, hbar_over_B, pi_hbar_over_B };

struct PeriodSetting {
  PeriodKind kind = PeriodKind::none;
  double seconds = 0.0;  // used when kind == seconds
};

// Everything one simulation needs, in laboratory units. Defaults describe NaI with a single pulse.
struct RunConfig {
  struct MoleculeSettings {
    double mu_debye = 9.2;
    double B_cm1 = 0.12;
  } molecule;

  struct GeometrySettings {
    double R_m = 3.0e-8;
  } geometry;

  struct PulseSettings {
    double E0_Vpm = 3.0e7;
    double sigma_fs = 279.0;
    double t0_fs = 1200.0;
    double omega_cm1 = 30.0;
    PeriodSetting period;
    int count = 1;
  } pulse;

  struct BasisSettings {
    int l_max = 8;
    std::optional<int> restrict_total_m = 0;  // nullopt runs the full product basis
  } basis;

  struct IntegratorSettings {
    std::optional<double> dt_pulse_fs;  // nullopt: sigma / 400
    double norm_tolerance = 1e-8;
  } integrator;

  struct OutputSettings {
    double sample_interval_ps = 0.5;
    std::optional<double> total_time_ps;  // nullopt: 400 ps, or count * T + 100 ps for trains
    std::vector<WatchEntry> watch_populations{{1, 0, 0, 0}, {1, 0, 1, 0}, {2, 0, 1, 0}, {3, 0, 1, 0}};
    LogBase entropy_log_base = LogBase::e;
    std::string out_dir = "out";
  } output;

  // Throws ConfigError naming the offending field.
  void validate() const;

  PhysicalConfig physical() const;

  // Period in units of hbar/B; 0 for a single pulse. Symbolic periods are exact (1 and pi).
  double period_reduced() const;
};

// Parses and validates a JSON document. Missing keys take defaults, unknown keys are rejected.
RunConfig parse_config(std::string_view json_text);

// Fully resolved configuration as JSON; parse_config(config_to_json(c)) reproduces c.
std::string config_to_json(const RunConfig& config);

std::string log_base_name(LogBase base);

}  // namespace dipolar
