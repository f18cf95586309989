#include "dipolar/presets.hpp"

#include <algorithm>

#include "dipolar/errors.hpp"

namespace dipolar {

namespace {

RunConfig single_pulse(double R_m, double E0_Vpm = 3.0e7) {
  RunConfig c;
  c.geometry.R_m = R_m;
  c.pulse.E0_Vpm = E0_Vpm;
  return c;
}

RunConfig train(double R_m, PeriodKind period) {
  RunConfig c = single_pulse(R_m);
  c.pulse.period.kind = period;
  c.pulse.count = 20;
  return c;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b", "fig4"};
  return names;
}

std::vector<NamedRun> preset(std::string_view name) {
  if (name == "fig1a") return {{"fig1a", single_pulse(3.0e-8)}};
  if (name == "fig1b") return {{"fig1b", single_pulse(2.0e-8)}};
  if (name == "fig2a") {
    return {{"fig2a_R3e-8", train(3.0e-8, PeriodKind::hbar_over_B)},
            {"fig2a_R2e-8", train(2.0e-8, PeriodKind::hbar_over_B)}};
  }
  if (name == "fig2b") {
    return {{"fig2b_R3e-8", train(3.0e-8, PeriodKind::pi_hbar_over_B)},
            {"fig2b_R2e-8", train(2.0e-8, PeriodKind::pi_hbar_over_B)}};
  }
  if (name == "fig3a") return {{"fig3a", single_pulse(5.0e-8)}};
  if (name == "fig3b") return {{"fig3b", single_pulse(1.5e-8)}};
  if (name == "fig4") {
    return {{"fig4_E1.5e7", single_pulse(1.5e-8, 1.5e7)}, {"fig4_E3e7", single_pulse(1.5e-8, 3.0e7)}};
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

}  // namespace dipolar
