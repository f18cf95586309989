#include "dipolar/units.hpp"

#include <cmath>
#include <string>

#include "dipolar/errors.hpp"

namespace dipolar {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string(name) + " must be positive and finite");
  }
}

void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string(name) + " must be non-negative and finite");
  }
}

}  // namespace

double rotational_constant_J(double B_cm1) {
  return B_cm1 * PhysicalConstants::inv_cm_to_J;
}

double time_unit_s(double B_cm1) {
  require_positive(B_cm1, "B_cm1");
  return PhysicalConstants::hbar / rotational_constant_J(B_cm1);
}

ReducedParameters to_reduced(const PhysicalConfig& config) {
  require_positive(config.mu_debye, "mu_debye");
  require_positive(config.B_cm1, "B_cm1");
  require_positive(config.R_m, "R_m");
  require_positive(config.sigma_fs, "sigma_fs");
  require_non_negative(config.E0_Vpm, "E0_Vpm");
  require_non_negative(config.t0_fs, "t0_fs");
  require_non_negative(config.omega_cm1, "omega_cm1");
  if (config.period_s) require_positive(*config.period_s, "period_s");

  const double B = rotational_constant_J(config.B_cm1);
  const double mu = config.mu_debye * PhysicalConstants::debye_to_Cm;
  const double unit = PhysicalConstants::hbar / B;

  ReducedParameters r;
  r.kick_strength = mu * config.E0_Vpm / B;
  r.dipole_strength =
      PhysicalConstants::coulomb_prefactor * mu * mu / (config.R_m * config.R_m * config.R_m * B);
  // hbar*omega = h c nu~, so omega in units of B/hbar is the wavenumber ratio.
  r.carrier_omega = config.omega_cm1 / config.B_cm1;
  r.sigma_red = config.sigma_fs * 1e-15 / unit;
  r.t0_red = config.t0_fs * 1e-15 / unit;
  r.period_red = config.period_s ? *config.period_s / unit : 0.0;
  return r;
}

PhysicalConfig from_reduced(const ReducedParameters& reduced, double mu_debye, double B_cm1) {
  require_positive(mu_debye, "mu_debye");
  require_positive(B_cm1, "B_cm1");
  require_positive(reduced.dipole_strength, "dipole_strength");

  const double B = rotational_constant_J(B_cm1);
  const double mu = mu_debye * PhysicalConstants::debye_to_Cm;
  const double unit = PhysicalConstants::hbar / B;

  PhysicalConfig p;
  p.mu_debye = mu_debye;
  p.B_cm1 = B_cm1;
  p.E0_Vpm = reduced.kick_strength * B / mu;
  p.R_m = std::cbrt(PhysicalConstants::coulomb_prefactor * mu * mu / (reduced.dipole_strength * B));
  p.omega_cm1 = reduced.carrier_omega * B_cm1;
  p.sigma_fs = reduced.sigma_red * unit * 1e15;
  p.t0_fs = reduced.t0_red * unit * 1e15;
  if (reduced.period_red > 0.0) p.period_s = reduced.period_red * unit;
  return p;
}

}  // namespace dipolar
