#pragma once

#include <optional>

namespace dipolar {

// CODATA-2018 values. All derived reduced quantities depend only on these.
struct PhysicalConstants {
  static constexpr double planck = 6.62607015e-34;         // J s, exact
  static constexpr double c = 299792458.0;                 // m / s
  static constexpr double debye_to_Cm = 1.0e-21 / c;       // C m per debye
  static constexpr double inv_cm_to_J = planck * c * 100.0;  // J per cm^-1
  static constexpr double epsilon0 = 8.8541878128e-12;     // F / m
  static constexpr double pi = 3.14159265358979323846;
  static constexpr double hbar = planck / (2.0 * pi);      // J s
  // 1/(4 pi eps0). Setting this to 1 recovers the Gaussian-unit mu^2/R^3 form.
  static constexpr double coulomb_prefactor = 1.0 / (4.0 * pi * epsilon0);
};

// Laboratory-unit description of the two-molecule system and its drive.
struct PhysicalConfig {
  double mu_debye = 9.2;
  double B_cm1 = 0.12;
  double R_m = 3.0e-8;
  double E0_Vpm = 3.0e7;
  double sigma_fs = 279.0;
  double t0_fs = 1200.0;
  double omega_cm1 = 30.0;
  std::optional<double> period_s;  // unset for a single pulse
};

// Dimensionless parameters with hbar = 1 and B = 1; the time unit is hbar/B.
struct ReducedParameters {
  double kick_strength = 0.0;    // mu E0 / B
  double dipole_strength = 0.0;  // mu^2 / (4 pi eps0 R^3 B)
  double carrier_omega = 0.0;    // omega hbar / B
  double sigma_red = 0.0;
  double t0_red = 0.0;
  double period_red = 0.0;       // 0 when no period is set
};

double rotational_constant_J(double B_cm1);

// hbar / B in seconds.
double time_unit_s(double B_cm1);

ReducedParameters to_reduced(const PhysicalConfig& config);

// Inverse of to_reduced. mu and B fix the scales that the reduced form divides out.
PhysicalConfig from_reduced(const ReducedParameters& reduced, double mu_debye, double B_cm1);

}  // namespace dipolar
