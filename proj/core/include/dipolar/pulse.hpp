#pragma once

namespace dipolar {

// Train of Gaussian pulses sharing one carrier phase, in reduced units:
//   E(t)/E0 = sum_k exp(-(t - t0 - k T)^2 / sigma^2) * cos(omega t),  k = 0..count-1
struct PulseSchedule {
  double kick_strength = 0.0;
  double sigma_red = 1.0;
  double t0_red = 0.0;
  double carrier_omega = 0.0;
  double period_red = 0.0;
  int count = 1;

  // Throws ConfigError when sigma <= 0, count < 1, or a train lacks a positive period.
  void validate() const;

  double center(int k) const { return t0_red + k * period_red; }
  double envelope(double t) const;

  // Scalar multiplying (cos theta + cos theta') in H(t): -kick * envelope(t) * cos(omega t).
  double coupling_factor(double t) const;
};

}  // namespace dipolar
