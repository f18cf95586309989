#pragma once

#include <cmath>
#include <memory>
#include <random>

#include "dipolar/propagation.hpp"

namespace dipolar::testing {

inline std::shared_ptr<const TwoRotorBasis> make_basis(int l_max, std::optional<int> m = std::nullopt) {
  return std::make_shared<const TwoRotorBasis>(l_max, m);
}

inline WaveFunction random_state(std::shared_ptr<const TwoRotorBasis> basis, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  WaveFunction psi;
  psi.coeffs.resize(static_cast<Eigen::Index>(basis->size()));
  for (Eigen::Index i = 0; i < psi.coeffs.size(); ++i) psi.coeffs(i) = {gauss(rng), gauss(rng)};
  psi.coeffs.normalize();
  psi.basis = std::move(basis);
  return psi;
}

inline WaveFunction basis_state(std::shared_ptr<const TwoRotorBasis> basis, int l, int m, int lp, int mp) {
  WaveFunction psi;
  psi.coeffs = StateVector::Zero(static_cast<Eigen::Index>(basis->size()));
  psi.coeffs(static_cast<Eigen::Index>(*basis->index_of(l, m, lp, mp))) = 1.0;
  psi.basis = std::move(basis);
  return psi;
}

// Single-pulse schedule with the NaI reduced parameters (R-independent pieces).
inline PulseSchedule nai_pulse(double kick = 386.2) {
  PulseSchedule p;
  p.kick_strength = kick;
  p.sigma_red = 279e-15 / 4.4240e-11;
  p.t0_red = 1200e-15 / 4.4240e-11;
  p.carrier_omega = 250.0;
  return p;
}

}  // namespace dipolar::testing
