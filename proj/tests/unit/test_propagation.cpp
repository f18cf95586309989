#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "dipolar/entanglement.hpp"
#include "dipolar/errors.hpp"
#include "dipolar/observables.hpp"
#include "dipolar/operators.hpp"
#include "dipolar/propagation.hpp"
#include "helpers.hpp"
#include "oracles/dense.hpp"

namespace dipolar {
namespace {

using testing::basis_state;
using testing::make_basis;
using testing::nai_pulse;
using testing::random_state;

double max_diff(const StateVector& a, const StateVector& b) { return (a - b).cwiseAbs().maxCoeff(); }

double expectation(const OperatorMatrix& op, const StateVector& psi) {
  return psi.dot(op.data * psi).real();
}

TEST(InitialState, GroundProductState) {
  auto basis = make_basis(3, 0);
  const auto psi = initial_state(basis);
  EXPECT_EQ(psi.t, 0.0);
  EXPECT_EQ(psi.norm(), 1.0);
  EXPECT_EQ(population(psi, 0, 0, 0, 0), 1.0);
  EXPECT_EQ(population(psi, 1, 0, 0, 0), 0.0);
  EXPECT_EQ(entanglement_record(psi).entropy, 0.0);
  EXPECT_THROW(initial_state(make_basis(3, 1)), ConfigError);
}

TEST(EvolveFree, ZeroDurationIsIdentity) {
  auto basis = make_basis(3);
  const auto psi = random_state(basis, 7);
  const auto h0 = build_pieces(*basis, 0.2).field_free();
  EXPECT_LT(max_diff(evolve_free(psi, 0.0, h0).coeffs, psi.coeffs), 1e-14);
}

TEST(EvolveFree, EigenstatePhase) {
  auto basis = make_basis(2);
  const auto h0 = build_pieces(*basis, 0.0).field_free();
  const double tau = 0.83;
  const auto out = evolve_free(basis_state(basis, 1, 0, 0, 0), tau, h0);
  const auto k = static_cast<Eigen::Index>(*basis->index_of(1, 0, 0, 0));
  EXPECT_LT(std::abs(out.coeffs(k) - std::exp(Complex(0.0, -2.0 * tau))), 1e-14);
  EXPECT_NEAR(out.t, tau, 1e-15);
}

TEST(EvolveFree, TwoLevelOrientationHasPeriodPi) {
  auto basis = make_basis(2, 0);
  const FreePropagator free(build_pieces(*basis, 0.0).field_free());
  WaveFunction psi = basis_state(basis, 0, 0, 0, 0);
  psi.coeffs(static_cast<Eigen::Index>(*basis->index_of(1, 0, 0, 0))) = 1.0;
  psi.coeffs /= std::sqrt(2.0);
  for (double t : {0.0, 0.4, 1.1, M_PI / 2, 2.9, M_PI}) {
    const auto out = evolve_free(psi, t, free);
    EXPECT_NEAR(orientation(out, Molecule::first), std::cos(2.0 * t) / std::sqrt(3.0), 1e-13);
    EXPECT_NEAR(orientation(out, Molecule::second), 0.0, 1e-15);
  }
}

TEST(EvolveFree, MatchesDenseExponential) {
  for (auto m : {std::optional<int>{}, std::optional<int>{0}}) {
    auto basis = make_basis(2, m);
    const auto h0 = build_pieces(*basis, 0.3).field_free();
    const FreePropagator free(h0);
    const auto psi = random_state(basis, 11);
    const StateVector ref = oracle::dense_exponential(psi.coeffs, Eigen::MatrixXcd(h0.data), 1.7);
    EXPECT_LT(max_diff(free.apply(psi.coeffs, 1.7), ref), 1e-12);
  }
}

TEST(EvolveFree, BlocksFollowMSectors) {
  const FreePropagator free(build_pieces(TwoRotorBasis(3), 0.1).field_free());
  EXPECT_EQ(free.dim(), 256u);
  EXPECT_GE(free.block_count(), 7u);
  // the M = 0 sector splits further by exchange-free parity of l + l'
  EXPECT_LE(free.largest_block(), TwoRotorBasis(3, 0).size());
}

TEST(EvolveFree, ConservesEnergy) {
  auto basis = make_basis(6, 0);
  const auto h0 = build_pieces(*basis, 0.132).field_free();
  const FreePropagator free(h0);
  const auto psi = random_state(basis, 3);
  const double e0 = expectation(h0, psi.coeffs);
  for (double t : {0.5, 13.0, 271.0}) {
    const double e = expectation(h0, free.apply(psi.coeffs, t));
    EXPECT_LE(std::abs(e - e0), 1e-10 * std::abs(e0));
  }
}

TEST(PulseWindow, NoKickMatchesFreeEvolution) {
  auto basis = make_basis(4, 0);
  const auto pieces = build_pieces(*basis, 0.132);
  const auto pulse = nai_pulse(0.0);
  const auto cfg = IntegratorConfig::defaults_for(pulse);
  auto psi = random_state(basis, 5);
  psi.t = pulse.t0_red - 5.0 * pulse.sigma_red;
  const double t_b = pulse.t0_red + 5.0 * pulse.sigma_red;
  const auto result = evolve_pulse_window(psi, t_b, pieces, pulse, cfg);
  const auto ref = evolve_free(psi, t_b - psi.t, pieces.field_free());
  EXPECT_LT(max_diff(result.psi.coeffs, ref.coeffs), 1e-10);
  EXPECT_EQ(result.psi.t, t_b);
}

TEST(PulseWindow, MatchesDensePropagator) {
  auto basis = make_basis(2, 0);
  const auto pieces = build_pieces(*basis, 0.132);
  const auto pulse = nai_pulse();
  const auto cfg = IntegratorConfig::defaults_for(pulse);
  auto psi = initial_state(basis);
  const double t_a = pulse.t0_red - 5.0 * pulse.sigma_red;
  const double t_b = pulse.t0_red + 5.0 * pulse.sigma_red;
  psi.t = t_a;
  const auto result = evolve_pulse_window(psi, t_b, pieces, pulse, cfg);

  const Eigen::MatrixXcd h0(pieces.field_free().data);
  const Eigen::MatrixXcd c(pieces.coupling.data);
  const auto sampler = [&](double t) -> Eigen::MatrixXcd { return h0 + pulse.coupling_factor(t) * c; };
  const StateVector ref = oracle::dense_propagate(psi.coeffs, sampler, t_a, t_b, 100000);
  EXPECT_LT(max_diff(result.psi.coeffs, ref), 1e-6);
  EXPECT_LT(result.norm_drift, 1e-8);
  EXPECT_GT(result.steps, 3000u);
}

TEST(PulseWindow, CoarseStepFailsLoudly) {
  auto basis = make_basis(4, 0);
  const auto pieces = build_pieces(*basis, 0.132);
  const auto pulse = nai_pulse();
  IntegratorConfig cfg = IntegratorConfig::defaults_for(pulse);
  cfg.dt_pulse = 2.0 * pulse.sigma_red;
  auto psi = initial_state(basis);
  psi.t = pulse.t0_red - 5.0 * pulse.sigma_red;
  try {
    evolve_pulse_window(psi, pulse.t0_red + 5.0 * pulse.sigma_red, pieces, pulse, cfg);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("dt"), std::string::npos);
  }
}

TEST(PulseWindow, InvalidConfigRejected) {
  IntegratorConfig cfg;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.dt_pulse = 1e-5;
  cfg.window_halfwidth = 2.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  EXPECT_NEAR(IntegratorConfig::defaults_for(nai_pulse()).dt_pulse, nai_pulse().sigma_red / 400.0, 1e-18);
}

struct StepHalving : ::testing::Test {
  std::shared_ptr<const TwoRotorBasis> basis = make_basis(4, 0);
  HamiltonianPieces pieces = build_pieces(*basis, 0.132);
  PulseSchedule pulse = nai_pulse();

  StateVector run(double dt, double t_a, double t_b, const StateVector& start) {
    PulseStepper stepper(pieces, pulse);
    StateVector psi = start;
    stepper.integrate(psi, t_a, t_b, dt);
    return psi;
  }
};

TEST_F(StepHalving, FourthOrderConvergence) {
  const double t_a = pulse.t0_red - 5.0 * pulse.sigma_red;
  const double t_b = pulse.t0_red + 5.0 * pulse.sigma_red;
  const StateVector start = initial_state(basis).coeffs;
  const double dt = pulse.sigma_red / 50.0;
  const StateVector a = run(dt, t_a, t_b, start);
  const StateVector b = run(dt / 2, t_a, t_b, start);
  const StateVector c = run(dt / 4, t_a, t_b, start);
  const double ratio = max_diff(a, b) / max_diff(b, c);
  EXPECT_GT(ratio, 13.0);
  EXPECT_LT(ratio, 19.0);
}

TEST_F(StepHalving, TimeReversalReturnsToStart) {
  const double t_a = pulse.t0_red - 5.0 * pulse.sigma_red;
  const double t_b = pulse.t0_red + 5.0 * pulse.sigma_red;
  const StateVector start = random_state(basis, 21).coeffs;
  const double dt = pulse.sigma_red / 400.0;
  const StateVector forward = run(dt, t_a, t_b, start);
  const StateVector back = run(dt, t_b, t_a, forward);
  EXPECT_LT(max_diff(back, start), 1e-6);
  EXPECT_GT(max_diff(forward, start), 1e-2);
}

TEST(Schedule, WindowsMergeWhenOverlapping) {
  auto pulse = nai_pulse();
  const auto cfg = IntegratorConfig::defaults_for(pulse);
  pulse.count = 3;
  pulse.period_red = 4.0 * pulse.sigma_red;
  auto w = pulse_windows(pulse, cfg, -1.0, 10.0);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_DOUBLE_EQ(w[0].first, pulse.t0_red - 5.0 * pulse.sigma_red);
  EXPECT_DOUBLE_EQ(w[0].second, pulse.center(2) + 5.0 * pulse.sigma_red);

  pulse.period_red = 1.0;
  w = pulse_windows(pulse, cfg, -1.0, 10.0);
  EXPECT_EQ(w.size(), 3u);
  w = pulse_windows(pulse, cfg, 0.0, 10.0);
  EXPECT_EQ(w[0].first, 0.0);
  w = pulse_windows(pulse, cfg, 0.0, pulse.center(1));
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[1].second, pulse.center(1));
}

TEST(Schedule, SampleCount) {
  SamplingPlan plan{10.0, 0.5};
  EXPECT_EQ(plan.count(), 21u);
  plan = {9.99, 0.5};
  EXPECT_EQ(plan.count(), 20u);
  plan = {1.0, 0.0};
  EXPECT_THROW(plan.count(), ConfigError);
}

TEST(Schedule, NoKickTrainEqualsFreeEvolution) {
  auto basis = make_basis(4, 0);
  const auto pieces = build_pieces(*basis, 0.132);
  const FreePropagator free(pieces.field_free());
  auto pulse = nai_pulse(0.0);
  pulse.count = 4;
  pulse.period_red = 1.0;
  const auto cfg = IntegratorConfig::defaults_for(pulse);
  const SamplingPlan sampling{4.5, 0.05};
  const auto psi0 = random_state(basis, 8);
  std::size_t seen = 0;
  double worst = 0.0;
  const auto stats = run_schedule(psi0, pieces, free, pulse, cfg, sampling, [&](const WaveFunction& psi) {
    worst = std::max(worst, max_diff(psi.coeffs, free.apply(psi0.coeffs, psi.t)));
    ++seen;
  });
  EXPECT_EQ(seen, sampling.count());
  EXPECT_EQ(stats.samples, sampling.count());
  EXPECT_EQ(stats.windows, 4u);
  EXPECT_LT(worst, 1e-10);
}

TEST(Schedule, FullBasisStaysInMZeroBlock) {
  auto basis = make_basis(4);
  const auto pieces = build_pieces(*basis, 0.132);
  const FreePropagator free(pieces.field_free());
  const auto pulse = nai_pulse();
  const auto cfg = IntegratorConfig::defaults_for(pulse);
  double leak = 0.0;
  double drift = 0.0;
  std::vector<double> times;
  run_schedule(initial_state(basis), pieces, free, pulse, cfg, {2.0, 0.01}, [&](const WaveFunction& psi) {
    double outside = 0.0;
    for (std::size_t k = 0; k < basis->size(); ++k) {
      if (basis->state(k).total_m() != 0) outside += std::norm(psi.coeffs(static_cast<Eigen::Index>(k)));
    }
    leak = std::max(leak, outside);
    drift = std::max(drift, std::abs(psi.norm() - 1.0));
    times.push_back(psi.t);
  });
  EXPECT_LE(leak, 1e-12);
  EXPECT_LE(drift, 1e-8);
  ASSERT_EQ(times.size(), 201u);
  for (std::size_t k = 0; k < times.size(); ++k) EXPECT_DOUBLE_EQ(times[k], 0.01 * static_cast<double>(k));
}

TEST(Schedule, MismatchedStateRejected) {
  auto basis = make_basis(2, 0);
  const auto pieces = build_pieces(*basis, 0.1);
  const FreePropagator free(pieces.field_free());
  const auto pulse = nai_pulse();
  EXPECT_THROW(run_schedule(initial_state(make_basis(3, 0)), pieces, free, pulse,
                            IntegratorConfig::defaults_for(pulse), {1.0, 0.1}, {}),
               std::logic_error);
}

}  // namespace
}  // namespace dipolar
