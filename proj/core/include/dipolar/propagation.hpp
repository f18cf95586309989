#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dipolar/angular.hpp"
#include "dipolar/operators.hpp"
#include "dipolar/pulse.hpp"

namespace dipolar {

using StateVector = Eigen::VectorXcd;

// Coefficients c_{l m l' m'}(t) over a shared basis.
struct WaveFunction {
  std::shared_ptr<const TwoRotorBasis> basis;
  StateVector coeffs;
  double t = 0.0;

  double norm() const { return coeffs.norm(); }
};

enum class IntegratorMethod { rk4 };

struct IntegratorConfig {
  double dt_pulse = 0.0;          // reduced time step inside pulse windows
  double window_halfwidth = 5.0;  // in units of sigma
  double norm_tolerance = 1e-8;
  IntegratorMethod method = IntegratorMethod::rk4;

  // Throws ConfigError when dt_pulse <= 0 or window_halfwidth < 3.
  void validate() const;

  // dt_pulse = sigma / 400.
  static IntegratorConfig defaults_for(const PulseSchedule& pulse);
};

// c_{0000} = 1. Throws ConfigError if the basis lacks (0,0;0,0).
WaveFunction initial_state(std::shared_ptr<const TwoRotorBasis> basis);

// exp(-i H0 tau) through an eigendecomposition of each connected block of H0.
class FreePropagator {
 public:
  explicit FreePropagator(const OperatorMatrix& h0);

  std::size_t dim() const { return dim_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t largest_block() const;

  // Coefficients in the eigenbasis of H0, stored block by block.
  StateVector to_eigenbasis(const StateVector& psi) const;
  // exp(-i E tau) applied to eigenbasis coefficients, mapped back to the product basis.
  StateVector from_eigenbasis(const StateVector& spectral, double tau) const;

  StateVector apply(const StateVector& psi, double tau) const {
    return from_eigenbasis(to_eigenbasis(psi), tau);
  }

 private:
  struct Block {
    std::vector<Eigen::Index> indices;
    Eigen::VectorXd energies;
    Eigen::MatrixXd real_vectors;     // used when the block is real symmetric
    Eigen::MatrixXcd complex_vectors;
    bool is_real = true;
    Eigen::Index offset = 0;          // position inside the spectral vector
  };

  std::size_t dim_ = 0;
  std::vector<Block> blocks_;
};

WaveFunction evolve_free(const WaveFunction& psi, double duration, const FreePropagator& propagator);
WaveFunction evolve_free(const WaveFunction& psi, double duration, const OperatorMatrix& h0);

// Classical fourth-order Runge-Kutta for i dc/dt = H(t) c with H(t) from HamiltonianPieces.
class PulseStepper {
 public:
  PulseStepper(const HamiltonianPieces& pieces, const PulseSchedule& pulse);

  void step(StateVector& psi, double t, double dt);
  // Equal steps no longer than |dt_max| from t_from to t_to; t_to < t_from runs backwards.
  // Returns the number of steps taken.
  std::size_t integrate(StateVector& psi, double t_from, double t_to, double dt_max);

 private:
  void derivative(const StateVector& x, double t, StateVector& out);

  SparseOperator h0_;
  SparseOperator coupling_;
  PulseSchedule pulse_;
  StateVector k1_, k2_, k3_, k4_, tmp_, work_;
};

struct WindowResult {
  WaveFunction psi;
  double norm_drift = 0.0;
  std::size_t steps = 0;
};

// Steps psi from psi.t to t_b. Throws NumericalError when |norm - 1| exceeds the tolerance.
WindowResult evolve_pulse_window(const WaveFunction& psi, double t_b, const HamiltonianPieces& pieces,
                                 const PulseSchedule& pulse, const IntegratorConfig& cfg);

// Merged stepping intervals [t0 + kT - w sigma, t0 + kT + w sigma] clipped to [t_begin, t_end].
std::vector<std::pair<double, double>> pulse_windows(const PulseSchedule& pulse, const IntegratorConfig& cfg,
                                                     double t_begin, double t_end);

struct SamplingPlan {
  double t_end = 0.0;
  double interval = 0.0;

  // Samples at k * interval for k = 0..count()-1.
  std::size_t count() const;
  double time(std::size_t k) const { return static_cast<double>(k) * interval; }
};

using StateObserver = std::function<void(const WaveFunction&)>;

struct RunStats {
  double max_norm_drift = 0.0;
  std::size_t rk_steps = 0;
  std::size_t samples = 0;
  std::size_t windows = 0;
};

// Exact H0 evolution between pulse windows, RK4 inside them. The observer sees every sample in order.
RunStats run_schedule(const WaveFunction& initial, const HamiltonianPieces& pieces,
                      const FreePropagator& free, const PulseSchedule& pulse, const IntegratorConfig& cfg,
                      const SamplingPlan& sampling, const StateObserver& observer);

}  // namespace dipolar
