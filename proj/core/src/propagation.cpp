#include "dipolar/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "dipolar/errors.hpp"

namespace dipolar {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

// Union-find over the sparsity graph of H0.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_norm(const StateVector& psi, double t, double tolerance, double& max_drift) {
  const double drift = std::abs(psi.norm() - 1.0);
  max_drift = std::max(max_drift, drift);
  if (drift > tolerance) {
    std::ostringstream msg;
    msg << "norm drift " << drift << " at t=" << t << " exceeds tolerance " << tolerance
        << "; reduce dt_pulse";
    throw NumericalError(msg.str());
  }
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt_pulse > 0.0)) throw ConfigError("dt_pulse must be positive");
  if (!(window_halfwidth >= 3.0)) throw ConfigError("window_halfwidth must be at least 3 sigma");
  if (!(norm_tolerance > 0.0)) throw ConfigError("norm_tolerance must be positive");
}

IntegratorConfig IntegratorConfig::defaults_for(const PulseSchedule& pulse) {
  IntegratorConfig cfg;
  cfg.dt_pulse = pulse.sigma_red / 400.0;
  return cfg;
}

WaveFunction initial_state(std::shared_ptr<const TwoRotorBasis> basis) {
  const auto ground = basis->index_of(0, 0, 0, 0);
  if (!ground) throw ConfigError("basis does not contain the ground state (0,0;0,0)");
  WaveFunction psi;
  psi.coeffs = StateVector::Zero(static_cast<Eigen::Index>(basis->size()));
  psi.coeffs(static_cast<Eigen::Index>(*ground)) = 1.0;
  psi.basis = std::move(basis);
  psi.t = 0.0;
  return psi;
}

FreePropagator::FreePropagator(const OperatorMatrix& h0) : dim_(h0.dim()) {
  const auto& m = h0.data;
  DisjointSets sets(dim_);
  for (Eigen::Index row = 0; row < m.outerSize(); ++row) {
    for (SparseOperator::InnerIterator it(m, row); it; ++it) {
      if (it.value() != Complex(0.0)) sets.unite(static_cast<std::size_t>(row), static_cast<std::size_t>(it.col()));
    }
  }

  std::vector<std::size_t> block_of_root(dim_, static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < dim_; ++k) {
    const std::size_t root = sets.find(k);
    if (block_of_root[root] == static_cast<std::size_t>(-1)) {
      block_of_root[root] = blocks_.size();
      blocks_.emplace_back();
    }
    blocks_[block_of_root[root]].indices.push_back(static_cast<Eigen::Index>(k));
  }

  std::vector<Eigen::Index> local(dim_, -1);
  Eigen::Index offset = 0;
  for (auto& block : blocks_) {
    const auto n = static_cast<Eigen::Index>(block.indices.size());
    for (Eigen::Index i = 0; i < n; ++i) local[block.indices[i]] = i;

    Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(n, n);
    bool is_real = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (SparseOperator::InnerIterator it(m, block.indices[i]); it; ++it) {
        dense(i, local[it.col()]) = it.value();
        if (it.value().imag() != 0.0) is_real = false;
      }
    }

    block.is_real = is_real;
    block.offset = offset;
    offset += n;
    if (is_real) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense.real());
      if (solver.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition of a field-free block of size " + std::to_string(n) + " failed");
      }
      block.energies = solver.eigenvalues();
      block.real_vectors = solver.eigenvectors();
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
      if (solver.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition of a field-free block of size " + std::to_string(n) + " failed");
      }
      block.energies = solver.eigenvalues();
      block.complex_vectors = solver.eigenvectors();
    }
  }
}

std::size_t FreePropagator::largest_block() const {
  std::size_t n = 0;
  for (const auto& b : blocks_) n = std::max(n, b.indices.size());
  return n;
}

StateVector FreePropagator::to_eigenbasis(const StateVector& psi) const {
  if (static_cast<std::size_t>(psi.size()) != dim_) throw std::logic_error("state dimension mismatch");
  StateVector out(psi.size());
  for (const auto& block : blocks_) {
    const auto n = static_cast<Eigen::Index>(block.indices.size());
    StateVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = psi(block.indices[i]);
    if (x.isZero(0.0)) {
      out.segment(block.offset, n).setZero();
    } else if (block.is_real) {
      out.segment(block.offset, n).noalias() = block.real_vectors.transpose() * x;
    } else {
      out.segment(block.offset, n).noalias() = block.complex_vectors.adjoint() * x;
    }
  }
  return out;
}

StateVector FreePropagator::from_eigenbasis(const StateVector& spectral, double tau) const {
  StateVector out(spectral.size());
  for (const auto& block : blocks_) {
    const auto n = static_cast<Eigen::Index>(block.indices.size());
    StateVector y = spectral.segment(block.offset, n);
    if (y.isZero(0.0)) {
      for (Eigen::Index i = 0; i < n; ++i) out(block.indices[i]) = 0.0;
      continue;
    }
    for (Eigen::Index i = 0; i < n; ++i) y(i) *= std::polar(1.0, -block.energies(i) * tau);
    StateVector x(n);
    if (block.is_real) {
      x.noalias() = block.real_vectors * y;
    } else {
      x.noalias() = block.complex_vectors * y;
    }
    for (Eigen::Index i = 0; i < n; ++i) out(block.indices[i]) = x(i);
  }
  return out;
}

WaveFunction evolve_free(const WaveFunction& psi, double duration, const FreePropagator& propagator) {
  if (duration < 0.0) throw std::invalid_argument("evolve_free needs a non-negative duration");
  WaveFunction out = psi;
  if (duration > 0.0) out.coeffs = propagator.apply(psi.coeffs, duration);
  out.t = psi.t + duration;
  return out;
}

WaveFunction evolve_free(const WaveFunction& psi, double duration, const OperatorMatrix& h0) {
  return evolve_free(psi, duration, FreePropagator(h0));
}

PulseStepper::PulseStepper(const HamiltonianPieces& pieces, const PulseSchedule& pulse)
    : h0_(pieces.field_free().data), coupling_(pieces.coupling.data), pulse_(pulse) {
  const auto n = h0_.rows();
  for (auto* v : {&k1_, &k2_, &k3_, &k4_, &tmp_, &work_}) v->resize(n);
}

void PulseStepper::derivative(const StateVector& x, double t, StateVector& out) {
  out.noalias() = h0_ * x;
  const double g = pulse_.coupling_factor(t);
  if (g != 0.0) {
    work_.noalias() = coupling_ * x;
    out += g * work_;
  }
  out *= kMinusI;
}

void PulseStepper::step(StateVector& psi, double t, double dt) {
  derivative(psi, t, k1_);
  tmp_ = psi + (0.5 * dt) * k1_;
  derivative(tmp_, t + 0.5 * dt, k2_);
  tmp_ = psi + (0.5 * dt) * k2_;
  derivative(tmp_, t + 0.5 * dt, k3_);
  tmp_ = psi + dt * k3_;
  derivative(tmp_, t + dt, k4_);
  psi += (dt / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
}

std::size_t PulseStepper::integrate(StateVector& psi, double t_from, double t_to, double dt_max) {
  const double span = t_to - t_from;
  if (span == 0.0) return 0;
  const auto n = static_cast<std::size_t>(std::ceil(std::abs(span) / std::abs(dt_max) - 1e-9));
  const std::size_t steps = std::max<std::size_t>(n, 1);
  const double dt = span / static_cast<double>(steps);
  for (std::size_t k = 0; k < steps; ++k) step(psi, t_from + static_cast<double>(k) * dt, dt);
  return steps;
}

WindowResult evolve_pulse_window(const WaveFunction& psi, double t_b, const HamiltonianPieces& pieces,
                                 const PulseSchedule& pulse, const IntegratorConfig& cfg) {
  cfg.validate();
  if (!(t_b > psi.t)) throw std::invalid_argument("pulse window must end after the current time");
  PulseStepper stepper(pieces, pulse);
  WindowResult result{psi, 0.0, 0};
  result.steps = stepper.integrate(result.psi.coeffs, psi.t, t_b, cfg.dt_pulse);
  result.psi.t = t_b;
  double max_drift = 0.0;
  result.norm_drift = std::abs(result.psi.norm() - 1.0);
  check_norm(result.psi.coeffs, t_b, cfg.norm_tolerance, max_drift);
  return result;
}

std::vector<std::pair<double, double>> pulse_windows(const PulseSchedule& pulse, const IntegratorConfig& cfg,
                                                     double t_begin, double t_end) {
  std::vector<std::pair<double, double>> windows;
  const double half = cfg.window_halfwidth * pulse.sigma_red;
  for (int k = 0; k < pulse.count; ++k) {
    double a = std::max(pulse.center(k) - half, t_begin);
    double b = std::min(pulse.center(k) + half, t_end);
    if (!(b > a)) continue;
    if (!windows.empty() && a <= windows.back().second) {
      windows.back().second = std::max(windows.back().second, b);
    } else {
      windows.emplace_back(a, b);
    }
  }
  return windows;
}

std::size_t SamplingPlan::count() const {
  if (!(interval > 0.0)) throw ConfigError("sample interval must be positive");
  if (t_end < 0.0) throw ConfigError("total time must be non-negative");
  return static_cast<std::size_t>(std::floor(t_end / interval + 1e-9)) + 1;
}

RunStats run_schedule(const WaveFunction& initial, const HamiltonianPieces& pieces,
                      const FreePropagator& free, const PulseSchedule& pulse, const IntegratorConfig& cfg,
                      const SamplingPlan& sampling, const StateObserver& observer) {
  pulse.validate();
  cfg.validate();
  pieces.check_consistent();
  if (free.dim() != pieces.dim() || static_cast<std::size_t>(initial.coeffs.size()) != pieces.dim()) {
    throw std::logic_error("propagator, pieces and state disagree on the basis dimension");
  }

  RunStats stats;
  const std::size_t n_samples = sampling.count();
  std::size_t next = 0;
  WaveFunction psi = initial;

  auto emit = [&](const StateVector& coeffs, double t) {
    if (!observer) return;
    WaveFunction snapshot{psi.basis, coeffs, t};
    observer(snapshot);
  };

  while (next < n_samples && sampling.time(next) < psi.t) ++next;
  if (next < n_samples && sampling.time(next) == psi.t) {
    emit(psi.coeffs, psi.t);
    ++next;
    ++stats.samples;
  }

  auto free_to = [&](double t_stop) {
    if (!(t_stop > psi.t)) return;
    const StateVector spectral = free.to_eigenbasis(psi.coeffs);
    while (next < n_samples && sampling.time(next) <= t_stop) {
      const double ts = sampling.time(next);
      emit(free.from_eigenbasis(spectral, ts - psi.t), ts);
      ++next;
      ++stats.samples;
    }
    psi.coeffs = free.from_eigenbasis(spectral, t_stop - psi.t);
    psi.t = t_stop;
  };

  PulseStepper stepper(pieces, pulse);
  for (const auto& [a, b] : pulse_windows(pulse, cfg, psi.t, sampling.t_end)) {
    free_to(a);
    ++stats.windows;
    while (next < n_samples && sampling.time(next) <= b) {
      const double ts = sampling.time(next);
      stats.rk_steps += stepper.integrate(psi.coeffs, psi.t, ts, cfg.dt_pulse);
      psi.t = ts;
      check_norm(psi.coeffs, psi.t, cfg.norm_tolerance, stats.max_norm_drift);
      emit(psi.coeffs, ts);
      ++next;
      ++stats.samples;
    }
    stats.rk_steps += stepper.integrate(psi.coeffs, psi.t, b, cfg.dt_pulse);
    psi.t = b;
    check_norm(psi.coeffs, psi.t, cfg.norm_tolerance, stats.max_norm_drift);
  }
  free_to(sampling.t_end);
  return stats;
}

}  // namespace dipolar
