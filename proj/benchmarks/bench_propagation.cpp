#include <benchmark/benchmark.h>

#include "dipolar/entanglement.hpp"
#include "dipolar/operators.hpp"
#include "dipolar/propagation.hpp"

namespace {

using namespace dipolar;

PulseSchedule nai_pulse() {
  PulseSchedule p;
  p.kick_strength = 386.2;
  p.sigma_red = 279e-15 / 4.4240e-11;
  p.t0_red = 1200e-15 / 4.4240e-11;
  p.carrier_omega = 250.0;
  return p;
}

std::optional<int> block(int64_t full) { return full ? std::nullopt : std::optional<int>(0); }

void BM_PulseStep(benchmark::State& state) {
  const TwoRotorBasis basis(static_cast<int>(state.range(0)), block(state.range(1)));
  const auto pieces = build_pieces(basis, 0.132);
  PulseStepper stepper(pieces, nai_pulse());
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(basis.size()));
  psi(0) = 1.0;
  const double dt = nai_pulse().sigma_red / 400.0;
  double t = nai_pulse().t0_red;
  for (auto _ : state) {
    stepper.step(psi, t, dt);
    t += dt;
    benchmark::DoNotOptimize(psi.data());
  }
  state.counters["dim"] = static_cast<double>(basis.size());
}
BENCHMARK(BM_PulseStep)->Args({8, 0})->Args({8, 1})->Args({10, 0});

void BM_FreePropagatorSetup(benchmark::State& state) {
  const TwoRotorBasis basis(static_cast<int>(state.range(0)), 0);
  const auto h0 = build_pieces(basis, 0.132).field_free();
  for (auto _ : state) {
    FreePropagator free(h0);
    benchmark::DoNotOptimize(free.block_count());
  }
}
BENCHMARK(BM_FreePropagatorSetup)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_FreeEvolution(benchmark::State& state) {
  const TwoRotorBasis basis(static_cast<int>(state.range(0)), 0);
  const FreePropagator free(build_pieces(basis, 0.132).field_free());
  StateVector psi = StateVector::Ones(static_cast<Eigen::Index>(basis.size())).normalized();
  const StateVector spectral = free.to_eigenbasis(psi);
  double tau = 0.0;
  for (auto _ : state) {
    tau += 0.011;
    benchmark::DoNotOptimize(free.from_eigenbasis(spectral, tau).data());
  }
}
BENCHMARK(BM_FreeEvolution)->Arg(8)->Arg(10);

void BM_SchmidtEntropy(benchmark::State& state) {
  auto basis = std::make_shared<const TwoRotorBasis>(static_cast<int>(state.range(0)), 0);
  WaveFunction psi{basis, StateVector::Ones(static_cast<Eigen::Index>(basis->size())).normalized(), 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_record(psi).entropy);
}
BENCHMARK(BM_SchmidtEntropy)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
