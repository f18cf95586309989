#pragma once

#include <functional>
#include <memory>
#include <string>

#include "dipolar/config.hpp"
#include "dipolar/observables.hpp"
#include "dipolar/operators.hpp"
#include "dipolar/propagation.hpp"
#include "dipolar/units.hpp"

namespace dipolar {

// A RunConfig resolved into reduced units, ready to integrate. Fields may be adjusted before simulate().
struct Experiment {
  RunConfig config;
  ReducedParameters reduced;
  PulseSchedule pulse;
  IntegratorConfig integrator;
  std::shared_ptr<const TwoRotorBasis> basis;
  SamplingPlan sampling;
  double time_unit_ps = 0.0;
};

Experiment plan_experiment(const RunConfig& config);

using SampleSink = std::function<void(const TimeSeriesSample&)>;

// Runs the experiment, streaming each sample to sink as it is produced. If extra is set it also sees
// every sampled state. Throws NumericalError on norm-tolerance violations.
Trajectory simulate(const Experiment& experiment, const SampleSink& sink = {}, const StateObserver& extra = {});

}  // namespace dipolar
