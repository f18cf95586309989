#include "dipolar/experiment.hpp"

#include "dipolar/errors.hpp"

namespace dipolar {

Experiment plan_experiment(const RunConfig& config) {
  config.validate();
  Experiment e;
  e.config = config;

  PhysicalConfig physical = config.physical();
  physical.period_s.reset();
  e.reduced = to_reduced(physical);
  e.reduced.period_red = config.period_reduced();

  e.pulse.kick_strength = e.reduced.kick_strength;
  e.pulse.sigma_red = e.reduced.sigma_red;
  e.pulse.t0_red = e.reduced.t0_red;
  e.pulse.carrier_omega = e.reduced.carrier_omega;
  e.pulse.period_red = e.reduced.period_red;
  e.pulse.count = config.pulse.count;
  e.pulse.validate();

  e.integrator = IntegratorConfig::defaults_for(e.pulse);
  e.time_unit_ps = time_unit_s(config.molecule.B_cm1) * 1e12;
  if (config.integrator.dt_pulse_fs) e.integrator.dt_pulse = *config.integrator.dt_pulse_fs * 1e-3 / e.time_unit_ps;
  e.integrator.norm_tolerance = config.integrator.norm_tolerance;
  e.integrator.validate();

  e.basis = std::make_shared<const TwoRotorBasis>(config.basis.l_max, config.basis.restrict_total_m);

  double total_ps = 400.0;
  if (config.output.total_time_ps) {
    total_ps = *config.output.total_time_ps;
  } else if (config.pulse.count > 1) {
    total_ps = config.pulse.count * e.reduced.period_red * e.time_unit_ps + 100.0;
  }
  e.sampling.t_end = total_ps / e.time_unit_ps;
  e.sampling.interval = config.output.sample_interval_ps / e.time_unit_ps;
  return e;
}

Trajectory simulate(const Experiment& experiment, const SampleSink& sink, const StateObserver& extra) {
  const HamiltonianPieces pieces = build_pieces(*experiment.basis, experiment.reduced.dipole_strength);
  const FreePropagator free(pieces.field_free());
  const SampleRecorder recorder(*experiment.basis, experiment.config.output.watch_populations,
                                experiment.config.output.entropy_log_base, experiment.time_unit_ps);

  Trajectory trajectory;
  trajectory.watch = recorder.watch();
  trajectory.samples.reserve(experiment.sampling.count());

  const StateObserver observer = [&](const WaveFunction& psi) {
    TimeSeriesSample s = recorder.measure(psi);
    if (sink) sink(s);
    trajectory.samples.push_back(std::move(s));
    if (extra) extra(psi);
  };

  trajectory.stats = run_schedule(initial_state(experiment.basis), pieces, free, experiment.pulse,
                                  experiment.integrator, experiment.sampling, observer);
  return trajectory;
}

}  // namespace dipolar
