#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "dipolar/entanglement.hpp"
#include "dipolar/operators.hpp"
#include "dipolar/propagation.hpp"

namespace dipolar {

// Product state (l, m; l', m') whose population is tracked.
struct WatchEntry {
  int l = 0;
  int m = 0;
  int lp = 0;
  int mp = 0;

  friend bool operator==(const WatchEntry&, const WatchEntry&) = default;
};

struct TimeSeriesSample {
  double t_red = 0.0;
  double t_ps = 0.0;
  double cos1 = 0.0;
  double cos2 = 0.0;
  std::vector<double> populations;  // aligned with the watch list
  double energy_rot = 0.0;          // <L1^2 + L2^2>, units of B
  double entropy = 0.0;
  double norm = 0.0;
};

// <cos theta> of one molecule, summed directly over the basis.
double orientation(const WaveFunction& psi, Molecule which);

// |c_{l m l' m'}|^2. Throws QueryError if the state is not in the basis.
double population(const WaveFunction& psi, int l, int m, int lp, int mp);

double rotational_energy(const WaveFunction& psi);

// Measures every TimeSeriesSample field from a state snapshot.
class SampleRecorder {
 public:
  // Throws QueryError if a watch entry lies outside the basis.
  SampleRecorder(const TwoRotorBasis& basis, std::vector<WatchEntry> watch, LogBase base, double time_unit_ps);

  TimeSeriesSample measure(const WaveFunction& psi) const;
  const std::vector<WatchEntry>& watch() const { return watch_; }

 private:
  std::vector<WatchEntry> watch_;
  std::vector<std::size_t> watch_index_;
  LogBase base_;
  double time_unit_ps_;
};

struct Trajectory {
  std::vector<WatchEntry> watch;
  std::vector<TimeSeriesSample> samples;
  RunStats stats;

  std::vector<double> cos1() const;
  std::vector<double> entropy() const;
  std::vector<double> times_red() const;
};

struct RegularityInput {
  std::vector<double> orientation;       // uniformly sampled
  double sample_interval = 0.0;          // reduced time between samples
  double revival_period = 0.0;           // expected revival period, reduced time
  std::vector<double> energy_per_pulse;  // <L^2> after each pulse
};

struct RegularityMetrics {
  double autocorr_peak = 0.0;
  double spectral_entropy = 0.0;
  double energy_growth_rate = 0.0;
};

// autocorr_peak: max over lags in [revival/2, N/2] of the Pearson correlation between the series and
// its lagged copy. spectral_entropy: Shannon entropy (natural log) of the normalized power spectrum
// without the DC bin. energy_growth_rate: least-squares slope of energy against pulse index.
// Throws QueryError for fewer than 64 samples.
RegularityMetrics regularity_metrics(const RegularityInput& input);

}  // namespace dipolar
