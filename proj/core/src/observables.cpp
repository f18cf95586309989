#include "dipolar/observables.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <unsupported/Eigen/FFT>

#include "dipolar/errors.hpp"

namespace dipolar {

double orientation(const WaveFunction& psi, Molecule which) {
  const auto& basis = *psi.basis;
  double sum = 0.0;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Complex c = psi.coeffs(static_cast<Eigen::Index>(col));
    if (c == Complex(0.0)) continue;
    const auto& s = basis.state(col);
    const RotorState& moving = which == Molecule::first ? s.first : s.second;
    // Only the upward partner; the downward term is its complex conjugate.
    const int l_up = moving.l + 1;
    if (l_up > basis.l_max()) continue;
    const RotorState up(l_up, moving.m);
    const auto row = which == Molecule::first ? basis.index_of(up, s.second) : basis.index_of(s.first, up);
    if (!row) continue;
    const Complex d = psi.coeffs(static_cast<Eigen::Index>(*row));
    sum += 2.0 * costheta_element(moving, up) * (std::conj(d) * c).real();
  }
  return sum;
}

double population(const WaveFunction& psi, int l, int m, int lp, int mp) {
  const auto k = psi.basis->index_of(l, m, lp, mp);
  if (!k) {
    throw QueryError("state (" + std::to_string(l) + "," + std::to_string(m) + ";" + std::to_string(lp) + "," +
                     std::to_string(mp) + ") is not in the basis");
  }
  return std::norm(psi.coeffs(static_cast<Eigen::Index>(*k)));
}

double rotational_energy(const WaveFunction& psi) {
  const auto& basis = *psi.basis;
  double e = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& s = basis.state(k);
    e += std::norm(psi.coeffs(static_cast<Eigen::Index>(k))) *
         (l_squared_eigenvalue(s.first) + l_squared_eigenvalue(s.second));
  }
  return e;
}

SampleRecorder::SampleRecorder(const TwoRotorBasis& basis, std::vector<WatchEntry> watch, LogBase base,
                               double time_unit_ps)
    : watch_(std::move(watch)), base_(base), time_unit_ps_(time_unit_ps) {
  for (const auto& w : watch_) {
    const auto k = basis.index_of(w.l, w.m, w.lp, w.mp);
    if (!k) {
      throw QueryError("watched state (" + std::to_string(w.l) + "," + std::to_string(w.m) + ";" +
                       std::to_string(w.lp) + "," + std::to_string(w.mp) + ") is not in the basis");
    }
    watch_index_.push_back(*k);
  }
}

TimeSeriesSample SampleRecorder::measure(const WaveFunction& psi) const {
  TimeSeriesSample s;
  s.t_red = psi.t;
  s.t_ps = psi.t * time_unit_ps_;
  s.cos1 = orientation(psi, Molecule::first);
  s.cos2 = orientation(psi, Molecule::second);
  s.populations.reserve(watch_index_.size());
  for (std::size_t k : watch_index_) s.populations.push_back(std::norm(psi.coeffs(static_cast<Eigen::Index>(k))));
  s.energy_rot = rotational_energy(psi);
  s.entropy = von_neumann_entropy(schmidt_spectrum(psi), base_);
  s.norm = psi.norm();
  return s;
}

std::vector<double> Trajectory::cos1() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.cos1);
  return out;
}

std::vector<double> Trajectory::entropy() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.entropy);
  return out;
}

std::vector<double> Trajectory::times_red() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.t_red);
  return out;
}

namespace {

double lagged_correlation(const std::vector<double>& x, std::size_t lag) {
  const std::size_t n = x.size() - lag;
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += x[i];
    mb += x[i + lag];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = x[i] - ma;
    const double b = x[i + lag] - mb;
    sab += a * b;
    saa += a * a;
    sbb += b * b;
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

double spectral_entropy(const std::vector<double>& x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  std::vector<double> centred(x.size());
  std::transform(x.begin(), x.end(), centred.begin(), [mean](double v) { return v - mean; });

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, centred);

  const std::size_t half = x.size() / 2;
  std::vector<double> power(half);
  double total = 0.0;
  for (std::size_t k = 1; k <= half; ++k) {
    power[k - 1] = std::norm(spectrum[k]);
    total += power[k - 1];
  }
  if (total == 0.0) return 0.0;
  double h = 0.0;
  for (double p : power) {
    const double q = p / total;
    if (q > 0.0) h -= q * std::log(q);
  }
  return h;
}

double least_squares_slope(const std::vector<double>& y) {
  const std::size_t n = y.size();
  if (n < 2) return 0.0;
  const double xm = 0.5 * static_cast<double>(n - 1);
  double ym = 0.0;
  for (double v : y) ym += v;
  ym /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = static_cast<double>(i) - xm;
    sxy += dx * (y[i] - ym);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace

RegularityMetrics regularity_metrics(const RegularityInput& input) {
  const auto& x = input.orientation;
  if (x.size() < 64) throw QueryError("regularity metrics need at least 64 samples");
  if (!(input.sample_interval > 0.0)) throw QueryError("sample interval must be positive");

  RegularityMetrics out;
  const auto min_lag = static_cast<std::size_t>(
      std::max(1.0, std::ceil(0.5 * input.revival_period / input.sample_interval - 1e-9)));
  const std::size_t max_lag = x.size() / 2;
  if (min_lag > max_lag) throw QueryError("series is shorter than the revival period");
  out.autocorr_peak = -1.0;
  for (std::size_t lag = min_lag; lag <= max_lag; ++lag) {
    out.autocorr_peak = std::max(out.autocorr_peak, lagged_correlation(x, lag));
  }
  out.spectral_entropy = spectral_entropy(x);
  out.energy_growth_rate = least_squares_slope(input.energy_per_pulse);
  return out;
}

}  // namespace dipolar
