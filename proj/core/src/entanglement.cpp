#include "dipolar/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "dipolar/errors.hpp"

namespace dipolar {

namespace {
constexpr double kClip = 1e-15;
constexpr double kRankEps = 1e-12;
}  // namespace

double SchmidtSpectrum::sum() const {
  return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
}

Eigen::MatrixXcd coefficient_matrix(const WaveFunction& psi) {
  const auto& basis = *psi.basis;
  const auto d = static_cast<Eigen::Index>(basis.single_dim());
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& s = basis.state(k);
    c(static_cast<Eigen::Index>(single_index(s.first)), static_cast<Eigen::Index>(single_index(s.second))) =
        psi.coeffs(static_cast<Eigen::Index>(k));
  }
  return c;
}

Eigen::MatrixXcd reduced_density_mol1(const WaveFunction& psi) {
  const Eigen::MatrixXcd c = coefficient_matrix(psi);
  return c * c.adjoint();
}

SchmidtSpectrum schmidt_spectrum(const WaveFunction& psi) {
  const Eigen::MatrixXcd c = coefficient_matrix(psi);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(c);
  if (svd.info() != Eigen::Success) throw NumericalError("singular value decomposition failed");
  const Eigen::VectorXd sv = svd.singularValues();
  SchmidtSpectrum out;
  out.t = psi.t;
  out.eigenvalues.resize(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index i = 0; i < sv.size(); ++i) out.eigenvalues[static_cast<std::size_t>(i)] = sv(i) * sv(i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

double von_neumann_entropy(const SchmidtSpectrum& spectrum, LogBase base) {
  double s = 0.0;
  for (double lambda : spectrum.eigenvalues) {
    if (lambda < kClip) continue;
    s -= lambda * std::log(lambda);
  }
  switch (base) {
    case LogBase::e:
      break;
    case LogBase::two:
      s /= std::log(2.0);
      break;
    case LogBase::single_dim:
      if (spectrum.eigenvalues.size() > 1) s /= std::log(static_cast<double>(spectrum.eigenvalues.size()));
      break;
  }
  // -lambda log lambda is non-negative term by term; this only removes a signed zero.
  return std::max(s, 0.0);
}

EntanglementRecord entanglement_record(const WaveFunction& psi, LogBase base) {
  const SchmidtSpectrum spectrum = schmidt_spectrum(psi);
  EntanglementRecord r;
  r.t = psi.t;
  r.entropy = von_neumann_entropy(spectrum, base);
  r.schmidt_rank_eps = static_cast<std::size_t>(
      std::count_if(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(), [](double l) { return l > kRankEps; }));
  r.norm = psi.norm();
  return r;
}

}  // namespace dipolar
