#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "dipolar/propagation.hpp"

namespace dipolar {

// Schmidt coefficients lambda (squared singular values of the coefficient matrix), descending.
struct SchmidtSpectrum {
  std::vector<double> eigenvalues;
  double t = 0.0;

  double sum() const;
};

enum class LogBase { e, two, single_dim };

struct EntanglementRecord {
  double t = 0.0;
  double entropy = 0.0;
  std::size_t schmidt_rank_eps = 0;  // count of lambda > 1e-12
  double norm = 0.0;
};

// C[(l,m), (l',m')] = c_{l m l' m'}; entries outside a restricted basis are zero.
Eigen::MatrixXcd coefficient_matrix(const WaveFunction& psi);

// rho_1 = C C^dagger, the partial trace over molecule 2.
Eigen::MatrixXcd reduced_density_mol1(const WaveFunction& psi);

SchmidtSpectrum schmidt_spectrum(const WaveFunction& psi);

// -sum lambda log lambda; lambda below 1e-15 counts as zero.
double von_neumann_entropy(const SchmidtSpectrum& spectrum, LogBase base = LogBase::e);

EntanglementRecord entanglement_record(const WaveFunction& psi, LogBase base = LogBase::e);

}  // namespace dipolar
