#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <gtest/gtest.h>

#include "dipolar/entanglement.hpp"
#include "dipolar/operators.hpp"
#include "dipolar/propagation.hpp"
#include "helpers.hpp"

namespace dipolar {
namespace {

using testing::basis_state;
using testing::make_basis;
using testing::nai_pulse;
using testing::random_state;

WaveFunction bell_state() {
  auto basis = make_basis(1);
  auto psi = basis_state(basis, 0, 0, 1, 0);
  psi.coeffs(static_cast<Eigen::Index>(*basis->index_of(1, 0, 0, 0))) = 1.0;
  psi.coeffs /= std::sqrt(2.0);
  return psi;
}

Eigen::MatrixXcd random_unitary(Eigen::Index n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  return Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
}

TEST(Entanglement, ProductState) {
  const auto psi = basis_state(make_basis(2), 0, 0, 0, 0);
  const Eigen::MatrixXcd rho = reduced_density_mol1(psi);
  EXPECT_EQ(rho(0, 0), Complex(1.0));
  EXPECT_EQ(rho.cwiseAbs().sum(), 1.0);
  const auto spec = schmidt_spectrum(psi);
  EXPECT_NEAR(spec.eigenvalues.at(0), 1.0, 1e-15);
  for (std::size_t k = 1; k < spec.eigenvalues.size(); ++k) EXPECT_NEAR(spec.eigenvalues[k], 0.0, 1e-15);
  const auto rec = entanglement_record(psi);
  EXPECT_EQ(rec.entropy, 0.0);
  EXPECT_EQ(rec.schmidt_rank_eps, 1u);
}

TEST(Entanglement, BellState) {
  const auto psi = bell_state();
  const Eigen::MatrixXcd rho = reduced_density_mol1(psi);
  EXPECT_NEAR(rho(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(rho(2, 2).real(), 0.5, 1e-15);  // single index of (1,0)
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-15);
  const auto spec = schmidt_spectrum(psi);
  EXPECT_NEAR(spec.eigenvalues.at(0), 0.5, 1e-15);
  EXPECT_NEAR(spec.eigenvalues.at(1), 0.5, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(spec), std::log(2.0), 1e-12);
  EXPECT_NEAR(von_neumann_entropy(spec, LogBase::two), 1.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(spec, LogBase::single_dim), std::log(2.0) / std::log(4.0), 1e-12);
  EXPECT_EQ(entanglement_record(psi).schmidt_rank_eps, 2u);
}

TEST(Entanglement, EntropyOfGivenSpectra) {
  EXPECT_EQ(von_neumann_entropy({{1.0}, 0.0}), 0.0);
  EXPECT_NEAR(von_neumann_entropy({{0.5, 0.5}, 0.0}), 0.6931471806, 1e-10);
  EXPECT_NEAR(von_neumann_entropy({{0.25, 0.25, 0.25, 0.25}, 0.0}, LogBase::two), 2.0, 1e-14);
  EXPECT_EQ(von_neumann_entropy({{1.0, 1e-16, -1e-17}, 0.0}), 0.0);
}

TEST(Entanglement, SpectrumMatchesDenseEigensolve) {
  for (unsigned seed : {1u, 2u, 3u}) {
    const auto psi = random_state(make_basis(1), seed);
    const Eigen::MatrixXcd c = coefficient_matrix(psi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(c * c.adjoint());
    Eigen::VectorXd ref = eig.eigenvalues().reverse();
    const auto spec = schmidt_spectrum(psi);
    ASSERT_EQ(spec.eigenvalues.size(), 4u);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(spec.eigenvalues[k], ref(k), 1e-10);
    EXPECT_NEAR(spec.sum(), 1.0, 1e-10);
  }
}

TEST(Entanglement, CoefficientMatrixLayout) {
  auto basis = make_basis(2, 0);
  const auto psi = random_state(basis, 4);
  const Eigen::MatrixXcd c = coefficient_matrix(psi);
  ASSERT_EQ(c.rows(), 9);
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const auto& s = basis->state(k);
    EXPECT_EQ(c(static_cast<Eigen::Index>(single_index(s.first)), static_cast<Eigen::Index>(single_index(s.second))),
              psi.coeffs(static_cast<Eigen::Index>(k)));
  }
  EXPECT_EQ(c(single_index({1, 1}), single_index({1, 1})), Complex(0.0));
}

TEST(Entanglement, BothReducedDensitiesShareSpectrum) {
  const auto psi = random_state(make_basis(2), 9);
  const Eigen::MatrixXcd c = coefficient_matrix(psi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> one(c * c.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> two(c.transpose() * c.conjugate());
  EXPECT_LT((one.eigenvalues() - two.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Entanglement, LocalUnitaryInvariance) {
  auto basis = make_basis(2);
  const auto psi = random_state(basis, 12);
  const double s0 = entanglement_record(psi).entropy;
  const auto u = random_unitary(9, 100);
  const auto v = random_unitary(9, 200);
  const Eigen::MatrixXcd rotated = u * coefficient_matrix(psi) * v.transpose();
  WaveFunction out = psi;
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const auto& s = basis->state(k);
    out.coeffs(static_cast<Eigen::Index>(k)) = rotated(single_index(s.first), single_index(s.second));
  }
  EXPECT_NEAR(out.norm(), 1.0, 1e-12);
  EXPECT_LT(std::abs(entanglement_record(out).entropy - s0), 1e-9);
  EXPECT_GT(s0, 0.5);
}

TEST(Entanglement, Bounds) {
  for (unsigned seed = 0; seed < 5; ++seed) {
    const auto psi = random_state(make_basis(2), seed);
    const auto rec = entanglement_record(psi);
    EXPECT_GE(rec.entropy, 0.0);
    EXPECT_LE(rec.entropy, std::log(9.0) + 1e-12);
    EXPECT_LE(rec.entropy, std::log(static_cast<double>(rec.schmidt_rank_eps)) + 1e-12);
    EXPECT_LE(entanglement_record(psi, LogBase::single_dim).entropy, 1.0 + 1e-12);
    for (double l : schmidt_spectrum(psi).eigenvalues) {
      EXPECT_GE(l, 0.0);
      EXPECT_LE(l, 1.0);
    }
  }
}

TEST(Entanglement, UncoupledDrivingStaysUnentangled) {
  auto basis = make_basis(5, 0);
  const auto pieces = build_pieces(*basis, 0.0);
  const FreePropagator free(pieces.field_free());
  const auto pulse = nai_pulse();
  double worst = 0.0;
  run_schedule(initial_state(basis), pieces, free, pulse, IntegratorConfig::defaults_for(pulse), {3.0, 0.01},
               [&](const WaveFunction& psi) { worst = std::max(worst, entanglement_record(psi).entropy); });
  EXPECT_LT(worst, 1e-10);
}

}  // namespace
}  // namespace dipolar
