#include <cmath>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "dipolar/angular.hpp"
#include "oracles/quadrature.hpp"

namespace dipolar {
namespace {

using oracle::AngularSymbol;

const oracle::QuadratureGrid& grid() {
  static const oracle::QuadratureGrid g(64, 64);
  return g;
}

std::vector<RotorState> states_up_to(int l_max) {
  std::vector<RotorState> out;
  for (int l = 0; l <= l_max; ++l) {
    for (int m = -l; m <= l; ++m) out.emplace_back(l, m);
  }
  return out;
}

TEST(Angular, CosThetaExamples) {
  EXPECT_NEAR(costheta_element({0, 0}, {1, 0}), 0.5773502692, 1e-10);
  EXPECT_EQ(costheta_element({0, 0}, {2, 0}), 0.0);
  EXPECT_NEAR(costheta_element({1, 1}, {2, 1}), 0.4472135955, 1e-10);
}

TEST(Angular, SinThetaExamples) {
  EXPECT_NEAR(sintheta_exp_element({0, 0}, +1, {1, 1}), -0.8164965809, 1e-10);
  EXPECT_EQ(sintheta_exp_element({0, 0}, +1, {1, 0}), 0.0);
  const double v = sintheta_exp_element({1, -1}, -1, {2, -2});
  const auto q = grid().element(AngularSymbol::sin_theta_exp_minus, {1, -1}, {2, -2});
  EXPECT_NE(v, 0.0);
  EXPECT_NEAR(v, q.real(), 1e-12);
  EXPECT_NEAR(q.imag(), 0.0, 1e-12);
}

TEST(Angular, LSquared) {
  EXPECT_EQ(l_squared_eigenvalue({0, 0}), 0.0);
  EXPECT_EQ(l_squared_eigenvalue({1, 0}), 2.0);
  EXPECT_EQ(l_squared_eigenvalue({3, -2}), 12.0);
}

TEST(Angular, InvalidStateRejected) {
  EXPECT_THROW(RotorState(1, 2), std::invalid_argument);
  EXPECT_THROW(RotorState(-1, 0), std::invalid_argument);
  EXPECT_THROW(sintheta_exp_element({0, 0}, 2, {1, 1}), std::invalid_argument);
}

TEST(Angular, Hermiticity) {
  const auto all = states_up_to(6);
  for (const auto& a : all) {
    for (const auto& b : all) {
      EXPECT_EQ(costheta_element(a, b), costheta_element(b, a));
      EXPECT_DOUBLE_EQ(sintheta_exp_element(a, +1, b), sintheta_exp_element(b, -1, a));
    }
  }
}

TEST(Angular, SelectionRules) {
  const auto all = states_up_to(5);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (costheta_element(a, b) != 0.0) {
        EXPECT_EQ(a.m, b.m);
        EXPECT_EQ(std::abs(a.l - b.l), 1);
      }
      for (int s : {-1, 1}) {
        if (sintheta_exp_element(a, s, b) != 0.0) {
          EXPECT_EQ(b.m, a.m + s);
          EXPECT_EQ(std::abs(a.l - b.l), 1);
        }
      }
    }
  }
}

TEST(Angular, ClosedFormsMatchQuadratureUpToL5) {
  const auto all = states_up_to(5);
  double worst = 0.0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      worst = std::max(worst, std::abs(costheta_element(a, b) - grid().element(AngularSymbol::cos_theta, a, b)));
      worst = std::max(worst, std::abs(sintheta_exp_element(a, +1, b) -
                                       grid().element(AngularSymbol::sin_theta_exp_plus, a, b)));
      worst = std::max(worst, std::abs(sintheta_exp_element(a, -1, b) -
                                       grid().element(AngularSymbol::sin_theta_exp_minus, a, b)));
    }
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(Angular, CompletenessAgainstCosSquared) {
  for (const auto& a : states_up_to(4)) {
    double sum = 0.0;
    for (const auto& b : states_up_to(a.l + 1)) sum += std::pow(costheta_element(a, b), 2);
    EXPECT_NEAR(sum, grid().element(AngularSymbol::cos2_theta, a, a).real(), 1e-10);
  }
}

TEST(TwoRotorBasis, FullSizeAndBijection) {
  for (int l_max : {0, 1, 2, 4}) {
    const TwoRotorBasis basis(l_max);
    EXPECT_EQ(basis.size(), static_cast<std::size_t>(std::pow(l_max + 1, 4)));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& s = basis.state(k);
      ASSERT_EQ(*basis.index_of(s.first, s.second), k);
    }
  }
}

TEST(TwoRotorBasis, LexicographicOrder) {
  const TwoRotorBasis basis(2);
  for (std::size_t k = 1; k < basis.size(); ++k) {
    const auto& p = basis.state(k - 1);
    const auto& q = basis.state(k);
    const auto key = [](const PairState& s) {
      return std::tuple(s.first.l, s.first.m, s.second.l, s.second.m);
    };
    EXPECT_LT(key(p), key(q));
  }
  EXPECT_EQ(*basis.index_of(0, 0, 0, 0), 0u);
  EXPECT_EQ(*basis.index_of(0, 0, 1, -1), 1u);
}

TEST(TwoRotorBasis, RestrictedBlock) {
  for (int M : {-2, 0, 1}) {
    const TwoRotorBasis basis(3, M);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      EXPECT_EQ(basis.state(k).total_m(), M);
      const auto& s = basis.state(k);
      EXPECT_EQ(*basis.index_of(s.first, s.second), k);
    }
  }
  // sum over m of (l_max + 1 - |m|)^2
  EXPECT_EQ(TwoRotorBasis(8, 0).size(), 489u);
  EXPECT_FALSE(TwoRotorBasis(2, 0).contains(1, 1, 1, 1));
  EXPECT_FALSE(TwoRotorBasis(2).contains(3, 0, 0, 0));
}

}  // namespace
}  // namespace dipolar
