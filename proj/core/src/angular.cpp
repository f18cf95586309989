#include "dipolar/angular.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dipolar/errors.hpp"

namespace dipolar {

RotorState::RotorState(int l_, int m_) : l(l_), m(m_) {
  if (l_ < 0 || std::abs(m_) > l_) {
    throw std::invalid_argument("invalid rotor state (l=" + std::to_string(l_) +
                                ", m=" + std::to_string(m_) + ")");
  }
}

TwoRotorBasis::TwoRotorBasis(int l_max, std::optional<int> restrict_total_m)
    : l_max_(l_max), restrict_m_(restrict_total_m) {
  if (l_max < 0) throw ConfigError("l_max must be non-negative");
  single_dim_ = static_cast<std::size_t>((l_max + 1) * (l_max + 1));
  lookup_.assign(single_dim_ * single_dim_, npos);

  for (int l = 0; l <= l_max; ++l) {
    for (int m = -l; m <= l; ++m) {
      for (int lp = 0; lp <= l_max; ++lp) {
        for (int mp = -lp; mp <= lp; ++mp) {
          if (restrict_m_ && m + mp != *restrict_m_) continue;
          const PairState s{RotorState(l, m), RotorState(lp, mp)};
          lookup_[single_index(s.first) * single_dim_ + single_index(s.second)] = states_.size();
          states_.push_back(s);
        }
      }
    }
  }
  if (states_.empty()) throw ConfigError("basis is empty for the requested total-M restriction");
}

std::optional<std::size_t> TwoRotorBasis::index_of(const RotorState& a, const RotorState& b) const {
  if (a.l > l_max_ || b.l > l_max_) return std::nullopt;
  const std::size_t k = lookup_[single_index(a) * single_dim_ + single_index(b)];
  if (k == npos) return std::nullopt;
  return k;
}

std::optional<std::size_t> TwoRotorBasis::index_of(int l, int m, int lp, int mp) const {
  if (l < 0 || lp < 0 || std::abs(m) > l || std::abs(mp) > lp) return std::nullopt;
  return index_of(RotorState(l, m), RotorState(lp, mp));
}

double costheta_element(const RotorState& from, const RotorState& to) {
  if (to.m != from.m) return 0.0;
  const double m = from.m;
  auto up = [m](double l) {
    return std::sqrt(((l + 1) * (l + 1) - m * m) / ((2 * l + 1) * (2 * l + 3)));
  };
  if (to.l == from.l + 1) return up(from.l);
  if (to.l == from.l - 1) return up(to.l);
  return 0.0;
}

double sintheta_exp_element(const RotorState& from, int sign, const RotorState& to) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (to.m != from.m + sign) return 0.0;
  const double l = from.l;
  const double m = from.m;
  if (sign > 0) {
    if (to.l == from.l + 1) return -std::sqrt((l + m + 1) * (l + m + 2) / ((2 * l + 1) * (2 * l + 3)));
    if (to.l == from.l - 1) return std::sqrt((l - m) * (l - m - 1) / ((2 * l - 1) * (2 * l + 1)));
  } else {
    if (to.l == from.l + 1) return std::sqrt((l - m + 1) * (l - m + 2) / ((2 * l + 1) * (2 * l + 3)));
    if (to.l == from.l - 1) return -std::sqrt((l + m) * (l + m - 1) / ((2 * l - 1) * (2 * l + 1)));
  }
  return 0.0;
}

}  // namespace dipolar
