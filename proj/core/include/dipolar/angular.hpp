#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace dipolar {

// Quantum numbers (l, m) of a spherical harmonic Y_lm, |m| <= l.
struct RotorState {
  int l = 0;
  int m = 0;

  RotorState() = default;
  // Throws std::invalid_argument if l < 0 or |m| > l.
  RotorState(int l_, int m_);

  friend bool operator==(const RotorState&, const RotorState&) = default;
};

// One product state Y_lm(mol 1) Y_l'm'(mol 2).
struct PairState {
  RotorState first;
  RotorState second;

  int total_m() const { return first.m + second.m; }
  friend bool operator==(const PairState&, const PairState&) = default;
};

// Index of (l, m) inside the single-rotor space 0..(l_max+1)^2-1, ordered by l then m ascending.
inline std::size_t single_index(const RotorState& s) {
  return static_cast<std::size_t>(s.l * s.l + s.l + s.m);
}

// Product basis truncated at l_max, ordered lexicographically in (l, m, l', m').
// With restrict_total_m = M only states with m + m' = M are kept.
class TwoRotorBasis {
 public:
  explicit TwoRotorBasis(int l_max, std::optional<int> restrict_total_m = std::nullopt);

  int l_max() const { return l_max_; }
  std::optional<int> restrict_total_m() const { return restrict_m_; }
  std::size_t size() const { return states_.size(); }
  std::size_t single_dim() const { return single_dim_; }

  const PairState& state(std::size_t k) const { return states_[k]; }
  const std::vector<PairState>& states() const { return states_; }

  // Contiguous index of the product state, or nullopt if it is truncated or filtered out.
  std::optional<std::size_t> index_of(const RotorState& a, const RotorState& b) const;
  std::optional<std::size_t> index_of(int l, int m, int lp, int mp) const;

  bool contains(int l, int m, int lp, int mp) const { return index_of(l, m, lp, mp).has_value(); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  int l_max_;
  std::optional<int> restrict_m_;
  std::size_t single_dim_;
  std::vector<PairState> states_;
  std::vector<std::size_t> lookup_;  // single_index(a) * single_dim + single_index(b) -> index
};

// <to| cos(theta) |from> for Condon-Shortley spherical harmonics.
double costheta_element(const RotorState& from, const RotorState& to);

// <to| sin(theta) exp(i sign phi) |from>, sign = +1 or -1.
double sintheta_exp_element(const RotorState& from, int sign, const RotorState& to);

inline double l_squared_eigenvalue(const RotorState& s) {
  return static_cast<double>(s.l) * (s.l + 1);
}

}  // namespace dipolar
