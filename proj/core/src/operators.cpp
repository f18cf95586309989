#include "dipolar/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dipolar/errors.hpp"

namespace dipolar {

namespace {

using Triplet = Eigen::Triplet<Complex>;

OperatorMatrix from_triplets(std::size_t dim, const std::vector<Triplet>& triplets, bool hermitian) {
  OperatorMatrix op;
  op.data.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  op.data.setFromTriplets(triplets.begin(), triplets.end());
  op.data.makeCompressed();
  op.hermitian = hermitian;
  return op;
}

// Neighbours of a single-rotor state reachable by a rank-1 operator changing m by dm.
template <typename F>
void for_each_neighbour(const RotorState& s, int dm, int l_max, F&& f) {
  for (int dl : {-1, 1}) {
    const int l = s.l + dl;
    const int m = s.m + dm;
    if (l < 0 || l > l_max || std::abs(m) > l) continue;
    f(RotorState(l, m));
  }
}

}  // namespace

double OperatorMatrix::hermiticity_defect() const {
  const SparseOperator adj = data.adjoint();
  const SparseOperator diff = data - adj;
  double worst = 0.0;
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k) {
    for (SparseOperator::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst;
}

void Geometry::validate() const {
  auto is_z = [](const std::array<double, 3>& v) { return v[0] == 0.0 && v[1] == 0.0 && v[2] == 1.0; };
  auto norm = [](const std::array<double, 3>& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); };
  if (std::abs(norm(e_R_axis) - 1.0) > 1e-12 || std::abs(norm(polarization_axis) - 1.0) > 1e-12) {
    throw ConfigError("geometry axes must be unit vectors");
  }
  if (!is_z(e_R_axis) || !is_z(polarization_axis)) {
    throw ConfigError("only e_R = z and polarization = z are supported");
  }
}

void PulseSchedule::validate() const {
  if (!(sigma_red > 0.0)) throw ConfigError("pulse width must be positive");
  if (count < 1) throw ConfigError("pulse count must be at least 1");
  if (count > 1 && !(period_red > 0.0)) throw ConfigError("a pulse train needs a positive period");
  if (!(kick_strength >= 0.0)) throw ConfigError("kick strength must be non-negative");
}

double PulseSchedule::envelope(double t) const {
  double sum = 0.0;
  for (int k = 0; k < count; ++k) {
    const double x = (t - center(k)) / sigma_red;
    sum += std::exp(-x * x);
  }
  return sum;
}

double PulseSchedule::coupling_factor(double t) const {
  if (kick_strength == 0.0) return 0.0;
  return -kick_strength * envelope(t) * std::cos(carrier_omega * t);
}

OperatorMatrix build_rotor_term(const TwoRotorBasis& basis) {
  std::vector<Triplet> triplets;
  triplets.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& s = basis.state(k);
    const double e = l_squared_eigenvalue(s.first) + l_squared_eigenvalue(s.second);
    triplets.emplace_back(k, k, e);
  }
  return from_triplets(basis.size(), triplets, true);
}

OperatorMatrix build_dipole_term(const TwoRotorBasis& basis, double dipole_strength,
                                 const Geometry& geometry) {
  if (!(dipole_strength >= 0.0)) throw ConfigError("dipole_strength must be non-negative");
  geometry.validate();

  std::vector<Triplet> triplets;
  if (dipole_strength == 0.0) return from_triplets(basis.size(), triplets, true);

  const int l_max = basis.l_max();
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& src = basis.state(col);
    // dm on molecule 1, -dm on molecule 2 keeps m + m' fixed.
    for (int dm : {-1, 0, 1}) {
      for_each_neighbour(src.first, dm, l_max, [&](const RotorState& a) {
        for_each_neighbour(src.second, -dm, l_max, [&](const RotorState& b) {
          const auto row = basis.index_of(a, b);
          if (!row) return;
          double v = 0.0;
          if (dm == 0) {
            v = -2.0 * costheta_element(src.first, a) * costheta_element(src.second, b);
          } else {
            v = 0.5 * sintheta_exp_element(src.first, dm, a) * sintheta_exp_element(src.second, -dm, b);
          }
          if (v != 0.0) triplets.emplace_back(*row, col, dipole_strength * v);
        });
      });
    }
  }
  return from_triplets(basis.size(), triplets, true);
}

OperatorMatrix build_single_orientation(const TwoRotorBasis& basis, Molecule which) {
  std::vector<Triplet> triplets;
  const int l_max = basis.l_max();
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& src = basis.state(col);
    const RotorState& moving = which == Molecule::first ? src.first : src.second;
    for_each_neighbour(moving, 0, l_max, [&](const RotorState& to) {
      const auto row = which == Molecule::first ? basis.index_of(to, src.second)
                                                : basis.index_of(src.first, to);
      if (row) triplets.emplace_back(*row, col, costheta_element(moving, to));
    });
  }
  return from_triplets(basis.size(), triplets, true);
}

OperatorMatrix build_orientation_coupling(const TwoRotorBasis& basis) {
  OperatorMatrix op = build_single_orientation(basis, Molecule::first);
  op.data += build_single_orientation(basis, Molecule::second).data;
  op.data.makeCompressed();
  return op;
}

void HamiltonianPieces::check_consistent() const {
  const auto n = rotor.data.rows();
  for (const auto* op : {&rotor, &dipole, &coupling}) {
    if (op->data.rows() != n || op->data.cols() != n) {
      throw std::logic_error("Hamiltonian pieces have mismatched dimensions");
    }
  }
}

OperatorMatrix HamiltonianPieces::field_free() const {
  check_consistent();
  OperatorMatrix h;
  h.data = rotor.data + dipole.data;
  h.data.makeCompressed();
  h.hermitian = rotor.hermitian && dipole.hermitian;
  return h;
}

HamiltonianPieces build_pieces(const TwoRotorBasis& basis, double dipole_strength,
                               const Geometry& geometry) {
  return {build_rotor_term(basis), build_dipole_term(basis, dipole_strength, geometry),
          build_orientation_coupling(basis)};
}

OperatorMatrix hamiltonian_at(double t, const HamiltonianPieces& pieces, const PulseSchedule& pulse) {
  OperatorMatrix h = pieces.field_free();
  const double g = pulse.coupling_factor(t);
  if (g != 0.0) {
    h.data += Complex(g, 0.0) * pieces.coupling.data;
    h.data.makeCompressed();
  }
  h.hermitian = h.hermitian && pieces.coupling.hermitian;
  return h;
}

}  // namespace dipolar
