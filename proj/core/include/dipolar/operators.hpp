#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include <Eigen/Sparse>

#include "dipolar/angular.hpp"
#include "dipolar/pulse.hpp"

namespace dipolar {

using Complex = std::complex<double>;
using SparseOperator = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

// Sparse matrix over a TwoRotorBasis. Hermitian operators store both triangles.
struct OperatorMatrix {
  SparseOperator data;
  bool hermitian = false;

  std::size_t dim() const { return static_cast<std::size_t>(data.rows()); }

  // max |H_ij - conj(H_ji)| over stored entries.
  double hermiticity_defect() const;
};

// Intermolecular axis and laser polarization. Only z/z is supported.
struct Geometry {
  std::array<double, 3> e_R_axis{0.0, 0.0, 1.0};
  std::array<double, 3> polarization_axis{0.0, 0.0, 1.0};

  // Throws ConfigError for non-unit axes or anything other than both along z.
  void validate() const;
};

// Diagonal l(l+1) + l'(l'+1), in units of B.
OperatorMatrix build_rotor_term(const TwoRotorBasis& basis);

// dipole_strength * [ (S+ (x) S'- + S- (x) S'+)/2 - 2 cos (x) cos' ], S+- = sin(theta) exp(+-i phi).
OperatorMatrix build_dipole_term(const TwoRotorBasis& basis, double dipole_strength,
                                 const Geometry& geometry = {});

// cos(theta) (x) 1 + 1 (x) cos(theta').
OperatorMatrix build_orientation_coupling(const TwoRotorBasis& basis);

enum class Molecule { first, second };

// cos(theta) embedded on one factor.
OperatorMatrix build_single_orientation(const TwoRotorBasis& basis, Molecule which);

struct HamiltonianPieces {
  OperatorMatrix rotor;
  OperatorMatrix dipole;
  OperatorMatrix coupling;

  std::size_t dim() const { return rotor.dim(); }
  // Throws std::logic_error if the pieces were built over different bases.
  void check_consistent() const;
  // rotor + dipole
  OperatorMatrix field_free() const;
};

HamiltonianPieces build_pieces(const TwoRotorBasis& basis, double dipole_strength,
                               const Geometry& geometry = {});

// H(t) = rotor + dipole - kick * envelope(t) * cos(omega t) * coupling
OperatorMatrix hamiltonian_at(double t, const HamiltonianPieces& pieces, const PulseSchedule& pulse);

}  // namespace dipolar
