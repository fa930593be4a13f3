#pragma once

// Weyl-Heisenberg group H_d and the symplectic action of its Clifford
// normalizer.
//
// Exact matrices live over Q(ω_{4d}): it holds ω_d, ω_{2d}, i = ω_{4d}^d and
// √d, so every matrix built here shares one scalar tower per dimension.
//
// Conventions: D(a,b) = X^a Z^b.  The Fourier matrix F realizes
// (a,b) -> (-b,a), i.e. F X F† = Z and F Z F† = X^{-1}; the phase matrix P
// realizes (a,b) -> (a, a+b).  A symplectic S acts on column vectors (a,b)ᵗ.

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "whframes/algebra.hpp"
#include "whframes/exact_linalg.hpp"

namespace whframes::group {

using algebra::AlgebraicNumber;
using algebra::ExactMatrix;
using algebra::ExactVector;
using algebra::TowerPtr;

/// ω_{2d}^c X^a Z^b with 0 <= a,b < d and 0 <= c < 2d.
struct HeisenbergElement {
  int d = 2;
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

/// Reduces the exponents into range.
HeisenbergElement make_heisenberg(int d, long long a, long long b, long long c = 0);
HeisenbergElement h_identity(int d);
HeisenbergElement h_mul(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement h_inverse(const HeisenbergElement& g);
HeisenbergElement h_pow(const HeisenbergElement& g, long long e);
bool h_commutes(const HeisenbergElement& g, const HeisenbergElement& h);

/// Q(ω_{4d}).
TowerPtr group_tower(int d);
/// ω_{4d}^k in group_tower(d).
AlgebraicNumber omega4d(int d, long long k);
/// ω_d^k in group_tower(d).
AlgebraicNumber omega_d(int d, long long k);
/// The positive square root of d in group_tower(d).
AlgebraicNumber sqrt_dimension(int d);

ExactMatrix shift_matrix(int d);
ExactMatrix phase_matrix(int d);
ExactMatrix dft_matrix(int d);
ExactMatrix p_matrix(int d);
ExactMatrix h_to_matrix(const HeisenbergElement& g);

Eigen::MatrixXcd shift_matrix_numeric(int d);
Eigen::MatrixXcd phase_matrix_numeric(int d);
Eigen::MatrixXcd dft_matrix_numeric(int d);
Eigen::MatrixXcd p_matrix_numeric(int d);
Eigen::MatrixXcd h_to_matrix_numeric(const HeisenbergElement& g);
/// X^a Z^b applied to v without forming the matrix.
Eigen::VectorXcd apply_displacement(int a, int b, const Eigen::VectorXcd& v);
ExactVector apply_displacement(int a, int b, const ExactVector& v, const std::vector<AlgebraicNumber>& omega_powers);

/// [[m00, m01], [m10, m11]] over Z_d.
struct SymplecticMatrix {
  int d = 2;
  int m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  static SymplecticMatrix identity(int d);
  /// Checks det ≡ 1 (mod d).
  static SymplecticMatrix make(int d, long long m00, long long m01, long long m10, long long m11);

  int det() const;
  bool is_identity() const;
  SymplecticMatrix operator*(const SymplecticMatrix& o) const;
  SymplecticMatrix pow(long long e) const;
  SymplecticMatrix inverse() const;
  std::pair<int, int> apply(int a, int b) const;
  std::string to_string() const;

  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;
  friend auto operator<=>(const SymplecticMatrix&, const SymplecticMatrix&) = default;
};

/// Symplectic matrices of the Fourier and phase generators.
SymplecticMatrix fourier_symplectic(int d);
SymplecticMatrix phase_symplectic(int d);

constexpr int kMaxEnumerationDimension = 12;

/// All of SL(2, Z_d), sorted.  Requires 2 <= d <= 12.
std::vector<SymplecticMatrix> sl2_elements(int d);
/// The S != I with S^3 = I, sorted.
std::vector<SymplecticMatrix> order3_symplectics(int d);

/// Shortest word over {'F','P'} whose product equals S (breadth-first, F tried first).
std::string symplectic_word(const SymplecticMatrix& s);

/// A unitary whose conjugation action on H_d modulo phases is S.
ExactMatrix clifford_unitary(const SymplecticMatrix& s);
Eigen::MatrixXcd clifford_unitary_numeric(const SymplecticMatrix& s);

/// True if U D(a,b) U† is a scalar multiple of D(S(a,b)) for D = X and D = Z.
bool realizes_action(const ExactMatrix& u, const SymplecticMatrix& s);
bool realizes_action(const Eigen::MatrixXcd& u, const SymplecticMatrix& s, double tol = 1e-10);

}  // namespace whframes::group
