#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "whframes/algebra.hpp"
#include "whframes/exact_linalg.hpp"
#include "whframes/group.hpp"

namespace whframes::sic {

using algebra::ExactVector;

struct Fiducial {
  int d = 0;
  std::variant<ExactVector, Eigen::VectorXcd> vec;
  bool normalized = false;

  bool is_exact() const { return vec.index() == 0; }
  const ExactVector& exact() const { return std::get<0>(vec); }
  /// Double embedding (entry-wise for exact vectors).
  Eigen::VectorXcd numeric() const;
  /// Tower id, or "complex64" for float vectors.
  std::string scalar_domain() const;
};

/// Checks <v|v> = 1 exactly to set the normalized flag.
Fiducial make_fiducial(ExactVector v);
/// normalized iff | |v| - 1 | <= tol.
Fiducial make_fiducial(Eigen::VectorXcd v, double tol = 1e-10);

/// The d² vectors X^a Z^b |φ0>, index a*d + b.
struct SicOrbit {
  int d = 0;
  std::variant<std::vector<ExactVector>, std::vector<Eigen::VectorXcd>> vectors;

  bool is_exact() const { return vectors.index() == 0; }
  std::size_t size() const;
};

SicOrbit heisenberg_orbit(const Fiducial& phi);

struct SicReport {
  int d = 0;
  bool exact = false;
  bool pass = false;
  double worst_deviation = 0.0;
  std::size_t pair_count = 0;
  std::string scalar_domain;
  /// first failing pair (orbit indices) if any
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
};

/// Exact orbits are checked with |<φj|φk>|² - 1/(d+1) == 0 over all pairs;
/// float orbits pass iff the worst deviation is at most tol.
SicReport verify_sic(const SicOrbit& orbit, double tol = 1e-10);

/// θ3 (v1..v6) over grassl_tower(), normalization checked exactly.
Fiducial grassl_fiducial();
Fiducial grassl_fiducial_numeric();

/// Σ_{j,k} |<φj|φk>|⁴ over ordered pairs including j = k.
double frame_potential(const std::vector<Eigen::VectorXcd>& vectors);
/// Frame potential of the Heisenberg orbit of a unit vector.
double orbit_frame_potential(const Eigen::VectorXcd& phi);
/// Minimum of the frame potential over d² unit vectors, 2d³/(d+1).
double sic_potential_bound(int d);

/// Candidate = Σ_j (x_{2j} + i x_{2j+1}) basis.col(j).  The basis spans the
/// eigenspace of W = X^a Z^b U_S for `eigenvalue`, with W rescaled so W³ = I.
struct SearchParameterization {
  Eigen::MatrixXcd basis;
  std::complex<double> eigenvalue;
  group::SymplecticMatrix symplectic;
  int a = 0, b = 0;

  int dimension() const { return static_cast<int>(basis.cols()); }
  Eigen::VectorXcd candidate(const std::vector<double>& x) const;
};

/// One entry per eigenspace of an order-3 lift of each order-3 symplectic, in
/// the order of group::order3_symplectics(d).  Symplectics without such a lift
/// are skipped.
std::vector<SearchParameterization> zauner_subspaces(int d);
/// Eigenspaces of the unitary of the order-3 symplectic [[0,-1],[1,-1]].
std::vector<SearchParameterization> canonical_zauner_subspaces(int d);

struct SearchOptions {
  double gradient_tol = 1e-12;
  int max_iterations = 10000;
  /// success threshold on |potential - bound|
  double success_tol = 1e-8;
};

struct SearchResult {
  Fiducial fiducial;
  double potential = 0.0;
  double target = 0.0;
  std::size_t best_restart = 0;
  std::size_t restarts = 0;
  std::size_t successes = 0;
  /// first restart index reaching success_tol, if any
  std::optional<std::size_t> first_success;
  std::vector<double> potentials;

  bool success(double tol = 1e-8) const { return potential - target <= tol; }
};

/// Multi-start L-BFGS on the unit sphere.  With subspaces, restart r searches
/// subspaces[r % subspaces.size()].
SearchResult search_fiducial(int d, std::size_t restarts, std::uint64_t seed,
                             const std::vector<SearchParameterization>& subspaces = {},
                             const SearchOptions& options = {});

/// Local descent from a single start (full space when subspace is null).
std::pair<Eigen::VectorXcd, double> descend(int d, const SearchParameterization* subspace,
                                            Eigen::VectorXcd start, const SearchOptions& options);

struct OrbitCount {
  int classes = 0;
  int classes_with_conjugates = 0;
  std::size_t images = 0;
  /// smallest distance between canonical forms of distinct classes
  double separation = 0.0;
};

/// Canonical representative of v modulo Heisenberg translations and phase.
Eigen::VectorXcd canonical_form(const Eigen::VectorXcd& v, double tol = 1e-6);
/// True if u and v lie in one Heisenberg orbit up to phase.
bool same_orbit(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v, double tol = 1e-6);

/// Classes of the SL(2,Z_d) images of phi modulo translations and phase.
/// Throws AmbiguousClassification if canonical-form and overlap tests disagree.
OrbitCount clifford_orbit_count(const Fiducial& phi, double tol = 1e-6);

struct Stabilizer {
  double residual = 0.0;
  group::SymplecticMatrix symplectic;
  int a = 0, b = 0;
  /// (X^a Z^b U_S)³ is a multiple of the identity
  bool order_three = false;
};

/// Minimizes ||W φ - λ φ|| over W = X^a Z^b U_S, S of order 3, λ unimodular.
Stabilizer stabilizer_residual(const Eigen::VectorXcd& phi);

}  // namespace whframes::sic
