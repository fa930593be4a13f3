#pragma once

// Mutually unbiased bases from commuting classes of Heisenberg elements, and
// the dimension-6 and dimension-4 analyses.
//
// Exact basis vectors are kept unnormalized together with their squared norm,
// so unbiasedness |<u|v>|² = 1/d becomes d |<u|v>|² - n_u n_v = 0 and no
// square roots enter the scalar tower.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "whframes/algebra.hpp"
#include "whframes/exact_linalg.hpp"
#include "whframes/group.hpp"

namespace whframes::mub {

using algebra::AlgebraicNumber;
using algebra::ExactVector;
using group::HeisenbergElement;

/// Klappenecker-Rötteler bound: min over prime powers p^e || d of p^e + 1.
int mub_lower_bound(int d);

/// An unnormalized exact state: the unit vector is v / sqrt(norm_sq).
struct ExactState {
  ExactVector v;
  AlgebraicNumber norm_sq;
};

ExactState make_state(ExactVector v);
Eigen::VectorXcd normalized_embedding(const ExactState& s);

struct CommutingClass {
  int d = 0;
  std::vector<HeisenbergElement> elements;
  /// the element whose spectrum is used for the eigenbasis
  HeisenbergElement generator;
};

/// {g^t : t = 0..d-1}; requires g to have order d modulo the center.
CommutingClass cyclic_class(const HeisenbergElement& g);
/// Checks the class invariants (identity, d elements, pairwise commuting, distinct mod center).
bool is_valid_class(const CommutingClass& cls);

struct Basis {
  int d = 0;
  std::string label;
  std::variant<std::vector<ExactState>, std::vector<Eigen::VectorXcd>> vectors;

  bool is_exact() const { return vectors.index() == 0; }
  const std::vector<ExactState>& exact() const { return std::get<0>(vectors); }
  /// Unit vectors (embedded when exact).
  std::vector<Eigen::VectorXcd> numeric() const;
};

struct MubSet {
  int d = 0;
  std::vector<Basis> bases;
};

/// Joint eigenbasis from the spectral projectors of the generator, over
/// group::group_tower(d).  Vectors are ordered by eigenvalue λ0 ω_d^k.
/// Throws DegenerateSpectrum if some eigenvalue is repeated.
Basis eigenbasis_of_class(const CommutingClass& cls, const std::string& label = "");
/// Eigenbasis of the cyclic class of X^a Z^b.
Basis eigenbasis(int d, int a, int b);
Basis fourier_basis(int d);
Basis standard_basis(int d);

/// Eigenbases of X, Z and X Z^k.  Requires 1 <= k < d with gcd(k, d) = 1.
MubSet standard_triple(int d, int k);
/// The d+1 cyclic-class eigenbases Z, X Z^k (k < d) for prime d.
MubSet prime_dimension_mubs(int d);

struct MubReport {
  bool exact = false;
  bool pass = false;
  double worst_deviation = 0.0;
  std::size_t pair_count = 0;
  /// (basis j, vector k, basis l, vector m)
  std::vector<std::array<std::size_t, 4>> failures;
};

/// Both branches of the unbiasedness condition over all pairs; exact when all
/// bases are exact, otherwise float at tol.
MubReport verify_mub(const MubSet& ms, double tol = 1e-10);

// ---- dimension 6 over appendix_tower() --------------------------------------

/// The 48 vectors unbiased to B_X and B_Z (first coordinate 1, norm_sq 6),
/// index j holds vector j+1.  Throws DataIntegrityError if a vector fails the
/// exact unbiasedness check.
const std::vector<ExactState>& appendix_vectors();
/// B_X and B_Z (Fourier and standard) over appendix_tower().
std::pair<std::vector<ExactState>, std::vector<ExactState>> appendix_reference_bases();

/// Exact unbiasedness against every vector of every reference basis.
bool unbiased_to(const ExactState& s, const std::vector<ExactState>& reference, int d);

struct UnbiasednessGraph {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adjacency;

  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
  std::map<std::size_t, std::size_t> degree_histogram() const;
};

/// Edge iff d |<u|v>|² = n_u n_v exactly.
UnbiasednessGraph unbiasedness_graph(const std::vector<ExactState>& vectors, int d);
/// Edge iff <u|v> = 0 exactly.
UnbiasednessGraph orthogonality_graph(const std::vector<ExactState>& vectors);

/// All d-cliques of the orthogonality graph, 0-based indices, each sorted,
/// list in lexicographic order.
std::vector<std::vector<std::size_t>> find_unbiased_bases(const std::vector<ExactState>& vectors, int d);
std::vector<std::vector<std::size_t>> find_cliques(const UnbiasednessGraph& g, std::size_t size);

struct MaximalityReport {
  std::vector<bool> maximal;  // per basis
  /// node -> neighbor set, for nodes of degree >= basis size
  std::map<std::size_t, std::vector<std::size_t>> large_neighborhoods;
  bool all_maximal() const;
};

/// Basis B_i is maximal iff no node's neighbor set contains all of B_i.
MaximalityReport maximality_check(const UnbiasednessGraph& graph, const std::vector<std::vector<std::size_t>>& bases);

/// Published index data for the 48 appendix vectors (1-based).
struct ReferenceTables {
  std::vector<std::vector<std::size_t>> bases;                        // 16 bases
  std::map<std::size_t, std::vector<std::size_t>> large_neighborhoods;  // 12 rows
};
const ReferenceTables& reference_tables();

struct Dim6Analysis {
  std::size_t n_vectors = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::vector<std::vector<std::size_t>> bases;  // 1-based
  MaximalityReport maximality;                   // 1-based node labels
  UnbiasednessGraph graph;
  bool unbiased_to_reference = false;
  bool bases_match_reference = false;
  bool neighborhoods_match_reference = false;

  bool pass() const;
};

Dim6Analysis analyze_dim6();

// ---- numerics ----------------------------------------------------------------

struct UnbiasedSolutions {
  std::vector<Eigen::VectorXcd> clusters;  // representatives, unit norm
  std::vector<std::size_t> cluster_sizes;
  std::size_t restarts = 0;
  std::size_t converged = 0;
};

/// Gauss-Newton on the phases of (1, e^{iφ1}, ..., e^{iφ_{d-1}})/√d against
/// the Fourier basis; clusters at radius 1e-6 in lexicographic order.
UnbiasedSolutions solve_unbiased_numeric(int d, std::size_t restarts, std::uint64_t seed);

/// Unit vectors unbiased to every vector of `reference`, up to global phase.
UnbiasedSolutions solve_unbiased_generic(int d, const std::vector<Eigen::VectorXcd>& reference,
                                         std::size_t restarts, std::uint64_t seed);

/// Index of the closest entry of `targets` up to phase, and its distance.
std::pair<std::size_t, double> closest_up_to_phase(const Eigen::VectorXcd& v,
                                                   const std::vector<Eigen::VectorXcd>& targets);

struct Transport {
  group::SymplecticMatrix symplectic;
  Eigen::MatrixXcd unitary;
  Basis first;   // U B_X, eigenbasis of X^a Z^b
  Basis second;  // U B_Z, eigenbasis of X^a2 Z^b2
  bool eigen_check = false;
};

/// Moves (B_X, B_Z) by the Clifford unitary of [[a, a2], [b, b2]].
/// Requires a b2 - a2 b ≡ 1 (mod d).
Transport transport_pair(int a, int b, int a2, int b2, int d = 6);

struct TransportAnalysis {
  std::size_t n_vectors = 0;
  std::size_t n_bases = 0;
  bool all_maximal = false;
};

/// Numeric rerun of the unbiased-vector analysis against a transported pair.
TransportAnalysis analyze_transported(const Transport& t, std::size_t restarts, std::uint64_t seed);

/// {B_Z, B_X, B_3(a,b)} in dimension 4, a, b in [0, π).
MubSet dim4_family(double a, double b);

/// Smallest residual norm of a fourth vector unbiased to B_X and B_3(a,b)
/// (unbiasedness to B_Z built in) over `restarts` local searches.
double dim4_fourth_vector_residual(double a, double b, std::size_t restarts, std::uint64_t seed);

}  // namespace whframes::mub
