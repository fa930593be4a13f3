#include "whframes/mub.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "data/data.hpp"
#include "whframes/errors.hpp"

namespace whframes::mub {

using algebra::ExactMatrix;
using algebra::Rational;

int mub_lower_bound(int d) {
  if (d < 2) throw PreconditionViolation("mub_lower_bound needs d >= 2");
  int best = d + 1;
  int n = d;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    best = std::min(best, q + 1);
  }
  if (n > 1) best = std::min(best, n + 1);
  return best;
}

ExactState make_state(ExactVector v) {
  AlgebraicNumber n = algebra::inner(v, v);
  return {std::move(v), std::move(n)};
}

Eigen::VectorXcd normalized_embedding(const ExactState& s) {
  return algebra::embed(s.v) / std::sqrt(s.norm_sq.embed().re);
}

CommutingClass cyclic_class(const HeisenbergElement& g) {
  if (std::gcd(std::gcd(g.a, g.b), g.d) != 1) {
    throw PreconditionViolation("generator of a cyclic class needs gcd(a, b, d) = 1");
  }
  CommutingClass cls{g.d, {}, g};
  for (int t = 0; t < g.d; ++t) cls.elements.push_back(group::h_pow(g, t));
  return cls;
}

bool is_valid_class(const CommutingClass& cls) {
  const auto& el = cls.elements;
  if (static_cast<int>(el.size()) != cls.d) return false;
  bool has_identity = false;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (el[i].d != cls.d) return false;
    if (el[i].a == 0 && el[i].b == 0) has_identity = true;
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (!group::h_commutes(el[i], el[j])) return false;
      if (el[i].a == el[j].a && el[i].b == el[j].b) return false;  // equal mod center
    }
  }
  return has_identity;
}

std::vector<Eigen::VectorXcd> Basis::numeric() const {
  if (!is_exact()) return std::get<1>(vectors);
  std::vector<Eigen::VectorXcd> out;
  for (const auto& s : exact()) out.push_back(normalized_embedding(s));
  return out;
}

namespace {

std::string class_label(const HeisenbergElement& g) {
  if (g.a == 1 && g.b == 0) return "B_X";
  if (g.a == 0 && g.b == 1) return "B_Z";
  std::string s = "B_";
  if (g.a) s += g.a == 1 ? "X" : "X^" + std::to_string(g.a);
  if (g.b) s += g.b == 1 ? "Z" : "Z^" + std::to_string(g.b);
  return s;
}

}  // namespace

Basis eigenbasis_of_class(const CommutingClass& cls, const std::string& label) {
  if (!is_valid_class(cls)) throw PreconditionViolation("not a valid commuting class");
  const int d = cls.d;
  const HeisenbergElement g = group::make_heisenberg(d, cls.generator.a, cls.generator.b);
  const auto tower = group::group_tower(d);
  const auto n = static_cast<std::size_t>(d);

  std::vector<ExactMatrix> powers{ExactMatrix::identity(tower, n)};
  const ExactMatrix a = group::h_to_matrix(g);
  for (int t = 1; t <= d; ++t) powers.push_back(powers.back() * a);
  if (!powers.back().is_scalar()) throw std::logic_error("A^d is not scalar");
  const AlgebraicNumber top = powers.back()(0, 0);
  powers.pop_back();

  // λ0 with λ0^d = A^d, from the fourth roots of unity times ω_{4d}^m
  std::optional<int> m0;
  for (int m = 0; m < 4 && !m0; ++m)
    if (group::omega4d(d, static_cast<long long>(m) * d) == top) m0 = m;
  if (!m0) throw std::logic_error("A^d is not a fourth root of unity");

  std::vector<ExactState> states;
  for (int k = 0; k < d; ++k) {
    // P_k = (1/d) Σ_t λ_k^{-t} A^t with λ_k = ω_{4d}^{m0} ω_d^k
    const long long e = *m0 + 4LL * k;
    ExactMatrix p(tower, n, n);
    for (int t = 0; t < d; ++t) p = p + powers[static_cast<std::size_t>(t)].scaled(group::omega4d(d, -e * t));
    p = p.scaled(tower->from_rational(Rational(1, d)));
    if (!(p.trace() == tower->one())) {
      throw DegenerateSpectrum("eigenvalue of " + class_label(g) + " is not simple; joint diagonalization needed");
    }
    std::size_t j = 0;
    while (p(j, j).is_zero()) ++j;
    states.push_back({p.column(j), p(j, j)});
  }
  return {d, label.empty() ? class_label(g) : label, std::move(states)};
}

Basis eigenbasis(int d, int a, int b) { return eigenbasis_of_class(cyclic_class(group::make_heisenberg(d, a, b))); }
Basis fourier_basis(int d) { return eigenbasis(d, 1, 0); }
Basis standard_basis(int d) { return eigenbasis(d, 0, 1); }

MubSet standard_triple(int d, int k) {
  if (d < 2) throw PreconditionViolation("standard_triple needs d >= 2");
  if (k < 1 || k >= d || std::gcd(k, d) != 1) {
    throw PreconditionViolation("eigenbases of X, Z, XZ^k are unbiased only for gcd(k, d) = 1");
  }
  return {d, {fourier_basis(d), standard_basis(d), eigenbasis(d, 1, k)}};
}

MubSet prime_dimension_mubs(int d) {
  if (d < 2) throw PreconditionViolation("needs d >= 2");
  for (int p = 2; p * p <= d; ++p)
    if (d % p == 0) throw PreconditionViolation("d + 1 cyclic classes exist only for prime d");
  MubSet ms{d, {standard_basis(d)}};
  for (int k = 0; k < d; ++k) ms.bases.push_back(eigenbasis(d, 1, k));
  return ms;
}

MubReport verify_mub(const MubSet& ms, double tol) {
  MubReport r;
  const bool exact = std::all_of(ms.bases.begin(), ms.bases.end(), [](const Basis& b) { return b.is_exact(); });
  r.exact = exact;
  const double target = 1.0 / ms.d;

  auto record = [&](std::array<std::size_t, 4> idx, double dev, bool fail) {
    ++r.pair_count;
    r.worst_deviation = std::max(r.worst_deviation, dev);
    if (fail) r.failures.push_back(idx);
  };

  if (exact) {
    const auto d = Rational(ms.d);
    for (std::size_t j = 0; j < ms.bases.size(); ++j)
      for (std::size_t l = j; l < ms.bases.size(); ++l) {
        const auto& bj = ms.bases[j].exact();
        const auto& bl = ms.bases[l].exact();
        for (std::size_t k = 0; k < bj.size(); ++k)
          for (std::size_t m = (j == l ? k + 1 : 0); m < bl.size(); ++m) {
            const AlgebraicNumber ip = algebra::inner(bj[k].v, bl[m].v);
            const AlgebraicNumber q = algebra::abs_squared(ip);
            AlgebraicNumber diff = j == l ? q : q * d - bj[k].norm_sq * bl[m].norm_sq;
            const bool fail = !diff.is_zero();
            double dev = 0.0;
            if (fail) {
              const double nn = (bj[k].norm_sq * bl[m].norm_sq).embed().re;
              dev = std::abs(q.embed().re / nn - (j == l ? 0.0 : target));
            }
            record({j, k, l, m}, dev, fail);
          }
      }
  } else {
    std::vector<std::vector<Eigen::VectorXcd>> nums;
    for (const auto& b : ms.bases) nums.push_back(b.numeric());
    for (std::size_t j = 0; j < nums.size(); ++j)
      for (std::size_t l = j; l < nums.size(); ++l)
        for (std::size_t k = 0; k < nums[j].size(); ++k)
          for (std::size_t m = (j == l ? k : 0); m < nums[l].size(); ++m) {
            const double q = std::norm(nums[j][k].dot(nums[l][m]));
            const double want = j != l ? target : (k == m ? 1.0 : 0.0);
            const double dev = std::abs(q - want);
            record({j, k, l, m}, dev, dev > tol);
          }
  }
  r.pass = r.failures.empty();
  return r;
}

// ---- dimension 6 --------------------------------------------------------------

std::pair<std::vector<ExactState>, std::vector<ExactState>> appendix_reference_bases() {
  const auto gens = algebra::appendix_generators();
  const auto tower = algebra::appendix_tower();
  const AlgebraicNumber w6 = gens.omega * gens.omega;
  std::vector<ExactState> fourier, standard;
  for (int k = 0; k < 6; ++k) {
    ExactVector f, e(6, tower->zero());
    for (int j = 0; j < 6; ++j) f.push_back(w6.pow(j * k));
    e[static_cast<std::size_t>(k)] = tower->one();
    fourier.push_back(make_state(std::move(f)));
    standard.push_back(make_state(std::move(e)));
  }
  return {fourier, standard};
}

bool unbiased_to(const ExactState& s, const std::vector<ExactState>& reference, int d) {
  const Rational dq(d);
  for (const auto& r : reference) {
    const AlgebraicNumber q = algebra::abs_squared(algebra::inner(r.v, s.v));
    if (!(q * dq == r.norm_sq * s.norm_sq)) return false;
  }
  return true;
}

const std::vector<ExactState>& appendix_vectors() {
  static std::once_flag once;
  static std::vector<ExactState> vectors;
  std::call_once(once, [] {
    const auto gens = algebra::appendix_generators();
    std::vector<AlgebraicNumber> w{gens.omega.tower().one()};
    for (int k = 1; k < 6; ++k) w.push_back(w.back() * gens.omega);
    const auto [fourier, standard] = appendix_reference_bases();
    std::vector<ExactState> out;
    for (const auto& row : data::appendix_table()) {
      ExactVector v;
      for (const auto& e : row) {
        AlgebraicNumber t = gens.omega.tower().zero(), c = t;
        for (std::size_t k = 0; k < 6; ++k) {
          if (e.theta[k]) t += w[k] * Rational(e.theta[k]);
          if (e.constant[k]) c += w[k] * Rational(e.constant[k]);
        }
        v.push_back((t * gens.theta + c) * Rational(1, e.den));
      }
      ExactState s = make_state(std::move(v));
      if (!unbiased_to(s, fourier, 6) || !unbiased_to(s, standard, 6)) {
        throw DataIntegrityError("appendix vector " + std::to_string(out.size() + 1) + " is not unbiased to B_X and B_Z");
      }
      out.push_back(std::move(s));
    }
    vectors = std::move(out);
  });
  return vectors;
}

std::vector<std::size_t> UnbiasednessGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n; ++u)
    if (adjacency[v][u]) out.push_back(u);
  return out;
}

std::map<std::size_t, std::size_t> UnbiasednessGraph::degree_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t v = 0; v < n; ++v) ++h[degree(v)];
  return h;
}

namespace {

template <class Edge>
UnbiasednessGraph build_graph(std::size_t n, Edge edge) {
  UnbiasednessGraph g{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.adjacency[i][j] = g.adjacency[j][i] = edge(i, j);
  return g;
}

void extend_clique(const UnbiasednessGraph& g, std::size_t size, std::vector<std::size_t>& current,
                   std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  const std::size_t start = current.empty() ? 0 : current.back() + 1;
  for (std::size_t v = start; v < g.n; ++v) {
    if (!std::all_of(current.begin(), current.end(), [&](std::size_t u) { return g.adjacency[u][v]; })) continue;
    current.push_back(v);
    extend_clique(g, size, current, out);
    current.pop_back();
  }
}

}  // namespace

UnbiasednessGraph unbiasedness_graph(const std::vector<ExactState>& vectors, int d) {
  return build_graph(vectors.size(), [&](std::size_t i, std::size_t j) { return unbiased_to(vectors[i], {vectors[j]}, d); });
}

UnbiasednessGraph orthogonality_graph(const std::vector<ExactState>& vectors) {
  return build_graph(vectors.size(), [&](std::size_t i, std::size_t j) {
    return algebra::inner(vectors[i].v, vectors[j].v).is_zero();
  });
}

std::vector<std::vector<std::size_t>> find_cliques(const UnbiasednessGraph& g, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  extend_clique(g, size, current, out);
  return out;
}

std::vector<std::vector<std::size_t>> find_unbiased_bases(const std::vector<ExactState>& vectors, int d) {
  auto cliques = find_cliques(orthogonality_graph(vectors), static_cast<std::size_t>(d));
  // orthogonality comes from the edges; a basis also needs d nonzero vectors
  std::erase_if(cliques, [&](const std::vector<std::size_t>& c) {
    return std::any_of(c.begin(), c.end(), [&](std::size_t i) { return vectors[i].norm_sq.is_zero(); });
  });
  return cliques;
}

bool MaximalityReport::all_maximal() const {
  return std::all_of(maximal.begin(), maximal.end(), [](bool b) { return b; });
}

MaximalityReport maximality_check(const UnbiasednessGraph& graph, const std::vector<std::vector<std::size_t>>& bases) {
  MaximalityReport r;
  std::size_t min_size = graph.n + 1;
  for (const auto& b : bases) min_size = std::min(min_size, b.size());
  std::vector<std::vector<std::size_t>> nbrs;
  for (std::size_t v = 0; v < graph.n; ++v) {
    nbrs.push_back(graph.neighbors(v));
    if (nbrs.back().size() >= min_size) r.large_neighborhoods[v] = nbrs.back();
  }
  for (const auto& b : bases) {
    bool maximal = true;
    for (std::size_t v = 0; v < graph.n && maximal; ++v)
      if (std::includes(nbrs[v].begin(), nbrs[v].end(), b.begin(), b.end())) maximal = false;
    r.maximal.push_back(maximal);
  }
  return r;
}

const ReferenceTables& reference_tables() {
  static const ReferenceTables t{
      {{1, 5, 9, 14, 18, 22},    {1, 6, 10, 14, 18, 21},    {2, 5, 9, 13, 17, 22},     {2, 6, 10, 13, 17, 21},
       {3, 8, 12, 16, 20, 23},   {3, 24, 38, 39, 42, 43},   {4, 7, 11, 15, 19, 24},    {4, 23, 37, 40, 41, 44},
       {7, 20, 26, 27, 30, 31},  {8, 19, 25, 28, 29, 32},   {11, 16, 33, 35, 46, 48},  {12, 15, 34, 36, 45, 47},
       {25, 31, 33, 40, 42, 47}, {26, 32, 34, 39, 41, 48},  {27, 29, 36, 38, 44, 46},  {28, 30, 35, 37, 43, 45}},
      {{1, {15, 16, 19, 20, 26, 29, 35, 39, 40, 43, 44, 47}},
       {2, {15, 16, 19, 20, 25, 30, 36, 39, 40, 43, 44, 48}},
       {5, {11, 12, 23, 24, 27, 28, 31, 32, 33, 38, 41, 45}},
       {6, {11, 12, 23, 24, 27, 28, 31, 32, 34, 37, 42, 46}},
       {9, {7, 8, 23, 24, 27, 32, 33, 34, 37, 42, 45, 46}},
       {10, {7, 8, 23, 24, 28, 31, 33, 34, 38, 41, 45, 46}},
       {13, {3, 4, 19, 20, 26, 29, 35, 36, 40, 43, 47, 48}},
       {14, {3, 4, 19, 20, 25, 30, 35, 36, 39, 44, 47, 48}},
       {17, {3, 4, 15, 16, 25, 26, 29, 30, 35, 39, 44, 47}},
       {18, {3, 4, 15, 16, 25, 26, 29, 30, 36, 40, 43, 48}},
       {21, {7, 8, 11, 12, 27, 32, 33, 37, 38, 41, 42, 45}},
       {22, {7, 8, 11, 12, 28, 31, 34, 37, 38, 41, 42, 46}}}};
  return t;
}

bool Dim6Analysis::pass() const {
  const std::map<std::size_t, std::size_t> hist{{4, 36}, {12, 12}};
  return n_vectors == 48 && unbiased_to_reference && degree_histogram == hist && bases.size() == 16 &&
         bases_match_reference && neighborhoods_match_reference && maximality.maximal.size() == 16 &&
         maximality.all_maximal();
}

Dim6Analysis analyze_dim6() {
  Dim6Analysis r;
  const auto& vectors = appendix_vectors();  // throws if a vector is not unbiased to B_X, B_Z
  r.n_vectors = vectors.size();
  r.unbiased_to_reference = true;
  r.graph = unbiasedness_graph(vectors, 6);
  r.degree_histogram = r.graph.degree_histogram();

  const auto bases0 = find_unbiased_bases(vectors, 6);
  auto shift = [](std::vector<std::size_t> v) {
    for (auto& x : v) ++x;
    return v;
  };
  for (const auto& b : bases0) r.bases.push_back(shift(b));

  const auto m0 = maximality_check(r.graph, bases0);
  r.maximality.maximal = m0.maximal;
  for (const auto& [v, nb] : m0.large_neighborhoods) r.maximality.large_neighborhoods[v + 1] = shift(nb);

  const auto& ref = reference_tables();
  auto sorted = [](std::vector<std::vector<std::size_t>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  r.bases_match_reference = sorted(r.bases) == sorted(ref.bases);
  r.neighborhoods_match_reference = r.maximality.large_neighborhoods == ref.large_neighborhoods;
  return r;
}

}  // namespace whframes::mub
