#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "properties.hpp"
#include "whframes/errors.hpp"
#include "whframes/group.hpp"
#include "whframes/mub.hpp"

using namespace whframes;
using namespace whframes::mub;
using algebra::Rational;

namespace {

using Index = std::vector<std::size_t>;

double phase_distance(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  return closest_up_to_phase(u, {v}).second;
}

// every vector of `got` matches some vector of `want` up to phase
bool same_up_to_phase(const std::vector<Eigen::VectorXcd>& got, const std::vector<Eigen::VectorXcd>& want,
                      double tol) {
  for (const auto& v : got)
    if (closest_up_to_phase(v, want).second > tol) return false;
  return got.size() == want.size();
}

Index minus_one(Index v) {
  for (auto& x : v) --x;
  return v;
}

}  // namespace

TEST_SUITE("mub") {

TEST_CASE("lower bound on the number of MUBs") {
  CHECK(mub_lower_bound(6) == 3);
  CHECK(mub_lower_bound(7) == 8);
  CHECK(mub_lower_bound(12) == 4);
  CHECK(mub_lower_bound(2) == 3);
  CHECK(mub_lower_bound(8) == 9);
  CHECK(mub_lower_bound(30) == 3);
  CHECK_THROWS_AS(mub_lower_bound(1), PreconditionViolation);
}

TEST_CASE("commuting classes") {
  const auto c = cyclic_class(group::make_heisenberg(6, 1, 1));
  CHECK(c.elements.size() == 6);
  CHECK(is_valid_class(c));
  CHECK(c.elements.front() == group::h_identity(6));
  CHECK_THROWS_AS(cyclic_class(group::make_heisenberg(6, 2, 4)), PreconditionViolation);
  auto broken = c;
  broken.elements[1] = group::make_heisenberg(6, 0, 1);
  CHECK_FALSE(is_valid_class(broken));
  CHECK_THROWS_AS(eigenbasis_of_class(broken), PreconditionViolation);
}

TEST_CASE("eigenbases of Z and X") {
  for (int d = 2; d <= 7; ++d) {
    CAPTURE(d);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    const Eigen::MatrixXcd f = group::dft_matrix_numeric(d);
    std::vector<Eigen::VectorXcd> e, fc;
    for (int j = 0; j < d; ++j) {
      e.push_back(id.col(j));
      fc.push_back(f.col(j));
    }
    CHECK(same_up_to_phase(eigenbasis(d, 0, 1).numeric(), e, 1e-12));
    CHECK(same_up_to_phase(eigenbasis(d, 1, 0).numeric(), fc, 1e-12));
    CHECK(same_up_to_phase(standard_basis(d).numeric(), e, 1e-12));
    CHECK(same_up_to_phase(fourier_basis(d).numeric(), fc, 1e-12));
  }
}

TEST_CASE("eigenbasis of XZ in dimension 6 is exact") {
  const auto b = eigenbasis(6, 1, 1);
  REQUIRE(b.is_exact());
  const auto a = group::h_to_matrix(group::make_heisenberg(6, 1, 1));
  for (const auto& s : b.exact()) {
    const auto w = a.apply(s.v);
    std::size_t j = 0;
    while (s.v[j].is_zero()) ++j;
    const auto lambda = w[j] / s.v[j];
    CHECK(w == algebra::scale(s.v, lambda));
    CHECK(algebra::abs_squared(lambda) == lambda.tower().one());
    CHECK(algebra::inner(s.v, s.v) == s.norm_sq);
  }
  // distinct eigenvalues give orthogonal vectors
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t l = k + 1; l < 6; ++l) CHECK(algebra::inner(b.exact()[k].v, b.exact()[l].v).is_zero());
}

TEST_CASE("standard triples") {
  CHECK(verify_mub(standard_triple(6, 1)).pass);
  const auto r5 = verify_mub(standard_triple(6, 5));
  CHECK(r5.pass);
  CHECK(r5.exact);
  CHECK(standard_triple(6, 5).bases.size() == 3);
  CHECK_THROWS_AS(standard_triple(6, 2), PreconditionViolation);
  CHECK_THROWS_AS(standard_triple(6, 0), PreconditionViolation);
  CHECK(testprop::standard_triples(6) == "");
}

TEST_CASE("pairs of bases") {
  for (int d = 2; d <= 7; ++d) {
    CAPTURE(d);
    CHECK(verify_mub({d, {fourier_basis(d), standard_basis(d)}}).pass);
    const auto zz = verify_mub({d, {standard_basis(d), standard_basis(d)}});
    CHECK_FALSE(zz.pass);
    CHECK_FALSE(zz.failures.empty());
    CHECK(zz.worst_deviation == doctest::Approx(1.0 - 1.0 / d));
  }
  // float mode at a tolerance
  std::vector<Eigen::VectorXcd> ff = fourier_basis(4).numeric();
  testgen::Gen g(1);
  for (auto& v : ff) v *= std::polar(1.0, g.uniform(0, 6.28));
  const auto r = verify_mub({4, {standard_basis(4), Basis{4, "phased", ff}}}, 1e-12);
  CHECK_FALSE(r.exact);
  CHECK(r.pass);
}

TEST_CASE("prime dimensions have complete sets") {
  for (int d : {2, 3, 5, 7}) {
    CAPTURE(d);
    const auto ms = prime_dimension_mubs(d);
    CHECK(ms.bases.size() == static_cast<std::size_t>(d + 1));
    CHECK(verify_mub(ms).pass);
  }
  CHECK_THROWS_AS(prime_dimension_mubs(6), PreconditionViolation);
}

TEST_CASE("appendix vectors") {
  const auto& vs = appendix_vectors();
  REQUIRE(vs.size() == 48);
  const auto [w, th] = algebra::appendix_generators();
  const auto t = algebra::appendix_tower();
  const auto one = t->one();
  const ExactVector v1{one, w.pow(5), one, -w.pow(3), -w.pow(2), -w.pow(3)};
  const ExactVector v5{one, -w, one, w.pow(3), w.pow(4), w.pow(3)};
  CHECK(vs[0].v == v1);
  CHECK(vs[4].v == v5);
  // vector 3, entry 3: (2ω²-6ω+2)θ + (2ω³-ω²-ω+1)/2
  const auto e33 = (w.pow(2) * Rational(2) - w * Rational(6) + t->from_rational(2)) * th +
                   (w.pow(3) * Rational(2) - w.pow(2) - w + one) * Rational(1, 2);
  CHECK(vs[2].v[2] == e33);
  const auto [bx, bz] = appendix_reference_bases();
  for (const auto& s : vs) {
    CHECK(s.norm_sq == t->from_rational(6));
    CHECK(s.v[0] == one);
    CHECK(unbiased_to(s, bx, 6));
    CHECK(unbiased_to(s, bz, 6));
  }
  CHECK_FALSE(unbiased_to(bx[0], bx, 6));
}

TEST_CASE("reference tables") {
  const auto& ref = reference_tables();
  REQUIRE(ref.bases.size() == 16);
  CHECK(ref.bases.front() == Index{1, 5, 9, 14, 18, 22});
  CHECK(ref.bases.back() == Index{28, 30, 35, 37, 43, 45});
  REQUIRE(ref.large_neighborhoods.size() == 12);
  CHECK(ref.large_neighborhoods.at(1) == Index{15, 16, 19, 20, 26, 29, 35, 39, 40, 43, 44, 47});
  CHECK(ref.large_neighborhoods.at(13) == Index{3, 4, 19, 20, 26, 29, 35, 36, 40, 43, 47, 48});
}

TEST_CASE("unbiasedness graph of the appendix vectors") {
  const auto& vs = appendix_vectors();
  const auto g = unbiasedness_graph(vs, 6);
  CHECK(g.n == 48);
  CHECK(g.degree_histogram() == std::map<std::size_t, std::size_t>{{4, 36}, {12, 12}});
  CHECK(g.neighbors(0) == minus_one({15, 16, 19, 20, 26, 29, 35, 39, 40, 43, 44, 47}));
  CHECK(g.neighbors(12) == minus_one({3, 4, 19, 20, 26, 29, 35, 36, 40, 43, 47, 48}));
  for (std::size_t i = 0; i < g.n; ++i) {
    CHECK_FALSE(g.adjacency[i][i]);
    for (std::size_t j = 0; j < g.n; ++j) CHECK(g.adjacency[i][j] == g.adjacency[j][i]);
  }
}

TEST_CASE("orthonormal bases among the appendix vectors") {
  const auto bases = find_unbiased_bases(appendix_vectors(), 6);
  REQUIRE(bases.size() == 16);
  CHECK(bases.front() == Index{0, 4, 8, 13, 17, 21});
  CHECK(bases.back() == minus_one({28, 30, 35, 37, 43, 45}));
  std::vector<Index> ref;
  for (const auto& b : reference_tables().bases) ref.push_back(minus_one(b));
  auto sorted = ref;
  std::sort(sorted.begin(), sorted.end());
  CHECK(bases == sorted);
}

TEST_CASE("clique search on small graphs") {
  UnbiasednessGraph g{5, std::vector<std::vector<bool>>(5, std::vector<bool>(5, false))};
  auto edge = [&](std::size_t a, std::size_t b) { g.adjacency[a][b] = g.adjacency[b][a] = true; };
  edge(0, 1), edge(1, 2), edge(0, 2), edge(2, 3), edge(3, 4), edge(2, 4);
  CHECK(find_cliques(g, 3) == std::vector<Index>{{0, 1, 2}, {2, 3, 4}});
  CHECK(find_cliques(g, 4).empty());
  CHECK(find_cliques(g, 2).size() == 6);
}

TEST_CASE("maximality") {
  const auto a = analyze_dim6();
  CHECK(a.n_vectors == 48);
  CHECK(a.unbiased_to_reference);
  CHECK(a.bases_match_reference);
  CHECK(a.neighborhoods_match_reference);
  CHECK(a.maximality.all_maximal());
  CHECK(a.maximality.maximal.size() == 16);
  CHECK(a.pass());
  // a basis contained in a neighborhood is reported as not maximal
  UnbiasednessGraph g{4, std::vector<std::vector<bool>>(4, std::vector<bool>(4, false))};
  g.adjacency[3][0] = g.adjacency[0][3] = g.adjacency[3][1] = g.adjacency[1][3] = true;
  const auto m = maximality_check(g, {{0, 1}, {1, 2}});
  CHECK_FALSE(m.maximal[0]);
  CHECK(m.maximal[1]);
  CHECK_FALSE(m.all_maximal());
}

TEST_CASE("unbiased vectors in dimension 2") {
  const auto s = solve_unbiased_numeric(2, 40, 3);
  REQUIRE(s.clusters.size() == 2);
  const double r = 1 / std::sqrt(2.0);
  const std::vector<Eigen::VectorXcd> want{Eigen::Vector2cd(r, std::complex<double>(0, r)),
                                           Eigen::Vector2cd(r, std::complex<double>(0, -r))};
  CHECK(same_up_to_phase(s.clusters, want, 1e-10));
  auto reference = fourier_basis(2).numeric();
  for (const auto& v : standard_basis(2).numeric()) reference.push_back(v);
  const auto t = solve_unbiased_generic(2, reference, 40, 3);
  CHECK(t.clusters.size() == 2);
  CHECK(same_up_to_phase(t.clusters, want, 1e-10));
}

TEST_CASE("numerical solutions in dimension 6 match the tabulated vectors") {
  const auto s = solve_unbiased_numeric(6, 500, 1);
  CHECK(s.clusters.size() == 48);
  std::vector<Eigen::VectorXcd> ref;
  for (const auto& v : appendix_vectors()) ref.push_back(normalized_embedding(v));
  std::vector<bool> hit(48, false);
  for (const auto& c : s.clusters) {
    const auto [k, dist] = closest_up_to_phase(c, ref);
    CHECK(dist < 1e-8);
    hit[k] = true;
  }
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }));
}

TEST_CASE("restarts are deterministic") {
  const auto a = solve_unbiased_numeric(6, 60, 8), b = solve_unbiased_numeric(6, 60, 8);
  REQUIRE(a.clusters.size() == b.clusters.size());
  for (std::size_t k = 0; k < a.clusters.size(); ++k) CHECK((a.clusters[k] - b.clusters[k]).norm() == 0.0);
  CHECK(a.cluster_sizes == b.cluster_sizes);
}

TEST_CASE("symplectic transport") {
  const auto id = transport_pair(1, 0, 0, 1);
  CHECK(id.eigen_check);
  CHECK(same_up_to_phase(id.first.numeric(), fourier_basis(6).numeric(), 1e-12));
  CHECK(same_up_to_phase(id.second.numeric(), standard_basis(6).numeric(), 1e-12));

  const auto t = transport_pair(1, 1, 0, 1);
  CHECK(t.eigen_check);
  CHECK(same_up_to_phase(t.first.numeric(), eigenbasis(6, 1, 1).numeric(), 1e-10));
  CHECK(verify_mub({6, {t.first, t.second}}).pass);
  CHECK_THROWS_AS(transport_pair(2, 0, 0, 2), PreconditionViolation);

  const auto a = analyze_transported(t, 3000, 5);
  CHECK(a.n_vectors == 48);
  CHECK(a.n_bases == 16);
  CHECK(a.all_maximal);
}

TEST_CASE("dimension-4 family") {
  const auto ms = dim4_family(0, 0);
  REQUIRE(ms.bases.size() == 3);
  const auto b3 = ms.bases[2].numeric();
  const std::vector<Eigen::VectorXcd> rows{Eigen::Vector4cd(1, 1, 1, -1) / 2.0, Eigen::Vector4cd(1, -1, 1, 1) / 2.0,
                                           Eigen::Vector4cd(1, 1, -1, 1) / 2.0,
                                           Eigen::Vector4cd(1, -1, -1, -1) / 2.0};
  CHECK(same_up_to_phase(b3, rows, 1e-14));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double a = i * std::numbers::pi / 4, b = j * std::numbers::pi / 4 + 0.1;
      CHECK(verify_mub(dim4_family(a, b), 1e-12).pass);
    }
  CHECK_THROWS_AS(dim4_family(-0.1, 0), PreconditionViolation);
  CHECK_THROWS_AS(dim4_family(0, std::numbers::pi), PreconditionViolation);
  CHECK(dim4_fourth_vector_residual(0.3, 1.1, 50, 4) >= 1e-3);
}

TEST_CASE("phase distance helper") {
  testgen::Gen g(3);
  const auto v = g.unit_vector(5);
  CHECK(phase_distance(v, v * std::polar(1.0, 2.0)) < 1e-15);
  CHECK(phase_distance(v, g.unit_vector(5)) > 1e-3);
}

}  // TEST_SUITE
