#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "generators.hpp"
#include "whframes/errors.hpp"
#include "whframes/group.hpp"
#include "whframes/sic.hpp"

using namespace whframes;
using namespace whframes::sic;
using algebra::Rational;

namespace {

std::vector<Eigen::VectorXcd> numeric_orbit(const Eigen::VectorXcd& phi) {
  const int d = static_cast<int>(phi.size());
  std::vector<Eigen::VectorXcd> out;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) out.push_back(group::apply_displacement(a, b, phi));
  return out;
}

}  // namespace

TEST_SUITE("sic") {

TEST_CASE("built-in fiducial entries") {
  const auto f = grassl_fiducial();
  REQUIRE(f.is_exact());
  CHECK(f.d == 6);
  CHECK(f.normalized);
  CHECK(f.scalar_domain() == "grassl96");
  const auto g = algebra::grassl_generators();
  const auto t = algebra::grassl_tower();
  const auto s21 = g.sqrt3 * g.sqrt7;
  const auto c = [&](long n) { return t->from_rational(Rational(n)); };
  const auto v3 = (g.sqrt7 - g.sqrt3) * g.i * Rational(6) + s21 * Rational(6) + g.sqrt3 * Rational(12) -
                  g.sqrt7 * Rational(12) - c(18);
  const auto v6 = (g.sqrt7 - g.sqrt3) * g.i * Rational(6) - s21 * Rational(6) + c(18);
  CHECK(f.exact()[2] == g.theta3 * v3);
  CHECK(f.exact()[5] == g.theta3 * v6);
  CHECK(algebra::inner(f.exact(), f.exact()) == t->one());
  CHECK((f.numeric() - grassl_fiducial_numeric().numeric()).norm() < 1e-14);
  CHECK(std::abs(f.numeric().norm() - 1.0) < 1e-14);
}

TEST_CASE("exact certification of the built-in orbit") {
  const auto r = verify_sic(heisenberg_orbit(grassl_fiducial()));
  CHECK(r.exact);
  CHECK(r.pass);
  CHECK(r.pair_count == 630);
  CHECK(r.worst_deviation == 0.0);
  CHECK_FALSE(r.first_failure.has_value());
}

TEST_CASE("float certification") {
  const auto orbit = heisenberg_orbit(grassl_fiducial_numeric());
  const auto r = verify_sic(orbit, 1e-10);
  CHECK_FALSE(r.exact);
  CHECK(r.pass);
  CHECK(r.worst_deviation < 1e-13);
  CHECK(r.scalar_domain == "complex64");
}

TEST_CASE("random unit vectors are not fiducials") {
  testgen::Gen g(12);
  for (int d = 2; d <= 7; ++d) {
    const auto r = verify_sic(heisenberg_orbit(make_fiducial(g.unit_vector(d))), 1e-6);
    CHECK_FALSE(r.pass);
    CHECK(r.first_failure.has_value());
  }
}

TEST_CASE("an exact non-fiducial fails exactly") {
  // the first standard basis vector: its translates are orthogonal or equal
  const auto t = group::group_tower(3);
  ExactVector e{t->one(), t->zero(), t->zero()};
  const auto r = verify_sic(heisenberg_orbit(make_fiducial(e)));
  CHECK(r.exact);
  CHECK_FALSE(r.pass);
  CHECK(r.worst_deviation == doctest::Approx(0.75));
}

TEST_CASE("a repeated vector deviates by d/(d+1)") {
  testgen::Gen g(4);
  for (int d = 2; d <= 6; ++d) {
    const auto v = g.unit_vector(d);
    SicOrbit o{d, std::vector<Eigen::VectorXcd>(static_cast<std::size_t>(d * d), v)};
    const auto r = verify_sic(o);
    CHECK_FALSE(r.pass);
    CHECK(r.worst_deviation == doctest::Approx(1.0 - 1.0 / (d + 1)).epsilon(1e-12));
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(heisenberg_orbit(make_fiducial(Eigen::VectorXcd::Ones(3))), PreconditionViolation);
  CHECK_THROWS_AS(make_fiducial(Eigen::VectorXcd::Ones(1)), PreconditionViolation);
  CHECK_FALSE(make_fiducial(Eigen::VectorXcd::Ones(3)).normalized);
  // a dimension with no matching root of unity in the tower
  const auto t = algebra::grassl_tower();
  ExactVector five(5, t->zero());
  five[0] = t->one();
  CHECK_THROWS_AS(heisenberg_orbit(make_fiducial(five)), IncompatibleDomains);
}

TEST_CASE("frame potential values") {
  for (int d = 2; d <= 7; ++d) CHECK(sic_potential_bound(d) == doctest::Approx(2.0 * d * d * d / (d + 1)));
  CHECK(orbit_frame_potential(grassl_fiducial_numeric().numeric()) ==
        doctest::Approx(2.0 * 216 / 7).epsilon(1e-13));
  for (int d = 2; d <= 6; ++d) {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    std::vector<Eigen::VectorXcd> onb;
    for (int j = 0; j < d; ++j) onb.push_back(id.col(j));
    CHECK(frame_potential(onb) == doctest::Approx(d));
    std::vector<Eigen::VectorXcd> copies(static_cast<std::size_t>(d * d), id.col(0));
    CHECK(frame_potential(copies) == doctest::Approx(std::pow(d, 4)));
  }
}

TEST_CASE("frame potential is bounded below and invariant on orbits") {
  testgen::Gen g(55);
  for (int k = 0; k < 40; ++k) {
    const int d = g.uniform_int(2, 7);
    const auto v = g.unit_vector(d);
    const double p = orbit_frame_potential(v);
    CHECK(p >= sic_potential_bound(d) - 1e-9);
    CHECK(p == doctest::Approx(frame_potential(numeric_orbit(v))).epsilon(1e-12));
    const Eigen::VectorXcd w = group::apply_displacement(g.uniform_int(0, d - 1), g.uniform_int(0, d - 1), v) *
                   std::polar(1.0, g.uniform(0, 6.28));
    CHECK(orbit_frame_potential(w) == doctest::Approx(p).epsilon(1e-12));
    // Clifford unitaries permute orbits, so the potential is unchanged
    if (d <= 6) {
      const auto u = group::clifford_unitary_numeric(g.symplectic(d));
      CHECK(orbit_frame_potential(u * v) == doctest::Approx(p).epsilon(1e-10));
    }
  }
}

TEST_CASE("numerical search reaches the bound") {
  const auto r = search_fiducial(2, 10, 1);
  CHECK(r.potential == doctest::Approx(16.0 / 3).epsilon(1e-12));
  CHECK(std::abs(r.potential - 16.0 / 3) < 1e-8);
  CHECK(r.success());
  CHECK(r.potentials.size() == 10);
  CHECK(verify_sic(heisenberg_orbit(r.fiducial), 1e-6).pass);
  for (int d : {3, 4, 5}) {
    CAPTURE(d);
    const auto s = search_fiducial(d, 30, 2);
    CHECK(s.success());
    CHECK(s.first_success.has_value());
  }
}

TEST_CASE("search is deterministic in the seed and thread count") {
  const auto a = search_fiducial(4, 8, 99);
  ::setenv("WHFRAMES_THREADS", "1", 1);
  const auto b = search_fiducial(4, 8, 99);
  ::setenv("WHFRAMES_THREADS", "3", 1);
  const auto c = search_fiducial(4, 8, 99);
  ::unsetenv("WHFRAMES_THREADS");
  CHECK(a.potentials == b.potentials);
  CHECK(a.potentials == c.potentials);
  CHECK((a.fiducial.numeric() - b.fiducial.numeric()).norm() == 0.0);
  const auto d = search_fiducial(4, 8, 100);
  CHECK(a.potentials != d.potentials);
}

TEST_CASE("zauner subspaces are eigenspaces") {
  for (int d : {3, 4, 6}) {
    CAPTURE(d);
    const auto subs = zauner_subspaces(d);
    int total = 0;
    for (const auto& s : subs) {
      total += s.dimension();
      const Eigen::MatrixXcd u = group::h_to_matrix_numeric(group::make_heisenberg(d, s.a, s.b)) *
                                 group::clifford_unitary_numeric(s.symplectic);
      const Eigen::MatrixXcd& b = s.basis;
      CHECK((b.adjoint() * b - Eigen::MatrixXcd::Identity(b.cols(), b.cols())).norm() < 1e-10);
      const Eigen::MatrixXcd ub = u * b;
      const std::complex<double> mu = (b.adjoint() * ub)(0, 0);
      CHECK(std::abs(std::abs(mu) - 1.0) < 1e-10);
      CHECK((ub - mu * b).norm() < 1e-9);
      CHECK(std::abs(std::pow(s.eigenvalue, 3) - 1.0) < 1e-10);
      CHECK(s.symplectic.pow(3).is_identity());
    }
    // eigenspaces of each unitary partition the space
    CHECK(total == d * static_cast<int>(group::order3_symplectics(d).size()));
  }
  const auto canon = canonical_zauner_subspaces(6);
  std::vector<int> dims;
  for (const auto& s : canon) dims.push_back(s.dimension());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 2, 3});
  // every order-3 symplectic has an order-3 lift whose eigenspaces fill C^6
  std::map<group::SymplecticMatrix, int> per_s;
  for (const auto& s : zauner_subspaces(6)) per_s[s.symplectic] += s.dimension();
  CHECK(per_s.size() == group::order3_symplectics(6).size());
  for (const auto& [s, dim] : per_s) CHECK(dim == 6);
}

TEST_CASE("subspace search at d = 6") {
  const auto r = search_fiducial(6, 30, 11, canonical_zauner_subspaces(6));
  CHECK(r.success());
  CHECK(verify_sic(heisenberg_orbit(r.fiducial), 1e-6).pass);
  CHECK_THROWS_AS(canonical_zauner_subspaces(6)[0].candidate({1.0}), PreconditionViolation);
}

TEST_CASE("canonical forms ignore translations and phases") {
  testgen::Gen g(6);
  for (int k = 0; k < 20; ++k) {
    const int d = g.uniform_int(2, 7);
    const auto v = g.unit_vector(d);
    const Eigen::VectorXcd w = group::apply_displacement(g.uniform_int(0, d - 1), g.uniform_int(0, d - 1), v) *
                   std::polar(1.0, g.uniform(0, 6.28));
    CHECK((canonical_form(v) - canonical_form(w)).norm() < 1e-10);
    CHECK(same_orbit(v, w));
    CHECK_FALSE(same_orbit(v, g.unit_vector(d)));
  }
}

TEST_CASE("Clifford orbit count of the built-in fiducial") {
  const auto phi = grassl_fiducial_numeric();
  const auto c = clifford_orbit_count(phi);
  CHECK(c.classes == 48);
  CHECK(c.classes_with_conjugates == 96);
  CHECK(c.images == 144);
  CHECK(c.separation > 1e-3);
  // a translate gives the same count
  const auto t = make_fiducial(group::apply_displacement(2, 5, phi.numeric()));
  const auto ct = clifford_orbit_count(t);
  CHECK(ct.classes == 48);
  CHECK(ct.classes_with_conjugates == 96);
  CHECK_THROWS_AS(clifford_orbit_count(make_fiducial(Eigen::VectorXcd::Unit(6, 0))), PreconditionViolation);
}

TEST_CASE("the built-in fiducial has an order-three stabilizer") {
  const auto s = stabilizer_residual(grassl_fiducial_numeric().numeric());
  CHECK(s.residual < 1e-8);
  CHECK(s.order_three);
  CHECK(s.symplectic.pow(3).is_identity());
  testgen::Gen g(2);
  CHECK(stabilizer_residual(g.unit_vector(6)).residual > 1e-3);
}

}  // TEST_SUITE
