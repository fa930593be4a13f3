#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "generators.hpp"
#include "properties.hpp"
#include "whframes/errors.hpp"
#include "whframes/group.hpp"

using namespace whframes;
using namespace whframes::group;
using algebra::Rational;

namespace {

// |SL(2, Z_d)| = d³ Π_{p | d} (1 - 1/p²)
long long sl2_order(int d) {
  long long n = 1LL * d * d * d;
  int m = d;
  for (int p = 2; p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    n = n / (1LL * p * p) * (1LL * p * p - 1);
  }
  return n;
}

ExactMatrix ident(int d) { return ExactMatrix::identity(group_tower(d), static_cast<std::size_t>(d)); }

}  // namespace

TEST_SUITE("group") {

TEST_CASE("normal form products") {
  const auto x = make_heisenberg(2, 1, 0), z = make_heisenberg(2, 0, 1);
  CHECK(h_mul(z, x) == HeisenbergElement{2, 1, 1, 2});
  CHECK(h_mul(x, z) == HeisenbergElement{2, 1, 1, 0});
  const auto g = make_heisenberg(6, 4, 5, 7);
  CHECK(h_mul(g, h_inverse(g)) == h_identity(6));
  CHECK(make_heisenberg(6, -1, 13, -1) == HeisenbergElement{6, 5, 1, 11});
  CHECK_THROWS_AS(h_mul(make_heisenberg(2, 1, 0), make_heisenberg(3, 1, 0)), IncompatibleDomains);
}

TEST_CASE("commutation examples") {
  CHECK_FALSE(h_commutes(make_heisenberg(6, 1, 0), make_heisenberg(6, 0, 1)));
  CHECK(h_commutes(make_heisenberg(6, 1, 1), make_heisenberg(6, 2, 2)));
  testgen::Gen g(3);
  for (int k = 0; k < 20; ++k) CHECK(h_commutes(g.heisenberg(6), h_identity(6)));
}

TEST_CASE("group laws and the matrix representation") {
  for (int d = 2; d <= 9; ++d) {
    CAPTURE(d);
    CHECK(testprop::group_laws(d, 1000 + static_cast<std::uint64_t>(d), 200) == "");
  }
}

TEST_CASE("commuting elements are exactly those with commuting matrices") {
  for (int d : {2, 3, 4, 6}) {
    testgen::Gen g(40 + d);
    for (int k = 0; k < 30; ++k) {
      const auto x = g.heisenberg(d), y = g.heisenberg(d);
      const auto mx = h_to_matrix(x), my = h_to_matrix(y);
      CHECK(h_commutes(x, y) == (mx * my == my * mx));
      // symplectic form a b' - b a' ≡ 0
      CHECK(h_commutes(x, y) == ((x.a * y.b - x.b * y.a) % d == 0));
    }
  }
}

TEST_CASE("trace orthogonality of the displacement operators") {
  for (int d = 2; d <= 6; ++d) {
    CAPTURE(d);
    CHECK(testprop::trace_orthogonality(d) == "");
  }
}

TEST_CASE("basic matrices") {
  const auto x2 = shift_matrix(2).embed(), z2 = phase_matrix(2).embed();
  CHECK(std::abs(x2(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(x2(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(x2(0, 0)) < 1e-15);
  CHECK(std::abs(z2(1, 1) + 1.0) < 1e-15);

  const auto z3 = phase_matrix(3);
  CHECK(z3(1, 1) == omega_d(3, 1));
  CHECK(z3(2, 2) == omega_d(3, 2));
  CHECK(z3.is_diagonal());

  const auto h = dft_matrix(2).embed();
  const double s = 1 / std::sqrt(2.0);
  CHECK(std::abs(h(0, 0) - s) < 1e-15);
  CHECK(std::abs(h(1, 1) + s) < 1e-15);

  CHECK(p_matrix(2)(1, 1) == omega4d(2, 2));  // i
  const auto p3 = p_matrix(3);
  CHECK(p3(0, 0) == omega_d(3, 0));
  CHECK(p3(1, 1) == omega_d(3, 0));
  CHECK(p3(2, 2) == omega_d(3, 1));
}

TEST_CASE("numeric matrices agree with the exact ones") {
  for (int d = 2; d <= 7; ++d) {
    CAPTURE(d);
    CHECK((dft_matrix(d).embed() - dft_matrix_numeric(d)).norm() < 1e-13);
    CHECK((p_matrix(d).embed() - p_matrix_numeric(d)).norm() < 1e-13);
    testgen::Gen g(d);
    const auto e = g.heisenberg(d);
    CHECK((h_to_matrix(e).embed() - h_to_matrix_numeric(e)).norm() < 1e-13);
    const auto v = g.unit_vector(d);
    CHECK((apply_displacement(e.a, e.b, v) - h_to_matrix_numeric(make_heisenberg(d, e.a, e.b)) * v).norm() <
          1e-13);
  }
}

TEST_CASE("square root of the dimension") {
  for (int d = 2; d <= 12; ++d) {
    CAPTURE(d);
    const auto r = sqrt_dimension(d);
    CHECK(r * r == group_tower(d)->from_rational(Rational(d)));
    CHECK(r.embed().re == doctest::Approx(std::sqrt(static_cast<double>(d))));
  }
}

TEST_CASE("DFT and P act as the generators") {
  for (int d = 2; d <= 7; ++d) {
    CAPTURE(d);
    const auto f = dft_matrix(d), p = p_matrix(d);
    CHECK(f * f.adjoint() == ident(d));
    CHECK(p * p.adjoint() == ident(d));
    CHECK(f * shift_matrix(d) * f.adjoint() == phase_matrix(d));
    CHECK(f * phase_matrix(d) * f.adjoint() == h_to_matrix(make_heisenberg(d, -1, 0)));
    CHECK(realizes_action(f, fourier_symplectic(d)));
    CHECK(realizes_action(p, phase_symplectic(d)));
    CHECK_FALSE(realizes_action(f, phase_symplectic(d)));
  }
}

TEST_CASE("SL(2,Z_d) enumeration") {
  CHECK(sl2_elements(6).size() == 144);
  // brute force over all 16 binary matrices
  int count = 0;
  for (int m = 0; m < 16; ++m)
    if ((((m & 1) * ((m >> 3) & 1)) - (((m >> 1) & 1) * ((m >> 2) & 1)) + 2) % 2 == 1) ++count;
  CHECK(count == 6);
  CHECK(sl2_elements(2).size() == 6);
  for (int d = 2; d <= kMaxEnumerationDimension; ++d) {
    CAPTURE(d);
    const auto all = sl2_elements(d);
    CHECK(static_cast<long long>(all.size()) == sl2_order(d));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set(all.begin(), all.end()).size() == all.size());
  }
  CHECK_THROWS_AS(sl2_elements(13), PreconditionViolation);
  CHECK_THROWS_AS(SymplecticMatrix::make(6, 2, 0, 0, 2), PreconditionViolation);
}

TEST_CASE("order three symplectics") {
  const auto o3 = order3_symplectics(6);
  CHECK(o3.size() == 26);
  for (const auto& s : o3) {
    CHECK_FALSE(s.is_identity());
    CHECK(s.pow(3).is_identity());
  }
  CHECK(std::find(o3.begin(), o3.end(), SymplecticMatrix::make(6, 0, -1, 1, -1)) != o3.end());
}

TEST_CASE("symplectic arithmetic") {
  testgen::Gen g(9);
  for (int k = 0; k < 100; ++k) {
    const int d = g.uniform_int(2, 12);
    const auto s = g.symplectic(d), t = g.symplectic(d);
    CHECK((s * s.inverse()).is_identity());
    CHECK(s.pow(-1) == s.inverse());
    CHECK((s * t).inverse() == t.inverse() * s.inverse());
    CHECK(s.det() == 1 % d);
    const int a = g.uniform_int(0, d - 1), b = g.uniform_int(0, d - 1);
    const auto [a1, b1] = t.apply(a, b);
    CHECK((s * t).apply(a, b) == s.apply(a1, b1));
  }
  CHECK(fourier_symplectic(6).apply(1, 0) == std::pair{0, 1});
  CHECK(fourier_symplectic(6).apply(0, 1) == std::pair{5, 0});
  CHECK(phase_symplectic(6).apply(1, 0) == std::pair{1, 1});
}

TEST_CASE("words reproduce their matrices") {
  for (int d : {2, 3, 4, 6}) {
    for (const auto& s : sl2_elements(d)) {
      auto prod = SymplecticMatrix::identity(d);
      for (char c : symplectic_word(s)) prod = prod * (c == 'F' ? fourier_symplectic(d) : phase_symplectic(d));
      CHECK(prod == s);
    }
  }
  CHECK(symplectic_word(SymplecticMatrix::identity(6)).empty());
  CHECK(symplectic_word(fourier_symplectic(6)) == "F");
}

TEST_CASE("every Clifford lift normalizes the Heisenberg group") {
  for (int d : {2, 3, 4, 5, 6}) {
    CAPTURE(d);
    for (const auto& s : sl2_elements(d)) {
      const auto u = clifford_unitary(s);
      CHECK(realizes_action(u, s));
      CHECK(realizes_action(clifford_unitary_numeric(s), s));
    }
  }
}

TEST_CASE("Clifford lifts are unitary and act on every displacement") {
  testgen::Gen g(21);
  for (int k = 0; k < 12; ++k) {
    const int d = g.uniform_int(2, 6);
    const auto s = g.symplectic(d);
    const auto u = clifford_unitary(s);
    CHECK(u * u.adjoint() == ident(d));
    const int a = g.uniform_int(0, d - 1), b = g.uniform_int(0, d - 1);
    const auto [a2, b2] = s.apply(a, b);
    const auto ratio = u * h_to_matrix(make_heisenberg(d, a, b)) * u.adjoint() *
                       h_to_matrix(make_heisenberg(d, a2, b2)).adjoint();
    CHECK(ratio.is_scalar());
    // the phase is a root of unity of modulus one
    CHECK(algebra::abs_squared(ratio(0, 0)) == group_tower(d)->one());
  }
}

TEST_CASE("lifts compose projectively") {
  testgen::Gen g(33);
  for (int k = 0; k < 20; ++k) {
    const int d = g.uniform_int(2, 7);
    const auto s = g.symplectic(d), t = g.symplectic(d);
    CHECK(realizes_action(clifford_unitary(s) * clifford_unitary(t), s * t));
  }
}

}  // TEST_SUITE
