#pragma once

// Property checks shared by the unit suites and the acceptance runner.  Each
// returns an empty string on success, otherwise a description of the first
// counterexample.

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "whframes/algebra.hpp"
#include "whframes/exact_linalg.hpp"
#include "whframes/group.hpp"
#include "whframes/mub.hpp"

namespace testprop {

using namespace whframes;
using algebra::AlgebraicNumber;
using algebra::TowerPtr;

inline std::string describe(const AlgebraicNumber& x) {
  std::ostringstream os;
  const auto e = x.embed();
  os << x.tower().id() << "(" << e.re << (e.im < 0 ? "" : "+") << e.im << "i)";
  return os.str();
}

/// Ring and field axioms on random elements.  `density` controls how many
/// coordinates are nonzero; inverses use sparse elements in large towers.
inline std::string field_axioms(const TowerPtr& t, std::uint64_t seed, int trials, double density = 1.0,
                                int inverse_terms = 0) {
  testgen::Gen g(seed);
  const auto zero = t->zero(), one = t->one();
  for (int k = 0; k < trials; ++k) {
    const auto x = g.element(t, density), y = g.element(t, density), z = g.element(t, density);
    if (!(x + y == y + x)) return "addition not commutative at " + describe(x);
    if (!((x + y) + z == x + (y + z))) return "addition not associative";
    if (!(x * y == y * x)) return "multiplication not commutative at " + describe(x);
    if (!((x * y) * z == x * (y * z))) return "multiplication not associative";
    if (!(x * (y + z) == x * y + x * z)) return "distributivity fails";
    if (!(x + zero == x) || !(x * one == x)) return "identity elements fail";
    if (!(x - x == zero) || !((x + (-x)).is_zero())) return "additive inverse fails";
    const auto w = inverse_terms > 0 ? g.sparse_element(t, inverse_terms) : g.element(t, density);
    if (!w.is_zero()) {
      if (!(w * w.inverse() == one)) return "multiplicative inverse fails at " + describe(w);
      if (!((x / w) * w == x)) return "division fails";
    }
  }
  return {};
}

/// conj is an involutive ring automorphism matching complex conjugation under
/// the embedding, and the embedding is a ring homomorphism within error bounds.
inline std::string conj_embed_consistency(const TowerPtr& t, std::uint64_t seed, int trials,
                                          double density = 1.0) {
  testgen::Gen g(seed);
  auto close = [](const algebra::ComplexApprox& a, std::complex<double> b, double tol) {
    return std::abs(a.value() - b) <= tol;
  };
  for (int k = 0; k < trials; ++k) {
    const auto x = g.element(t, density), y = g.element(t, density);
    if (!(x.conj().conj() == x)) return "conj not involutive at " + describe(x);
    if (!((x * y).conj() == x.conj() * y.conj())) return "conj not multiplicative";
    if (!((x + y).conj() == x.conj() + y.conj())) return "conj not additive";
    const auto ex = x.embed(), ey = y.embed();
    const double slack = 1e-9;
    if (!close(x.conj().embed(), std::conj(ex.value()), ex.err_bound + x.conj().embed().err_bound + slack))
      return "conj disagrees with the embedding at " + describe(x);
    const auto exy = (x * y).embed();
    const double tol_mul = exy.err_bound + std::abs(ex.value()) * ey.err_bound +
                           std::abs(ey.value()) * ex.err_bound + ex.err_bound * ey.err_bound + slack;
    if (!close(exy, ex.value() * ey.value(), tol_mul)) return "embedding not multiplicative";
    const auto esum = (x + y).embed();
    if (!close(esum, ex.value() + ey.value(), esum.err_bound + ex.err_bound + ey.err_bound + slack))
      return "embedding not additive";
    const auto n = x * x.conj();
    if (!(n.conj() == n)) return "x conj(x) not real";
    if (n.embed().re < -n.embed().err_bound) return "x conj(x) negative";
  }
  return {};
}

/// Group axioms of the symbolic Heisenberg product and agreement with the
/// matrix representation.
inline std::string group_laws(int d, std::uint64_t seed, int trials) {
  using namespace group;
  testgen::Gen g(seed);
  const auto e = h_identity(d);
  for (int k = 0; k < trials; ++k) {
    const auto x = g.heisenberg(d), y = g.heisenberg(d), z = g.heisenberg(d);
    if (!(h_mul(h_mul(x, y), z) == h_mul(x, h_mul(y, z)))) return "product not associative";
    if (!(h_mul(x, e) == x) || !(h_mul(e, x) == x)) return "identity fails";
    if (!(h_mul(x, h_inverse(x)) == e) || !(h_mul(h_inverse(x), x) == e)) return "inverse fails";
    if (const auto xd = h_pow(x, d); xd.a != 0 || xd.b != 0) return "x^d not central";
    const bool comm = h_mul(x, y) == h_mul(y, x);
    if (comm != h_commutes(x, y)) return "h_commutes disagrees with the product";
    if (k < 8) {
      const auto mx = h_to_matrix(x), my = h_to_matrix(y);
      if (!(h_to_matrix(h_mul(x, y)) == mx * my)) return "matrix representation not multiplicative";
      if (!(h_to_matrix(h_inverse(x)) == mx.adjoint())) return "inverse not the adjoint";
    }
  }
  return {};
}

/// Tr(D(p)† D(q)) = d δ_pq over all d² unitaries X^a Z^b, exactly.
inline std::string trace_orthogonality(int d) {
  using namespace group;
  std::vector<ExactMatrix> ms;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) ms.push_back(h_to_matrix(make_heisenberg(d, a, b)));
  const auto t = group_tower(d);
  const auto dd = t->from_rational(d);
  for (std::size_t p = 0; p < ms.size(); ++p) {
    const auto ap = ms[p].adjoint();
    for (std::size_t q = 0; q < ms.size(); ++q) {
      auto tr = t->zero();
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) tr += ap(r, c) * ms[q](c, r);
      if (!(tr == (p == q ? dd : t->zero())))
        return "d=" + std::to_string(d) + " pair (" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
  }
  return {};
}

/// The exact unbiasedness condition for every admissible standard_triple(d, k).
inline std::string standard_triples(int dmax) {
  for (int d = 2; d <= dmax; ++d) {
    for (int k = 1; k < d; ++k) {
      if (std::gcd(k, d) != 1) continue;
      const auto r = mub::verify_mub(mub::standard_triple(d, k));
      if (!r.exact || !r.pass) return "standard_triple(" + std::to_string(d) + "," + std::to_string(k) + ")";
    }
  }
  return {};
}

}  // namespace testprop
