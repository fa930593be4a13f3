#pragma once

// Small hand-rolled generators for property tests.  Every generator draws
// from an explicit std::mt19937_64 so failures reproduce from the seed.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "whframes/algebra.hpp"
#include "whframes/group.hpp"

namespace testgen {

using whframes::algebra::AlgebraicNumber;
using whframes::algebra::Rational;
using whframes::algebra::TowerPtr;

struct Gen {
  std::mt19937_64 rng;

  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

  Rational rational(int bound = 9) {
    Rational q(uniform_int(-bound, bound), uniform_int(1, bound));
    q.canonicalize();
    return q;
  }

  /// Each coordinate is nonzero with probability `density`.
  AlgebraicNumber element(const TowerPtr& t, double density = 1.0) {
    std::vector<Rational> c(t->total_degree());
    for (auto& x : c)
      if (uniform(0.0, 1.0) < density) x = rational();
    return {t, std::move(c)};
  }

  /// At most `terms` nonzero coordinates.
  AlgebraicNumber sparse_element(const TowerPtr& t, int terms) {
    std::vector<Rational> c(t->total_degree());
    for (int k = 0; k < terms; ++k) c[static_cast<std::size_t>(uniform_int(0, static_cast<int>(c.size()) - 1))] = rational();
    return {t, std::move(c)};
  }

  AlgebraicNumber nonzero_element(const TowerPtr& t, double density = 1.0) {
    for (;;) {
      auto x = element(t, density);
      if (!x.is_zero()) return x;
    }
  }

  whframes::group::HeisenbergElement heisenberg(int d) {
    return whframes::group::make_heisenberg(d, uniform_int(0, d - 1), uniform_int(0, d - 1), uniform_int(0, 2 * d - 1));
  }

  whframes::group::SymplecticMatrix symplectic(int d) {
    for (;;) {
      const int a = uniform_int(0, d - 1), b = uniform_int(0, d - 1), c = uniform_int(0, d - 1), e = uniform_int(0, d - 1);
      if (((a * e - b * c) % d + d) % d == 1 % d) return whframes::group::SymplecticMatrix::make(d, a, b, c, e);
    }
  }

  Eigen::VectorXcd unit_vector(int d) {
    std::normal_distribution<double> n;
    Eigen::VectorXcd v(d);
    for (int j = 0; j < d; ++j) v(j) = {n(rng), n(rng)};
    return v / v.norm();
  }
};

}  // namespace testgen
