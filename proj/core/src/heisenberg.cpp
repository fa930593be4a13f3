#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "whframes/errors.hpp"
#include "whframes/group.hpp"

namespace whframes::group {
namespace {

long long mod(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

void require_dimension(int d) {
  if (d < 2) throw PreconditionViolation("dimension must be at least 2");
}

void require_same(const HeisenbergElement& g, const HeisenbergElement& h) {
  if (g.d != h.d) throw IncompatibleDomains("Heisenberg elements of different dimension");
}

// ω_{4d}^k for k < 4d, computed once per dimension.
const std::vector<AlgebraicNumber>& omega_table(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<AlgebraicNumber>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  const int m = 4 * d;
  AlgebraicNumber w = algebra::cyclotomic_generator(m);
  std::vector<AlgebraicNumber> powers;
  powers.reserve(static_cast<std::size_t>(m));
  powers.push_back(w.tower().one());
  for (int k = 1; k < m; ++k) powers.push_back(powers.back() * w);
  return cache.emplace(d, std::move(powers)).first->second;
}

std::complex<double> unit(long long k, long long m) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(mod(k, m)) / static_cast<double>(m);
  return {std::cos(t), std::sin(t)};
}

}  // namespace

HeisenbergElement make_heisenberg(int d, long long a, long long b, long long c) {
  require_dimension(d);
  return {d, static_cast<int>(mod(a, d)), static_cast<int>(mod(b, d)), static_cast<int>(mod(c, 2LL * d))};
}

HeisenbergElement h_identity(int d) { return make_heisenberg(d, 0, 0, 0); }

HeisenbergElement h_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
  require_same(g, h);
  // Z^b X^a' = ω_d^{b a'} X^a' Z^b
  return make_heisenberg(g.d, g.a + h.a, g.b + h.b, g.c + h.c + 2LL * g.b * h.a);
}

HeisenbergElement h_inverse(const HeisenbergElement& g) {
  // (X^a Z^b)^{-1} = Z^{-b} X^{-a} = ω_d^{ab} X^{-a} Z^{-b}
  return make_heisenberg(g.d, -g.a, -g.b, -g.c + 2LL * g.a * g.b);
}

HeisenbergElement h_pow(const HeisenbergElement& g, long long e) {
  HeisenbergElement base = e < 0 ? h_inverse(g) : g;
  unsigned long long n = static_cast<unsigned long long>(e < 0 ? -e : e);
  HeisenbergElement acc = h_identity(g.d);
  while (n) {
    if (n & 1) acc = h_mul(acc, base);
    base = h_mul(base, base);
    n >>= 1;
  }
  return acc;
}

bool h_commutes(const HeisenbergElement& g, const HeisenbergElement& h) {
  require_same(g, h);
  return mod(static_cast<long long>(g.a) * h.b - static_cast<long long>(h.a) * g.b, g.d) == 0;
}

TowerPtr group_tower(int d) {
  require_dimension(d);
  return algebra::cyclotomic_tower(4 * d);
}

AlgebraicNumber omega4d(int d, long long k) {
  require_dimension(d);
  return omega_table(d)[static_cast<std::size_t>(mod(k, 4LL * d))];
}

AlgebraicNumber omega_d(int d, long long k) { return omega4d(d, 4 * mod(k, d)); }

AlgebraicNumber sqrt_dimension(int d) {
  // quadratic Gauss sum: Σ_{n<2d} ω_{4d}^{n²} = (1+i)√d
  const auto& w = omega_table(d);
  AlgebraicNumber s = group_tower(d)->zero();
  for (long long n = 0; n < 2LL * d; ++n) s += w[static_cast<std::size_t>(mod(-n * n, 4LL * d))];
  AlgebraicNumber r = (w[0] + w[static_cast<std::size_t>(d)]) * s * algebra::Rational(1, 2);
  if (!(r * r == group_tower(d)->from_rational(d))) {
    throw DataIntegrityError("Gauss sum does not square to d");
  }
  return r;
}

ExactMatrix shift_matrix(int d) {
  ExactMatrix m(group_tower(d), static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) m(static_cast<std::size_t>((j + 1) % d), static_cast<std::size_t>(j)) = omega4d(d, 0);
  return m;
}

ExactMatrix phase_matrix(int d) {
  ExactMatrix m(group_tower(d), static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) m(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = omega_d(d, j);
  return m;
}

ExactMatrix dft_matrix(int d) {
  const AlgebraicNumber inv_sqrt = sqrt_dimension(d) * algebra::Rational(1, d);
  ExactMatrix m(group_tower(d), static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      m(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = omega_d(d, static_cast<long long>(j) * k) * inv_sqrt;
  return m;
}

ExactMatrix p_matrix(int d) {
  ExactMatrix m(group_tower(d), static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (long long j = 0; j < d; ++j) {
    // even d: ω_{2d}^{j²}; odd d: ω_d^{j(j-1)/2}
    const long long e4 = d % 2 == 0 ? 2 * j * j : 2 * j * (j - 1);
    m(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = omega4d(d, e4);
  }
  return m;
}

ExactMatrix h_to_matrix(const HeisenbergElement& g) {
  const int d = g.d;
  ExactMatrix m(group_tower(d), static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    // ω_{2d}^c X^a Z^b |j> = ω_{2d}^c ω_d^{bj} |j+a>
    m(static_cast<std::size_t>((j + g.a) % d), static_cast<std::size_t>(j)) =
        omega4d(d, 2LL * g.c + 4LL * g.b * j);
  }
  return m;
}

Eigen::MatrixXcd shift_matrix_numeric(int d) { return h_to_matrix_numeric(make_heisenberg(d, 1, 0)); }
Eigen::MatrixXcd phase_matrix_numeric(int d) { return h_to_matrix_numeric(make_heisenberg(d, 0, 1)); }

Eigen::MatrixXcd dft_matrix_numeric(int d) {
  require_dimension(d);
  Eigen::MatrixXcd m(d, d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) m(j, k) = unit(static_cast<long long>(j) * k, d) * s;
  return m;
}

Eigen::MatrixXcd p_matrix_numeric(int d) {
  require_dimension(d);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (long long j = 0; j < d; ++j) m(j, j) = unit(d % 2 == 0 ? 2 * j * j : 2 * j * (j - 1), 4LL * d);
  return m;
}

Eigen::MatrixXcd h_to_matrix_numeric(const HeisenbergElement& g) {
  const int d = g.d;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) m((j + g.a) % d, j) = unit(2LL * g.c + 4LL * g.b * j, 4LL * d);
  return m;
}

Eigen::VectorXcd apply_displacement(int a, int b, const Eigen::VectorXcd& v) {
  const auto d = static_cast<int>(v.size());
  Eigen::VectorXcd out(d);
  for (int j = 0; j < d; ++j) out((j + a) % d) = unit(static_cast<long long>(b) * j, d) * v(j);
  return out;
}

ExactVector apply_displacement(int a, int b, const ExactVector& v,
                               const std::vector<AlgebraicNumber>& omega_powers) {
  const auto d = static_cast<int>(v.size());
  if (static_cast<int>(omega_powers.size()) != d) {
    throw IncompatibleDomains("need the d powers of ω_d in the vector's tower");
  }
  ExactVector out(v.size(), v.front().tower().zero());
  for (int j = 0; j < d; ++j) {
    const auto& w = omega_powers[static_cast<std::size_t>((static_cast<long long>(b) * j) % d)];
    out[static_cast<std::size_t>((j + a) % d)] = v[static_cast<std::size_t>(j)] * w;
  }
  return out;
}

}  // namespace whframes::group
