#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "whframes/algebra.hpp"
#include "whframes/errors.hpp"

namespace whframes::algebra {

namespace {

using Coords = std::vector<Rational>;

std::complex<double> unit_root(int m) {
  return std::polar(1.0, 2.0 * std::numbers::pi / m);
}

// Exact polynomial division over Z (divisor monic).
std::vector<mpz_class> div_exact(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<mpz_class> q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    const mpz_class c = a[k];
    q[k - db] = c;
    for (std::size_t t = 0; t <= db; ++t) a[k - db + t] -= c * b[t];
  }
  return q;
}

TowerPtr build_cyclotomic(int m) {
  const auto phi = cyclotomic_polynomial(m);
  const auto q = FieldTower::rationals();
  std::vector<AlgebraicNumber> coeffs;
  for (std::size_t l = 0; l + 1 < phi.size(); ++l) coeffs.push_back(q->from_rational(Rational(phi[l])));
  const std::string id = "cyclotomic:" + std::to_string(m);
  auto t = q->extend(id, "w" + std::to_string(m), coeffs,
                     {RootSelection::ClosestTo, unit_root(m)}, Conjugation::Inverted);
  const AlgebraicNumber w = t->generator(0);
  const int order = m % 2 == 0 ? m : 2 * m;
  const AlgebraicNumber zeta = m % 2 == 0 ? w : -w.pow((m + 1) / 2);
  return t->finalize(id, std::pair{order, Coords(zeta.coords().begin(), zeta.coords().end())},
                     true);
}

TowerPtr build_degree96() {
  const auto q = FieldTower::rationals();
  const EmbeddingHint positive{RootSelection::PositiveReal, {}};
  auto r = [](long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
  };

  auto t1 = q->extend("grassl96:sqrt3", "sqrt3", {q->from_rational(-3), q->zero()}, positive,
                      Conjugation::Fixed);
  auto t2 = t1->extend("grassl96:sqrt7", "sqrt7", {t1->from_rational(-7), t1->zero()}, positive,
                       Conjugation::Fixed);
  auto t3 = t2->extend("grassl96:i", "i", {t2->from_rational(1), t2->zero()},
                       {RootSelection::ClosestTo, {0.0, 1.0}}, Conjugation::Negated);

  // θ1² = (3√21 + 9)/224
  const AlgebraicNumber s21_3 = lift(t2->generator(0), t3) * lift(t2->generator(1), t3);
  auto t4 = t3->extend("grassl96:theta1", "theta1",
                       {-((s21_3 * r(3) + t3->from_rational(9)) * r(1, 224)), t3->zero()}, positive,
                       Conjugation::Fixed);

  // θ2 is a root of x³ − ((√21 − 3)/28) x + ((21 − 5√21)/126) θ1.  This cubic
  // has three real roots; the largest one is used.
  const AlgebraicNumber s21_4 = lift(s21_3, t4);
  const AlgebraicNumber th1 = t4->generator(3);
  const AlgebraicNumber p1 = -((s21_4 - t4->from_rational(3)) * r(1, 28));
  const AlgebraicNumber p0 = (t4->from_rational(21) - s21_4 * r(5)) * r(1, 126) * th1;
  auto t5 = t4->extend("grassl96:theta2", "theta2", {p0, p1, t4->zero()},
                       {RootSelection::LargestReal, {}}, Conjugation::Fixed);

  // θ3² = (3√21 + 3√7 + 7√3 + 21)/48384, the constant that normalises the
  // fiducial exactly.
  const AlgebraicNumber s3 = t5->generator(0), s7 = t5->generator(1);
  const AlgebraicNumber rad3 =
      (s3 * s7 * r(3) + s7 * r(3) + s3 * r(7) + t5->from_rational(21)) * r(1, 48384);
  auto t6 = t5->extend("grassl96:theta3", "theta3", {-rad3, t5->zero()}, positive,
                       Conjugation::Fixed);

  // ω12 = (√3 + i)/2
  const AlgebraicNumber w12 = (t6->generator(0) + t6->generator(2)) * r(1, 2);
  return t6->finalize("grassl96", std::pair{12, Coords(w12.coords().begin(), w12.coords().end())},
                      true);
}

TowerPtr build_appendix() {
  const auto q = FieldTower::rationals();
  const auto phi = cyclotomic_polynomial(12);
  std::vector<AlgebraicNumber> coeffs;
  for (std::size_t l = 0; l + 1 < phi.size(); ++l) coeffs.push_back(q->from_rational(Rational(phi[l])));
  auto t1 = q->extend("appendix8:omega", "omega", coeffs,
                      {RootSelection::ClosestTo, unit_root(12)}, Conjugation::Inverted);
  const AlgebraicNumber w = t1->generator(0);
  // θ² = (−2ω³ + 4ω + 3)/48
  const AlgebraicNumber rad = (w.pow(3) * Rational(-2) + w * Rational(4) + t1->from_rational(3)) *
                              Rational(1, 48);
  auto t2 = t1->extend("appendix8:theta", "theta", {-rad, t1->zero()},
                       {RootSelection::PositiveRealPart, {}}, Conjugation::Fixed);
  const AlgebraicNumber w2 = t2->generator(0);
  return t2->finalize("appendix8", std::pair{12, Coords(w2.coords().begin(), w2.coords().end())},
                      true);
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int m) {
  if (m < 1) throw PreconditionViolation("cyclotomic order must be >= 1");
  // x^m - 1 divided by Φ_k for every proper divisor k of m
  std::vector<mpz_class> p(static_cast<std::size_t>(m) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int k = 1; k < m; ++k) {
    if (m % k == 0) p = div_exact(p, cyclotomic_polynomial(k));
  }
  return p;
}

TowerPtr rationals() { return FieldTower::rationals(); }

TowerPtr cyclotomic_tower(int m) {
  if (m < 1) throw PreconditionViolation("cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<int, TowerPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = build_cyclotomic(m);
  return slot;
}

TowerPtr grassl_tower() {
  static const TowerPtr t = build_degree96();
  return t;
}

TowerPtr appendix_tower() {
  static const TowerPtr t = build_appendix();
  return t;
}

TowerPtr tower_by_id(const std::string& id) {
  if (id == "Q") return rationals();
  if (id == "grassl96") return grassl_tower();
  if (id == "appendix8") return appendix_tower();
  const std::string prefix = "cyclotomic:";
  if (id.rfind(prefix, 0) == 0) {
    const std::string tail = id.substr(prefix.size());
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == tail.size() && !tail.empty() && m >= 1) return cyclotomic_tower(m);
  }
  throw PreconditionViolation("unknown tower id '" + id + "'");
}

GrasslGenerators grassl_generators() {
  const auto t = grassl_tower();
  return {t->generator(0), t->generator(1), t->generator(2),
          t->generator(3), t->generator(4), t->generator(5)};
}

AppendixGenerators appendix_generators() {
  const auto t = appendix_tower();
  return {t->generator(0), t->generator(1)};
}

AlgebraicNumber cyclotomic_generator(int m) { return cyclotomic_tower(m)->generator(0); }

}  // namespace whframes::algebra
