#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "whframes/algebra.hpp"
#include "whframes/errors.hpp"

namespace whframes::algebra {

namespace {

using Coords = std::vector<Rational>;
using Poly = std::vector<Coords>;  // coefficient chunks, constant term first

bool all_zero(std::span<const Rational> x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool rational_only(std::span<const Rational> x) {
  return std::all_of(x.begin() + 1, x.end(), [](const Rational& q) { return sgn(q) == 0; });
}

ExtReal to_ext(const Rational& q) {
  if (sgn(q) == 0) return ExtReal(0);
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return ExtReal(q.get_num().get_si());
  return ExtReal(q.get_num().get_str()) / ExtReal(q.get_den().get_str());
}

double ext_abs(const ExtComplex& z) { return static_cast<double>(abs(z)); }

void trim(Poly& p) {
  while (!p.empty() && all_zero(p.back())) p.pop_back();
}

}  // namespace

std::string EmbeddingHint::describe() const {
  switch (rule) {
    case RootSelection::PositiveReal: return "positive real root";
    case RootSelection::LargestReal: return "largest real root";
    case RootSelection::UniqueReal: return "unique real root";
    case RootSelection::PositiveRealPart: return "root with positive real part";
    case RootSelection::ClosestTo: {
      std::ostringstream os;
      os << "root closest to " << target.real() << (target.imag() < 0 ? "" : "+") << target.imag()
         << "i";
      return os.str();
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// construction

TowerPtr FieldTower::rationals() {
  static const TowerPtr q = [] {
    auto t = std::shared_ptr<FieldTower>(new FieldTower());
    t->unity_ = {Rational(-1)};
    return TowerPtr(std::move(t));
  }();
  return q;
}

TowerPtr FieldTower::extend(std::string id, std::string generator,
                            const std::vector<AlgebraicNumber>& coeffs, EmbeddingHint hint,
                            Conjugation conjugation, bool checked) const {
  const std::size_t n = coeffs.size();
  if (n == 0) throw PreconditionViolation("minimal polynomial must have degree >= 1");
  const std::size_t lower = levels_.size();
  const std::size_t D = total_degree();

  Level lv;
  lv.generator = std::move(generator);
  lv.degree = n;
  lv.hint = hint;
  lv.conjugation = conjugation;
  for (const auto& c : coeffs) {
    if (!c.tower().same_as(*this)) {
      throw IncompatibleDomains("minimal polynomial coefficient outside the base tower");
    }
    lv.minpoly.emplace_back(c.coords().begin(), c.coords().end());
  }

  // Numeric roots of the minimal polynomial under the base embedding.
  std::vector<ExtComplex> p(n + 1);
  std::vector<double> perr(n + 1, 0.0);
  for (std::size_t l = 0; l < n; ++l) {
    auto e = evaluate(lower, lv.minpoly[l]);
    p[l] = e.value;
    perr[l] = e.err_bound;
  }
  p[n] = ExtComplex(1);

  auto eval_poly = [&](const ExtComplex& z) {
    ExtComplex v = p[n];
    for (std::size_t l = n; l-- > 0;) v = v * z + p[l];
    return v;
  };
  auto eval_deriv = [&](const ExtComplex& z) {
    ExtComplex v = ExtComplex(static_cast<double>(n));
    for (std::size_t l = n - 1; l-- > 0;) v = v * z + p[l + 1] * ExtComplex(static_cast<double>(l + 1));
    return v;
  };

  std::vector<ExtComplex> roots(n);
  if (n == 1) {
    roots[0] = -p[0];
  } else {
    // Durand-Kerner from the usual non-symmetric seeds.
    const ExtComplex seed(ExtReal("0.4"), ExtReal("0.9"));
    ExtComplex z = ExtComplex(1);
    for (auto& r : roots) {
      r = z;
      z *= seed;
    }
    const ExtReal stop("1e-45");
    for (int iter = 0; iter < 2000; ++iter) {
      ExtReal change = 0;
      for (std::size_t k = 0; k < n; ++k) {
        ExtComplex den = ExtComplex(1);
        for (std::size_t j = 0; j < n; ++j)
          if (j != k) den *= roots[k] - roots[j];
        const ExtComplex step = eval_poly(roots[k]) / den;
        roots[k] -= step;
        change = std::max(change, ExtReal(abs(step)));
      }
      if (change < stop) break;
    }
    for (auto& r : roots) {
      for (int it = 0; it < 4; ++it) {
        const ExtComplex d = eval_deriv(r);
        if (abs(d) == 0) break;
        r -= eval_poly(r) / d;
      }
    }
  }

  auto is_real = [](const ExtComplex& z) {
    return abs(z.imag()) <= ExtReal("1e-30") * std::max(ExtReal(1), ExtReal(abs(z)));
  };
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < n; ++k)
    if (is_real(roots[k])) ++lv.real_root_count;

  auto fail = [&](const std::string& why) {
    throw std::runtime_error("tower " + id + ": cannot select " + hint.describe() + " for " +
                             lv.generator + ": " + why);
  };
  std::size_t chosen = n;
  switch (hint.rule) {
    case RootSelection::PositiveReal:
      for (std::size_t k = 0; k < n; ++k)
        if (is_real(roots[k]) && roots[k].real() > 0) candidates.push_back(k);
      if (candidates.size() != 1) fail(std::to_string(candidates.size()) + " positive real roots");
      chosen = candidates[0];
      break;
    case RootSelection::UniqueReal:
      for (std::size_t k = 0; k < n; ++k)
        if (is_real(roots[k])) candidates.push_back(k);
      if (candidates.size() != 1) fail(std::to_string(candidates.size()) + " real roots");
      chosen = candidates[0];
      break;
    case RootSelection::LargestReal:
      for (std::size_t k = 0; k < n; ++k)
        if (is_real(roots[k]) && (chosen == n || roots[k].real() > roots[chosen].real())) chosen = k;
      if (chosen == n) fail("no real root");
      break;
    case RootSelection::PositiveRealPart:
      for (std::size_t k = 0; k < n; ++k)
        if (roots[k].real() > ExtReal("1e-30")) candidates.push_back(k);
      if (candidates.size() != 1) fail(std::to_string(candidates.size()) + " roots with Re > 0");
      chosen = candidates[0];
      break;
    case RootSelection::ClosestTo: {
      const ExtComplex t(ExtReal(hint.target.real()), ExtReal(hint.target.imag()));
      for (std::size_t k = 0; k < n; ++k)
        if (chosen == n || abs(roots[k] - t) < abs(roots[chosen] - t)) chosen = k;
      break;
    }
  }
  lv.root = roots[chosen];
  if (is_real(lv.root)) lv.root = ExtComplex(lv.root.real(), ExtReal(0));

  // Root error radius: residual plus coefficient uncertainty, over |p'|.
  {
    const double absroot = ext_abs(lv.root);
    double coeff_term = 0.0;
    for (std::size_t l = 0; l < n; ++l) coeff_term += perr[l] * std::pow(absroot, double(l));
    if (n == 1) {
      lv.root_radius = perr[0];
    } else {
      const double deriv = ext_abs(eval_deriv(lv.root));
      if (deriv == 0.0) fail("multiple root");
      lv.root_radius = 2.0 * (ext_abs(eval_poly(lv.root)) + coeff_term) / deriv + 1e-45;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != chosen && ext_abs(roots[k] - lv.root) < 1e3 * lv.root_radius) {
          fail("roots not separated at working precision");
        }
      }
    }
  }

  auto t = std::shared_ptr<FieldTower>(new FieldTower(*this));
  t->id_ = std::move(id);
  t->checked_ = checked_ && checked;
  t->levels_.push_back(std::move(lv));
  t->strides_.push_back(D * n);
  t->unity_order_ = unity_order_;
  t->unity_ = unity_;
  t->unity_.resize(D * n);

  // Conjugation: image of the generator and its powers, checked exactly.
  Level& top = t->levels_.back();
  const std::size_t L = t->levels_.size();
  bool lower_conj = true;
  for (std::size_t k = 0; k + 1 < L; ++k)
    if (t->levels_[k].conjugation == Conjugation::Undeclared) lower_conj = false;
  if (!lower_conj) top.conjugation = Conjugation::Undeclared;
  if (top.conjugation != Conjugation::Undeclared) {
    const std::size_t DN = D * n;
    Coords g(DN);
    if (n == 1) {
      for (std::size_t c = 0; c < D; ++c) g[c] = -top.minpoly[0][c];
    } else {
      g[D] = 1;
    }
    Coords image;
    switch (top.conjugation) {
      case Conjugation::Fixed: image = g; break;
      case Conjugation::Negated:
        image = g;
        for (auto& q : image) q = -q;
        break;
      case Conjugation::Inverted: image = t->inverse(L, g); break;
      case Conjugation::Undeclared: break;
    }
    top.conj_powers.assign(n, Coords(DN));
    top.conj_powers[0][0] = 1;
    for (std::size_t j = 1; j < n; ++j) t->mul(L, top.conj_powers[j - 1], image, top.conj_powers[j]);
    // conj(minpoly)(image) must vanish.
    Coords power_n(DN), acc(DN), tmp(DN);
    t->mul(L, top.conj_powers[n - 1], image, power_n);
    acc = power_n;
    for (std::size_t l = 0; l < n; ++l) {
      Coords cl = this->conjugate(lower, top.minpoly[l]);
      t->scale_chunks(L, cl, top.conj_powers[l], tmp);
      for (std::size_t c = 0; c < DN; ++c) acc[c] += tmp[c];
    }
    if (!all_zero(acc)) {
      throw std::runtime_error("tower " + t->id_ + ": declared conjugation of " + top.generator +
                               " is not a field automorphism");
    }
    const auto emb = t->evaluate(L, image);
    const ExtComplex expect(top.root.real(), -top.root.imag());
    if (ext_abs(emb.value - expect) > 1e3 * (emb.err_bound + top.root_radius) + 1e-30) {
      throw std::runtime_error("tower " + t->id_ + ": conjugation of " + top.generator +
                               " disagrees with the chosen embedding");
    }
  }
  return t;
}

TowerPtr FieldTower::finalize(std::string id,
                              std::optional<std::pair<int, std::vector<Rational>>> unity,
                              bool checked) const {
  auto t = std::shared_ptr<FieldTower>(new FieldTower(*this));
  t->id_ = std::move(id);
  t->checked_ = checked;
  if (unity) {
    auto [order, coords] = *unity;
    coords.resize(total_degree());
    const AlgebraicNumber z(t, coords);
    if (!(z.pow(order) == t->one())) {
      throw std::runtime_error("tower " + t->id_ + ": declared root of unity has wrong order");
    }
    for (int p = 2; p <= order; ++p) {
      if (order % p == 0 && z.pow(order / p) == t->one()) {
        throw std::runtime_error("tower " + t->id_ + ": declared root of unity is not primitive");
      }
    }
    t->unity_order_ = order;
    t->unity_ = std::move(coords);
  }
  return t;
}

// ---------------------------------------------------------------------------
// queries

AlgebraicNumber FieldTower::zero() const { return AlgebraicNumber(shared_from_this()); }

AlgebraicNumber FieldTower::one() const { return from_rational(1); }

AlgebraicNumber FieldTower::from_rational(const Rational& q) const {
  Coords c(total_degree());
  c[0] = q;
  return AlgebraicNumber(shared_from_this(), std::move(c));
}

AlgebraicNumber FieldTower::generator(std::size_t k) const {
  const Level& lv = levels_.at(k);
  Coords c(total_degree());
  if (lv.degree == 1) {
    for (std::size_t i = 0; i < strides_[k]; ++i) c[i] = -lv.minpoly[0][i];
  } else {
    c[strides_[k]] = 1;
  }
  return AlgebraicNumber(shared_from_this(), std::move(c));
}

std::optional<AlgebraicNumber> FieldTower::root_of_unity(int m) const {
  if (m <= 0) return std::nullopt;
  if (m == 1) return one();
  if (m == 2) return from_rational(-1);
  if (unity_order_ % m != 0) return std::nullopt;
  AlgebraicNumber z(shared_from_this(), unity_);
  return z.pow(unity_order_ / m);
}

bool FieldTower::same_as(const FieldTower& other) const {
  if (this == &other) return true;
  return id_ == other.id_ && levels_.size() == other.levels_.size() &&
         total_degree() == other.total_degree();
}

bool FieldTower::is_prefix_of(const FieldTower& other) const {
  if (levels_.size() > other.levels_.size()) return false;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (levels_[k].generator != other.levels_[k].generator ||
        levels_[k].minpoly != other.levels_[k].minpoly) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// kernels

void FieldTower::scale_chunks(std::size_t L, std::span<const Rational> lower,
                              std::span<const Rational> x, std::span<Rational> out) const {
  const std::size_t D = strides_[L - 1];
  const std::size_t n = levels_[L - 1].degree;
  Coords tmp(D);
  for (std::size_t j = 0; j < n; ++j) {
    auto xj = x.subspan(j * D, D);
    auto oj = out.subspan(j * D, D);
    if (all_zero(xj)) {
      for (auto& q : oj) q = 0;
      continue;
    }
    mul(L - 1, lower, xj, tmp);
    std::copy(tmp.begin(), tmp.end(), oj.begin());
  }
}

void FieldTower::mul(std::size_t L, std::span<const Rational> x, std::span<const Rational> y,
                     std::span<Rational> out) const {
  if (L == 0) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t size = strides_[L];
  if (rational_only(x)) {
    const Rational s = x[0];
    for (std::size_t c = 0; c < size; ++c) out[c] = s * y[c];
    return;
  }
  if (rational_only(y)) {
    const Rational s = y[0];
    for (std::size_t c = 0; c < size; ++c) out[c] = s * x[c];
    return;
  }
  const Level& lv = levels_[L - 1];
  const std::size_t D = strides_[L - 1];
  const std::size_t n = lv.degree;
  Coords acc((2 * n - 1) * D);
  Coords tmp(D);
  std::vector<bool> xz(n), yz(n);
  for (std::size_t i = 0; i < n; ++i) {
    xz[i] = all_zero(x.subspan(i * D, D));
    yz[i] = all_zero(y.subspan(i * D, D));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (xz[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (yz[j]) continue;
      mul(L - 1, x.subspan(i * D, D), y.subspan(j * D, D), tmp);
      for (std::size_t c = 0; c < D; ++c) acc[(i + j) * D + c] += tmp[c];
    }
  }
  // g^m = -sum_l p_l g^{m-n+l} for m >= n
  for (std::size_t m = 2 * n - 2; m >= n; --m) {
    std::span<const Rational> top(acc.data() + m * D, D);
    if (all_zero(top)) continue;
    for (std::size_t l = 0; l < n; ++l) {
      const Coords& p = lv.minpoly[l];
      if (all_zero(p)) continue;
      mul(L - 1, p, top, tmp);
      for (std::size_t c = 0; c < D; ++c) acc[(m - n + l) * D + c] -= tmp[c];
    }
  }
  std::copy(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(n * D), out.begin());
}

std::vector<Rational> FieldTower::inverse(std::size_t L, std::span<const Rational> x) const {
  if (all_zero(x)) throw std::domain_error("division by zero");
  const std::size_t size = strides_[L];
  if (rational_only(x)) {
    Coords r(size);
    r[0] = 1 / x[0];
    return r;
  }
  const Level& lv = levels_[L - 1];
  const std::size_t D = strides_[L - 1];
  const std::size_t n = lv.degree;
  const std::size_t lower = L - 1;

  auto one = [&] {
    Coords c(D);
    c[0] = 1;
    return c;
  };
  auto lmul = [&](const Coords& a, const Coords& b) {
    Coords r(D);
    mul(lower, a, b, r);
    return r;
  };

  if (n == 2) {
    // x = a + b g with g² + p1 g + p0 = 0; the conjugate root is -p1 - g, so
    // x (a - b p1 - b g) = a² - a b p1 + b² p0 lies in the field below.
    const Coords a(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(D));
    const Coords b(x.begin() + static_cast<std::ptrdiff_t>(D), x.end());
    const Coords bp1 = lmul(b, lv.minpoly[1]);
    Coords sa = a;
    for (std::size_t c = 0; c < D; ++c) sa[c] -= bp1[c];
    Coords norm = lmul(a, sa);
    const Coords bbp0 = lmul(lmul(b, b), lv.minpoly[0]);
    for (std::size_t c = 0; c < D; ++c) norm[c] += bbp0[c];
    if (all_zero(norm)) {
      throw std::domain_error("minimal polynomial of " + lv.generator + " in tower " + id_ + " is reducible");
    }
    const Coords ninv = inverse(lower, norm);
    const Coords lo = lmul(sa, ninv);
    const Coords hi = lmul(b, ninv);
    Coords result(size);
    for (std::size_t c = 0; c < D; ++c) {
      result[c] = lo[c];
      result[D + c] = -hi[c];
    }
    return result;
  }
  auto poly_mul = [&](const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return Poly{};
    Poly r(a.size() + b.size() - 1, Coords(D));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        Coords t = lmul(a[i], b[j]);
        for (std::size_t c = 0; c < D; ++c) r[i + j][c] += t[c];
      }
    trim(r);
    return r;
  };
  auto poly_sub = [&](Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Coords(D));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t c = 0; c < D; ++c) a[i][c] -= b[i][c];
    trim(a);
    return a;
  };
  auto divmod = [&](Poly a, const Poly& b) {
    const Coords lc_inv = inverse(lower, b.back());
    const std::size_t db = b.size() - 1;
    Poly q(a.size() >= b.size() ? a.size() - db : 0, Coords(D));
    while (!a.empty() && a.size() >= b.size()) {
      const std::size_t k = a.size() - 1;
      const Coords coef = lmul(a[k], lc_inv);
      q[k - db] = coef;
      for (std::size_t t = 0; t <= db; ++t) {
        Coords prod = lmul(coef, b[t]);
        for (std::size_t c = 0; c < D; ++c) a[k - db + t][c] -= prod[c];
      }
      trim(a);
    }
    trim(q);
    return std::pair{std::move(q), std::move(a)};
  };

  Poly r0 = lv.minpoly;
  r0.push_back(one());
  Poly r1;
  for (std::size_t i = 0; i < n; ++i) r1.emplace_back(x.begin() + i * D, x.begin() + (i + 1) * D);
  trim(r1);
  Poly s0, s1{one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) {
    throw std::domain_error("minimal polynomial of " + lv.generator + " in tower " + id_ +
                            " is reducible");
  }
  const Coords inv_c = inverse(lower, r0[0]);
  Coords result(size);
  for (std::size_t j = 0; j < s0.size() && j < n; ++j) {
    Coords t = lmul(s0[j], inv_c);
    std::copy(t.begin(), t.end(), result.begin() + static_cast<std::ptrdiff_t>(j * D));
  }
  return result;
}

std::vector<Rational> FieldTower::conjugate(std::size_t L, std::span<const Rational> x) const {
  if (L == 0) return Coords(x.begin(), x.end());
  const Level& lv = levels_[L - 1];
  if (lv.conjugation == Conjugation::Undeclared) {
    throw PreconditionViolation("tower " + id_ + ": no conjugation action declared for " +
                                lv.generator);
  }
  const std::size_t D = strides_[L - 1];
  const std::size_t n = lv.degree;
  Coords out(strides_[L]);
  Coords tmp(strides_[L]);
  for (std::size_t j = 0; j < n; ++j) {
    auto xj = x.subspan(j * D, D);
    if (all_zero(xj)) continue;
    Coords cj = conjugate(L - 1, xj);
    switch (lv.conjugation) {
      case Conjugation::Fixed:
      case Conjugation::Negated: {
        const bool flip = lv.conjugation == Conjugation::Negated && (j % 2 == 1);
        for (std::size_t c = 0; c < D; ++c) out[j * D + c] = flip ? Rational(-cj[c]) : cj[c];
        break;
      }
      case Conjugation::Inverted:
        scale_chunks(L, cj, lv.conj_powers[j], tmp);
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += tmp[c];
        break;
      case Conjugation::Undeclared: break;
    }
  }
  return out;
}

ExtendedApprox FieldTower::evaluate(std::size_t L, std::span<const Rational> x) const {
  static const double kExtEps = 1e-48;
  if (L == 0) {
    ExtReal v = to_ext(x[0]);
    return {ExtComplex(v, ExtReal(0)), static_cast<double>(abs(v)) * kExtEps};
  }
  const Level& lv = levels_[L - 1];
  const std::size_t D = strides_[L - 1];
  const double g = ext_abs(lv.root);
  const double r = lv.root_radius;
  ExtendedApprox acc{ExtComplex(0), 0.0};
  ExtComplex power(1);
  double mag = 0.0;
  for (std::size_t j = 0; j < lv.degree; ++j) {
    auto xj = x.subspan(j * D, D);
    if (!all_zero(xj)) {
      const auto e = evaluate(L - 1, xj);
      const double vj = ext_abs(e.value);
      const double gj = std::pow(g, double(j));
      const double gj_hi = std::pow(g + r, double(j));
      acc.value += e.value * power;
      acc.err_bound += e.err_bound * gj_hi + vj * (gj_hi - gj);
      mag += vj * gj;
    }
    power *= lv.root;
  }
  acc.err_bound += mag * kExtEps;
  return acc;
}

// ---------------------------------------------------------------------------
// elements

AlgebraicNumber::AlgebraicNumber(TowerPtr tower)
    : tower_(std::move(tower)), coords_(tower_->total_degree()) {}

AlgebraicNumber::AlgebraicNumber(TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
  if (coords_.size() != tower_->total_degree()) {
    throw PreconditionViolation("coordinate vector of length " + std::to_string(coords_.size()) +
                                " for tower " + tower_->id() + " of degree " +
                                std::to_string(tower_->total_degree()));
  }
}

void AlgebraicNumber::require_same_tower(const AlgebraicNumber& y) const {
  if (!tower_->same_as(*y.tower_)) {
    throw IncompatibleDomains("algebraic numbers from towers " + tower_->id() + " and " +
                              y.tower_->id());
  }
}

bool AlgebraicNumber::is_zero() const { return all_zero(coords_); }

bool AlgebraicNumber::is_rational() const { return rational_only(coords_); }

AlgebraicNumber AlgebraicNumber::conj() const {
  return AlgebraicNumber(tower_, tower_->conjugate(tower_->num_levels(), coords_));
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  return AlgebraicNumber(tower_, tower_->inverse(tower_->num_levels(), coords_));
}

AlgebraicNumber AlgebraicNumber::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgebraicNumber result = tower_->one();
  AlgebraicNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

ExtendedApprox AlgebraicNumber::embed_extended() const {
  return tower_->evaluate(tower_->num_levels(), coords_);
}

ComplexApprox AlgebraicNumber::embed(Precision precision) const {
  const auto e = embed_extended();
  ComplexApprox z;
  z.re = static_cast<double>(e.value.real());
  z.im = static_cast<double>(e.value.imag());
  // rounding to double; the extended bound is retained for Precision::Extended
  z.err_bound = e.err_bound + (std::fabs(z.re) + std::fabs(z.im)) * 0x1p-53;
  if (precision == Precision::Extended) z.err_bound = std::max(e.err_bound, 1e-300);
  return z;
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& y) {
  require_same_tower(y);
  for (std::size_t c = 0; c < coords_.size(); ++c) coords_[c] += y.coords_[c];
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& y) {
  require_same_tower(y);
  for (std::size_t c = 0; c < coords_.size(); ++c) coords_[c] -= y.coords_[c];
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& y) {
  *this = *this * y;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator/=(const AlgebraicNumber& y) {
  *this = *this / y;
  return *this;
}

AlgebraicNumber operator*(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  x.require_same_tower(y);
  std::vector<Rational> out(x.coords_.size());
  x.tower_->mul(x.tower_->num_levels(), x.coords_, y.coords_, out);
  return AlgebraicNumber(x.tower_, std::move(out));
}

AlgebraicNumber operator/(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  x.require_same_tower(y);
  return x * y.inverse();
}

AlgebraicNumber operator-(AlgebraicNumber x) {
  for (auto& c : x.coords_) c = -c;
  return x;
}

bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  return x.tower_->same_as(*y.tower_) && x.coords_ == y.coords_;
}

AlgebraicNumber lift(const AlgebraicNumber& x, const TowerPtr& target) {
  if (!x.tower().is_prefix_of(*target)) {
    throw IncompatibleDomains("tower " + x.tower().id() + " is not a sub-tower of " + target->id());
  }
  std::vector<Rational> c(x.coords().begin(), x.coords().end());
  c.resize(target->total_degree());
  return AlgebraicNumber(target, std::move(c));
}

}  // namespace whframes::algebra
