#include <algorithm>
#include <cmath>
#include <mutex>

#include "data/data.hpp"
#include "whframes/errors.hpp"
#include "whframes/parallel.hpp"
#include "whframes/sic.hpp"

namespace whframes::sic {

using algebra::AlgebraicNumber;
using algebra::Rational;

Eigen::VectorXcd Fiducial::numeric() const {
  if (!is_exact()) return std::get<1>(vec);
  const auto& v = exact();
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto e = v[j].embed_extended().value;
    out(static_cast<Eigen::Index>(j)) = {static_cast<double>(e.real()), static_cast<double>(e.imag())};
  }
  return out;
}

std::string Fiducial::scalar_domain() const { return is_exact() ? exact().front().tower().id() : "complex64"; }

Fiducial make_fiducial(ExactVector v) {
  if (v.size() < 2) throw PreconditionViolation("fiducial needs dimension at least 2");
  const auto& tower = v.front().tower();
  for (const auto& x : v)
    if (!x.tower().same_as(tower)) throw IncompatibleDomains("fiducial entries from different towers");
  const bool unit = algebra::inner(v, v) == tower.one();
  const int d = static_cast<int>(v.size());
  return {d, std::move(v), unit};
}

Fiducial make_fiducial(Eigen::VectorXcd v, double tol) {
  if (v.size() < 2) throw PreconditionViolation("fiducial needs dimension at least 2");
  const bool unit = std::abs(v.norm() - 1.0) <= tol;
  const int d = static_cast<int>(v.size());
  return {d, std::move(v), unit};
}

std::size_t SicOrbit::size() const {
  return std::visit([](const auto& vs) { return vs.size(); }, vectors);
}

SicOrbit heisenberg_orbit(const Fiducial& phi) {
  if (!phi.normalized) throw PreconditionViolation("Heisenberg orbit needs a normalized fiducial");
  const int d = phi.d;
  if (phi.is_exact()) {
    const auto& v = phi.exact();
    const auto& tower = v.front().tower();
    auto w = tower.root_of_unity(d);
    if (!w) throw IncompatibleDomains("fiducial tower " + tower.id() + " has no primitive root of unity of order d");
    std::vector<AlgebraicNumber> powers{tower.one()};
    for (int k = 1; k < d; ++k) powers.push_back(powers.back() * *w);
    std::vector<ExactVector> out;
    out.reserve(static_cast<std::size_t>(d * d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) out.push_back(group::apply_displacement(a, b, v, powers));
    return {d, std::move(out)};
  }
  std::vector<Eigen::VectorXcd> out;
  out.reserve(static_cast<std::size_t>(d * d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) out.push_back(group::apply_displacement(a, b, std::get<1>(phi.vec)));
  return {d, std::move(out)};
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) pairs.emplace_back(j, k);
  return pairs;
}

SicReport verify_exact(int d, const std::vector<ExactVector>& vs) {
  SicReport r;
  r.d = d;
  r.exact = true;
  r.scalar_domain = vs.front().front().tower().id();
  std::vector<ExactVector> conjs(vs.size());
  parallel_for(vs.size(), [&](std::size_t j) { conjs[j] = algebra::conj(vs[j]); });

  const auto pairs = all_pairs(vs.size());
  r.pair_count = pairs.size();
  const AlgebraicNumber target = vs.front().front().tower().from_rational(Rational(1, d + 1));
  std::vector<double> deviation(pairs.size(), 0.0);
  parallel_for(pairs.size(), [&](std::size_t p) {
    const auto [j, k] = pairs[p];
    const AlgebraicNumber diff = algebra::abs_squared(algebra::inner_preconj(conjs[j], vs[k])) - target;
    if (!diff.is_zero()) deviation[p] = std::max(diff.embed().abs(), 1e-300);
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (deviation[p] > 0.0 && !r.first_failure) r.first_failure = pairs[p];
    r.worst_deviation = std::max(r.worst_deviation, deviation[p]);
  }
  r.pass = !r.first_failure;
  return r;
}

SicReport verify_float(int d, const std::vector<Eigen::VectorXcd>& vs, double tol) {
  SicReport r;
  r.d = d;
  r.scalar_domain = "complex64";
  const double target = 1.0 / (d + 1);
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t k = j + 1; k < vs.size(); ++k) {
      ++r.pair_count;
      const double dev = std::abs(std::norm(vs[j].dot(vs[k])) - target);
      if (dev > tol && !r.first_failure) r.first_failure = std::pair{j, k};
      r.worst_deviation = std::max(r.worst_deviation, dev);
    }
  r.pass = !r.first_failure;
  return r;
}

}  // namespace

SicReport verify_sic(const SicOrbit& orbit, double tol) {
  if (orbit.size() < 2) throw PreconditionViolation("orbit needs at least two vectors");
  if (orbit.is_exact()) return verify_exact(orbit.d, std::get<0>(orbit.vectors));
  return verify_float(orbit.d, std::get<1>(orbit.vectors), tol);
}

Fiducial grassl_fiducial() {
  static std::once_flag once;
  static std::optional<Fiducial> cached;
  std::call_once(once, [] {
    Fiducial f = make_fiducial(data::grassl_fiducial_entries());
    if (!f.normalized) throw DataIntegrityError("built-in dimension-6 fiducial is not normalized");
    cached = std::move(f);
  });
  return *cached;
}

Fiducial grassl_fiducial_numeric() {
  const Fiducial f = grassl_fiducial();
  return make_fiducial(f.numeric());
}

}  // namespace whframes::sic
