#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <tuple>

#include "whframes/errors.hpp"
#include "whframes/mub.hpp"
#include "whframes/parallel.hpp"

namespace whframes::mub {
namespace {

using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

constexpr double kConverged = 1e-12;
constexpr double kClusterRadius = 1e-6;

// r(x) and its Jacobian.
using ResidualFn = std::function<void(const RVec&, RVec&, RMat&)>;

// Levenberg-Marquardt; returns the final residual norm.
double levenberg_marquardt(const ResidualFn& f, RVec& x, int max_iterations = 300) {
  RVec r, rn;
  RMat j, jn;
  f(x, r, j);
  double cost = r.squaredNorm();
  double mu = 1e-3;
  for (int it = 0; it < max_iterations && std::sqrt(cost) > 1e-15; ++it) {
    const RMat a = j.transpose() * j;
    const RVec g = j.transpose() * r;
    RMat damped = a;
    damped.diagonal().array() += mu * (a.diagonal().array() + 1.0);
    const RVec step = damped.ldlt().solve(-g);
    const RVec xn = x + step;
    f(xn, rn, jn);
    const double cn = rn.squaredNorm();
    if (cn < cost) {
      x = xn;
      r.swap(rn);
      j.swap(jn);
      const bool stalled = cost - cn <= 1e-30;
      cost = cn;
      mu = std::max(mu / 3.0, 1e-12);
      if (stalled || step.norm() < 1e-15) break;
    } else {
      mu *= 4.0;
      if (mu > 1e12) break;
    }
  }
  return std::sqrt(cost);
}

int lex_compare(const Vec& u, const Vec& v, double tol) {
  for (Eigen::Index j = 0; j < u.size(); ++j)
    for (double du : {u(j).real() - v(j).real(), u(j).imag() - v(j).imag()}) {
      if (du > tol) return 1;
      if (du < -tol) return -1;
    }
  return 0;
}

UnbiasedSolutions cluster(std::vector<std::optional<Vec>> found, std::size_t restarts) {
  UnbiasedSolutions out;
  out.restarts = restarts;
  for (auto& v : found) {
    if (!v) continue;
    ++out.converged;
    bool placed = false;
    for (std::size_t c = 0; c < out.clusters.size() && !placed; ++c)
      if ((out.clusters[c] - *v).cwiseAbs().maxCoeff() < kClusterRadius) {
        ++out.cluster_sizes[c];
        placed = true;
      }
    if (!placed) {
      out.clusters.push_back(std::move(*v));
      out.cluster_sizes.push_back(1);
    }
  }
  std::vector<std::size_t> order(out.clusters.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t k) {
    return lex_compare(out.clusters[i], out.clusters[k], kClusterRadius) < 0;
  });
  UnbiasedSolutions sorted{{}, {}, out.restarts, out.converged};
  for (auto i : order) {
    sorted.clusters.push_back(out.clusters[i]);
    sorted.cluster_sizes.push_back(out.cluster_sizes[i]);
  }
  return sorted;
}

// |<w|ψ>|² - 1/d for each w, with ψ = (1, e^{iφ_1}, ...)/√d over the listed phases.
void phase_residuals(const std::vector<Vec>& reference, int d, const RVec& phi, RVec& r, RMat& jac) {
  Vec psi(d);
  psi(0) = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 1; j < d; ++j) psi(j) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), phi(j - 1));
  const auto m = static_cast<Eigen::Index>(reference.size());
  r.resize(m);
  jac.resize(m, d - 1);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Vec& w = reference[static_cast<std::size_t>(k)];
    const std::complex<double> s = w.dot(psi);
    r(k) = std::norm(s) - 1.0 / d;
    for (int j = 1; j < d; ++j) {
      const std::complex<double> ds = std::conj(w(j)) * std::complex<double>(0.0, 1.0) * psi(j);
      jac(k, j - 1) = 2.0 * (std::conj(s) * ds).real();
    }
  }
}

Vec phase_vector(int d, const RVec& phi) {
  Vec psi(d);
  psi(0) = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 1; j < d; ++j) psi(j) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), phi(j - 1));
  return psi;
}

RVec uniform_phases(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  RVec x(n);
  for (int j = 0; j < n; ++j) x(j) = u(rng);
  return x;
}

std::vector<Vec> fourier_vectors(int d) {
  std::vector<Vec> out;
  for (int k = 0; k < d; ++k) {
    Vec f(d);
    for (int j = 0; j < d; ++j) f(j) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), 2.0 * std::numbers::pi * j * k / d);
    out.push_back(f);
  }
  return out;
}

}  // namespace

UnbiasedSolutions solve_unbiased_numeric(int d, std::size_t restarts, std::uint64_t seed) {
  if (d < 2) throw PreconditionViolation("needs d >= 2");
  const auto fourier = fourier_vectors(d);
  const ResidualFn f = [&](const RVec& x, RVec& r, RMat& j) { phase_residuals(fourier, d, x, r, j); };
  std::vector<std::optional<Vec>> found(restarts);
  parallel_for(restarts, [&](std::size_t i) {
    auto rng = restart_rng(seed, i);
    RVec x = uniform_phases(rng, d - 1);
    if (levenberg_marquardt(f, x) < kConverged) found[i] = phase_vector(d, x);
  });
  return cluster(std::move(found), restarts);
}

UnbiasedSolutions solve_unbiased_generic(int d, const std::vector<Eigen::VectorXcd>& reference, std::size_t restarts,
                                         std::uint64_t seed) {
  if (d < 2) throw PreconditionViolation("needs d >= 2");
  for (const auto& w : reference)
    if (w.size() != d) throw IncompatibleDomains("reference vector of wrong dimension");
  const auto m = static_cast<Eigen::Index>(reference.size());
  // ψ = x[0:d] + i x[d:2d]; residuals against each reference vector plus |ψ|² - 1
  const ResidualFn f = [&](const RVec& x, RVec& r, RMat& jac) {
    Vec psi(d);
    for (int j = 0; j < d; ++j) psi(j) = {x(j), x(d + j)};
    r.resize(m + 1);
    jac.resize(m + 1, 2 * d);
    for (Eigen::Index k = 0; k < m; ++k) {
      const Vec& w = reference[static_cast<std::size_t>(k)];
      const std::complex<double> s = w.dot(psi);
      r(k) = std::norm(s) - 1.0 / d;
      for (int j = 0; j < d; ++j) {
        const std::complex<double> cw = std::conj(s) * std::conj(w(j));
        jac(k, j) = 2.0 * cw.real();
        jac(k, d + j) = -2.0 * cw.imag();
      }
    }
    r(m) = psi.squaredNorm() - 1.0;
    for (int j = 0; j < d; ++j) {
      jac(m, j) = 2.0 * x(j);
      jac(m, d + j) = 2.0 * x(d + j);
    }
  };

  // global phase fixed by making <g|ψ> real positive for a fixed generic g
  Vec gauge(d);
  for (int j = 0; j < d; ++j) gauge(j) = std::polar(1.0 + 0.1 * j, 0.7 * j * j + 0.3);

  std::vector<std::optional<Vec>> found(restarts);
  parallel_for(restarts, [&](std::size_t i) {
    auto rng = restart_rng(seed, i);
    std::normal_distribution<double> normal;
    RVec x(2 * d);
    for (int j = 0; j < 2 * d; ++j) x(j) = normal(rng);
    x /= x.norm();
    if (levenberg_marquardt(f, x) >= kConverged) return;
    Vec psi(d);
    for (int j = 0; j < d; ++j) psi(j) = {x(j), x(d + j)};
    psi /= psi.norm();
    const std::complex<double> g = gauge.dot(psi);
    found[i] = Vec(psi * (std::abs(g) / g));
  });
  return cluster(std::move(found), restarts);
}

std::pair<std::size_t, double> closest_up_to_phase(const Eigen::VectorXcd& v, const std::vector<Eigen::VectorXcd>& targets) {
  std::size_t best = 0;
  double dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::complex<double> ip = targets[i].dot(v);
    const std::complex<double> phase = std::abs(ip) > 0 ? ip / std::abs(ip) : 1.0;
    const double di = (v - phase * targets[i]).norm();
    if (di < dist) {
      dist = di;
      best = i;
    }
  }
  return {best, dist};
}

Transport transport_pair(int a, int b, int a2, int b2, int d) {
  const auto s = group::SymplecticMatrix::make(d, a, a2, b, b2);
  Transport t{s, group::clifford_unitary_numeric(s), {}, {}, false};
  const auto move = [&](const Basis& src, const std::string& label) {
    std::vector<Vec> out;
    for (const auto& v : src.numeric()) out.push_back(t.unitary * v);
    return Basis{d, label, std::move(out)};
  };
  t.first = move(fourier_basis(d), "U B_X");
  t.second = move(standard_basis(d), "U B_Z");

  bool ok = true;
  const auto [a1, b1] = s.apply(1, 0);
  const auto [a3, b3] = s.apply(0, 1);
  for (auto [basis, p, q] : {std::tuple{&t.first, a1, b1}, std::tuple{&t.second, a3, b3}}) {
    const Eigen::MatrixXcd m = group::h_to_matrix_numeric(group::make_heisenberg(d, p, q));
    for (const auto& v : basis->numeric()) {
      const Vec mv = m * v;
      ok = ok && (mv - v.dot(mv) * v).norm() < 1e-10;
    }
  }
  t.eigen_check = ok;
  return t;
}

TransportAnalysis analyze_transported(const Transport& t, std::size_t restarts, std::uint64_t seed) {
  const int d = t.first.d;
  std::vector<Vec> reference = t.first.numeric();
  for (const auto& v : t.second.numeric()) reference.push_back(v);
  const auto sol = solve_unbiased_generic(d, reference, restarts, seed);
  const auto& vs = sol.clusters;
  const std::size_t n = vs.size();

  UnbiasednessGraph orth{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  UnbiasednessGraph unb = orth;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double q = std::norm(vs[i].dot(vs[j]));
      orth.adjacency[i][j] = orth.adjacency[j][i] = q < 1e-8;
      unb.adjacency[i][j] = unb.adjacency[j][i] = std::abs(q - 1.0 / d) < 1e-8;
    }
  const auto bases = find_cliques(orth, static_cast<std::size_t>(d));
  TransportAnalysis r;
  r.n_vectors = n;
  r.n_bases = bases.size();
  r.all_maximal = maximality_check(unb, bases).all_maximal();
  return r;
}

namespace {

std::vector<Vec> dim4_third_basis(double a, double b) {
  const std::complex<double> ea = std::polar(1.0, a), eb = std::polar(1.0, b);
  std::vector<Vec> rows(4, Vec(4));
  rows[0] << 1.0, ea, 1.0, -ea;
  rows[1] << 1.0, -ea, 1.0, ea;
  rows[2] << 1.0, eb, -1.0, eb;
  rows[3] << 1.0, -eb, -1.0, -eb;
  for (auto& r : rows) r *= 0.5;
  return rows;
}

std::vector<Vec> dim4_fourier() {
  const std::complex<double> i(0.0, 1.0);
  std::vector<Vec> rows;
  for (int k = 0; k < 4; ++k) {
    Vec r(4);
    for (int j = 0; j < 4; ++j) r(j) = 0.5 * std::pow(i, j * k);
    rows.push_back(r);
  }
  return rows;
}

void require_angle(double x) {
  if (!(x >= 0.0 && x < std::numbers::pi)) throw PreconditionViolation("dimension-4 family needs a, b in [0, pi)");
}

}  // namespace

MubSet dim4_family(double a, double b) {
  require_angle(a);
  require_angle(b);
  std::vector<Vec> standard;
  for (int k = 0; k < 4; ++k) standard.push_back(Vec::Unit(4, k));
  return {4, {Basis{4, "B_Z", standard}, Basis{4, "B_X", dim4_fourier()}, Basis{4, "B_3", dim4_third_basis(a, b)}}};
}

double dim4_fourth_vector_residual(double a, double b, std::size_t restarts, std::uint64_t seed) {
  require_angle(a);
  require_angle(b);
  std::vector<Vec> reference = dim4_fourier();
  for (const auto& v : dim4_third_basis(a, b)) reference.push_back(v);
  const ResidualFn f = [&](const RVec& x, RVec& r, RMat& j) { phase_residuals(reference, 4, x, r, j); };
  std::vector<double> best(restarts);
  parallel_for(restarts, [&](std::size_t i) {
    auto rng = restart_rng(seed, i);
    RVec x = uniform_phases(rng, 3);
    best[i] = levenberg_marquardt(f, x);
  });
  return *std::min_element(best.begin(), best.end());
}

}  // namespace whframes::mub
