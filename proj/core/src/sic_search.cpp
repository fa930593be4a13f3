#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "whframes/errors.hpp"
#include "whframes/parallel.hpp"
#include "whframes/sic.hpp"

namespace whframes::sic {
namespace {

using Vec = Eigen::VectorXcd;

std::vector<std::complex<double>> roots_of_unity(int d) {
  std::vector<std::complex<double>> w(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) w[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  return w;
}

// Orbit potential d² Σ_p |<ψ|D_p ψ>|⁴ / |ψ|⁸ and its gradient in ψ̄ (times 2).
struct Objective {
  int d;
  std::vector<std::complex<double>> w;

  explicit Objective(int dim) : d(dim), w(roots_of_unity(dim)) {}

  double value(const Vec& psi, Vec* grad) const {
    const double n2 = psi.squaredNorm();
    double s = 0.0;
    Vec ds = Vec::Zero(d);
    Vec dp(d), dpa(d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        // (D ψ)_{j+a} = ω^{bj} ψ_j,  (D† ψ)_j = ω^{-bj} ψ_{j+a}
        for (int j = 0; j < d; ++j) {
          const auto& ph = w[static_cast<std::size_t>((b * j) % d)];
          dp((j + a) % d) = ph * psi(j);
          dpa(j) = std::conj(ph) * psi((j + a) % d);
        }
        const std::complex<double> g = psi.dot(dp);
        const double m = std::norm(g);
        s += m * m;
        if (grad) ds += 2.0 * m * (std::conj(g) * dp + g * dpa);
      }
    const double scale = static_cast<double>(d) * d;
    const double f = scale * s / (n2 * n2 * n2 * n2);
    if (grad) *grad = 2.0 * (scale * ds / (n2 * n2 * n2 * n2) - 4.0 * f * psi / n2);
    return f;
  }
};

Vec gaussian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal;
  Vec v(n);
  for (int j = 0; j < n; ++j) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(j) = {re, im};
  }
  return v / v.norm();
}

double real_dot(const Vec& u, const Vec& v) { return u.dot(v).real(); }

}  // namespace

double frame_potential(const std::vector<Eigen::VectorXcd>& vectors) {
  double s = 0.0;
  for (const auto& u : vectors)
    for (const auto& v : vectors) {
      const double m = std::norm(u.dot(v));
      s += m * m;
    }
  return s;
}

double orbit_frame_potential(const Eigen::VectorXcd& phi) {
  return Objective(static_cast<int>(phi.size())).value(phi / phi.norm(), nullptr);
}

double sic_potential_bound(int d) { return 2.0 * d * d * d / (d + 1.0); }

Eigen::VectorXcd SearchParameterization::candidate(const std::vector<double>& x) const {
  if (x.size() != 2 * static_cast<std::size_t>(basis.cols())) {
    throw PreconditionViolation("parameter count must be twice the subspace dimension");
  }
  Vec c(basis.cols());
  for (Eigen::Index j = 0; j < basis.cols(); ++j) c(j) = {x[2 * j], x[2 * j + 1]};
  return basis * c;
}

std::vector<SearchParameterization> zauner_subspaces(int d) {
  std::vector<SearchParameterization> out;
  const auto w3 = roots_of_unity(3);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  for (const auto& s : group::order3_symplectics(d)) {
    // U_S³ is only known to be a displacement up to phase; pick the first
    // translate W = X^a Z^b U_S whose cube is scalar.
    const Eigen::MatrixXcd us = group::clifford_unitary_numeric(s);
    Eigen::MatrixXcd u;
    int ta = -1, tb = -1;
    for (int a = 0; a < d && ta < 0; ++a)
      for (int b = 0; b < d && ta < 0; ++b) {
        const Eigen::MatrixXcd cand = group::h_to_matrix_numeric(group::make_heisenberg(d, a, b)) * us;
        const Eigen::MatrixXcd c3 = cand * cand * cand;
        if ((c3 - c3(0, 0) * id).norm() < 1e-9) {
          u = cand;
          ta = a;
          tb = b;
        }
      }
    if (ta < 0) continue;
    const Eigen::MatrixXcd u3 = u * u * u;
    u /= std::pow(u3(0, 0), 1.0 / 3.0);
    const Eigen::MatrixXcd u2 = u * u;
    for (const auto& lambda : w3) {
      const Eigen::MatrixXcd proj = (id + std::conj(lambda) * u + std::conj(lambda * lambda) * u2) / 3.0;
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(proj, Eigen::ComputeThinU);
      const auto& sv = svd.singularValues();
      Eigen::Index rank = 0;
      while (rank < sv.size() && sv(rank) > 0.5) ++rank;
      if (rank == 0) continue;
      out.push_back({svd.matrixU().leftCols(rank), lambda, s, ta, tb});
    }
  }
  return out;
}

std::vector<SearchParameterization> canonical_zauner_subspaces(int d) {
  const auto z = group::SymplecticMatrix::make(d, 0, -1, 1, -1);
  std::vector<SearchParameterization> out;
  for (auto& p : zauner_subspaces(d))
    if (p.symplectic == z) out.push_back(std::move(p));
  return out;
}

std::pair<Eigen::VectorXcd, double> descend(int d, const SearchParameterization* subspace, Vec x,
                                            const SearchOptions& options) {
  const Objective obj(d);
  auto eval = [&](const Vec& c, Vec* grad) {
    if (!subspace) return obj.value(c, grad);
    Vec g;
    const double f = obj.value(subspace->basis * c, grad ? &g : nullptr);
    if (grad) *grad = subspace->basis.adjoint() * g;
    return f;
  };

  constexpr std::size_t kMemory = 8;
  std::deque<std::pair<Vec, Vec>> history;  // (s, y)
  x /= x.norm();
  Vec g;
  double f = eval(x, &g);
  int stalled = 0;
  for (int it = 0; it < options.max_iterations && g.norm() >= options.gradient_tol; ++it) {
    // two-loop recursion
    Vec q = g;
    std::vector<double> alpha(history.size());
    for (std::size_t k = history.size(); k-- > 0;) {
      const auto& [s, y] = history[k];
      alpha[k] = real_dot(s, q) / real_dot(y, s);
      q -= alpha[k] * y;
    }
    if (!history.empty()) {
      const auto& [s, y] = history.back();
      q *= real_dot(s, y) / y.squaredNorm();
    }
    for (std::size_t k = 0; k < history.size(); ++k) {
      const auto& [s, y] = history[k];
      const double beta = real_dot(y, q) / real_dot(y, s);
      q += (alpha[k] - beta) * s;
    }
    Vec dir = -q;
    double slope = real_dot(g, dir);
    if (slope >= 0.0) {
      dir = -g;
      slope = -g.squaredNorm();
      history.clear();
    }

    double step = 1.0;
    Vec xn, gn;
    double fn = f;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
      xn = x + step * dir;
      xn /= xn.norm();
      fn = eval(xn, &gn);
      if (fn <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    // rounding floor: no relative progress for several steps
    stalled = f - fn <= 1e-15 * f ? stalled + 1 : 0;
    if (stalled >= 5) break;

    Vec s = xn - x, y = gn - g;
    if (real_dot(s, y) > 1e-300) {
      history.emplace_back(std::move(s), std::move(y));
      if (history.size() > kMemory) history.pop_front();
    }
    x = std::move(xn);
    g = std::move(gn);
    f = fn;
  }
  Vec psi = subspace ? Vec(subspace->basis * x) : x;
  psi /= psi.norm();
  return {psi, orbit_frame_potential(psi)};
}

SearchResult search_fiducial(int d, std::size_t restarts, std::uint64_t seed,
                             const std::vector<SearchParameterization>& subspaces, const SearchOptions& options) {
  if (d < 2) throw PreconditionViolation("search needs d >= 2");
  if (restarts < 1) throw PreconditionViolation("search needs at least one restart");
  for (const auto& s : subspaces)
    if (s.basis.rows() != d) throw IncompatibleDomains("subspace basis has the wrong dimension");

  std::vector<std::pair<Vec, double>> runs(restarts);
  parallel_for(restarts, [&](std::size_t r) {
    auto rng = restart_rng(seed, r);
    const SearchParameterization* sub = subspaces.empty() ? nullptr : &subspaces[r % subspaces.size()];
    runs[r] = descend(d, sub, gaussian(rng, sub ? sub->dimension() : d), options);
  });

  SearchResult result;
  result.target = sic_potential_bound(d);
  result.restarts = restarts;
  std::size_t best = 0;
  for (std::size_t r = 0; r < restarts; ++r) {
    result.potentials.push_back(runs[r].second);
    if (std::abs(runs[r].second - result.target) <= options.success_tol) {
      ++result.successes;
      if (!result.first_success) result.first_success = r;
    }
    if (runs[r].second < runs[best].second) best = r;
  }
  Vec psi = runs[best].first;
  // global phase: first nonzero entry real positive
  Eigen::Index lead = 0;
  while (lead < psi.size() && std::abs(psi(lead)) < 1e-12) ++lead;
  if (lead < psi.size()) psi *= std::abs(psi(lead)) / psi(lead);
  result.best_restart = best;
  result.potential = runs[best].second;
  result.fiducial = make_fiducial(psi);
  return result;
}

}  // namespace whframes::sic
