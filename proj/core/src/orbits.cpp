#include <algorithm>
#include <cmath>
#include <limits>

#include "whframes/errors.hpp"
#include "whframes/sic.hpp"

namespace whframes::sic {
namespace {

using Vec = Eigen::VectorXcd;

// -1, 0, 1 comparing (Re v1, Im v1, Re v2, ...) with a dead zone of tol.
int lex_compare(const Vec& u, const Vec& v, double tol) {
  for (Eigen::Index j = 1; j < u.size(); ++j)
    for (double du : {u(j).real() - v(j).real(), u(j).imag() - v(j).imag()}) {
      if (du > tol) return 1;
      if (du < -tol) return -1;
    }
  return 0;
}

// Greedy labelling: each item joins the first earlier representative it matches.
template <class Same>
std::vector<int> label(std::size_t n, Same same) {
  std::vector<int> labels(n, -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (same(reps[r], i)) {
        labels[i] = static_cast<int>(r);
        break;
      }
    if (labels[i] < 0) {
      labels[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  return labels;
}

struct Classified {
  int classes;
  double separation;
};

Classified classify(const std::vector<Vec>& images, double tol) {
  std::vector<Vec> canon;
  canon.reserve(images.size());
  for (const auto& v : images) canon.push_back(canonical_form(v, tol));
  auto dist = [&](std::size_t i, std::size_t j) { return (canon[i] - canon[j]).cwiseAbs().maxCoeff(); };

  const auto by_canon = label(images.size(), [&](std::size_t i, std::size_t j) { return dist(i, j) < tol; });
  const auto by_overlap = label(images.size(), [&](std::size_t i, std::size_t j) {
    return same_orbit(images[i], images[j], tol);
  });
  if (by_canon != by_overlap) {
    throw AmbiguousClassification("canonical forms and orbit overlaps disagree at tolerance " + std::to_string(tol));
  }

  const int classes = by_canon.empty() ? 0 : *std::max_element(by_canon.begin(), by_canon.end()) + 1;
  std::vector<std::size_t> reps(static_cast<std::size_t>(classes));
  for (std::size_t i = images.size(); i-- > 0;) reps[static_cast<std::size_t>(by_canon[i])] = i;
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b) sep = std::min(sep, dist(reps[a], reps[b]));
  return {classes, sep};
}

}  // namespace

Eigen::VectorXcd canonical_form(const Eigen::VectorXcd& v, double tol) {
  const int d = static_cast<int>(v.size());
  Vec best;
  double best_lead = -1.0;
  for (int a = 0; a < d; ++a) {
    const double lead = std::abs(v((d - a) % d));
    if (lead < best_lead - tol) continue;
    for (int b = 0; b < d; ++b) {
      Vec w = group::apply_displacement(a, b, v);
      w *= std::abs(w(0)) / w(0);
      const bool better = best.size() == 0 || lead > best_lead + tol || lex_compare(w, best, tol) > 0;
      if (better) {
        best = std::move(w);
        best_lead = std::max(best_lead, lead);
      }
    }
  }
  return best;
}

bool same_orbit(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v, double tol) {
  const int d = static_cast<int>(u.size());
  if (v.size() != d) throw IncompatibleDomains("vectors of different dimension");
  double best = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) best = std::max(best, std::norm(group::apply_displacement(a, b, u).dot(v)));
  return best > 1.0 - tol;
}

OrbitCount clifford_orbit_count(const Fiducial& phi, double tol) {
  const Vec v = phi.numeric();
  const int d = phi.d;
  const SicReport check = verify_sic(heisenberg_orbit(make_fiducial(v)), std::max(tol, 1e-12));
  if (!check.pass) throw PreconditionViolation("orbit counting needs a SIC fiducial at the given tolerance");

  const auto symplectics = group::sl2_elements(d);
  std::vector<Vec> images;
  for (const auto& s : symplectics) images.push_back(group::clifford_unitary_numeric(s) * v);
  const std::size_t n = images.size();
  for (std::size_t i = 0; i < n; ++i) images.push_back(images[i].conjugate());

  OrbitCount out;
  out.images = n;
  const auto plain = classify({images.begin(), images.begin() + static_cast<std::ptrdiff_t>(n)}, tol);
  const auto all = classify(images, tol);
  out.classes = plain.classes;
  out.classes_with_conjugates = all.classes;
  out.separation = all.separation;
  return out;
}

Stabilizer stabilizer_residual(const Eigen::VectorXcd& phi) {
  const int d = static_cast<int>(phi.size());
  const Vec v = phi / phi.norm();
  Stabilizer best{std::numeric_limits<double>::infinity(), group::SymplecticMatrix::identity(d)};
  for (const auto& s : group::order3_symplectics(d)) {
    const Vec uv = group::clifford_unitary_numeric(s) * v;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Vec wv = group::apply_displacement(a, b, uv);
        std::complex<double> lambda = v.dot(wv);
        lambda = std::abs(lambda) > 0 ? lambda / std::abs(lambda) : 1.0;
        const double r = (wv - lambda * v).norm();
        if (r < best.residual) best = {r, s, a, b, false};
      }
  }
  const Eigen::MatrixXcd w =
      group::h_to_matrix_numeric(group::make_heisenberg(d, best.a, best.b)) * group::clifford_unitary_numeric(best.symplectic);
  const Eigen::MatrixXcd w3 = w * w * w;
  best.order_three = (w3 - w3(0, 0) * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10;
  return best;
}

}  // namespace whframes::sic
