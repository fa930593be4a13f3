#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

#include "whframes/errors.hpp"
#include "whframes/group.hpp"

namespace whframes::group {
namespace {

int mod(long long x, long long m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void require_enumerable(int d) {
  if (d < 2 || d > kMaxEnumerationDimension) {
    throw PreconditionViolation("exhaustive SL(2,Z_d) enumeration needs 2 <= d <= 12");
  }
}

// Shortest {F,P}-word for every element of SL(2,Z_d).
const std::map<SymplecticMatrix, std::string>& word_table(int d) {
  static std::mutex mu;
  static std::map<int, std::map<SymplecticMatrix, std::string>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  std::map<SymplecticMatrix, std::string> words;
  const SymplecticMatrix gens[2] = {fourier_symplectic(d), phase_symplectic(d)};
  const char names[2] = {'F', 'P'};
  std::deque<SymplecticMatrix> queue{SymplecticMatrix::identity(d)};
  words.emplace(queue.front(), "");
  while (!queue.empty()) {
    const SymplecticMatrix s = queue.front();
    queue.pop_front();
    for (int g = 0; g < 2; ++g) {
      const SymplecticMatrix t = s * gens[g];
      if (words.emplace(t, words.at(s) + names[g]).second) queue.push_back(t);
    }
  }
  return cache.emplace(d, std::move(words)).first->second;
}

}  // namespace

SymplecticMatrix SymplecticMatrix::identity(int d) { return make(d, 1, 0, 0, 1); }

SymplecticMatrix SymplecticMatrix::make(int d, long long m00, long long m01, long long m10, long long m11) {
  if (d < 2) throw PreconditionViolation("modulus must be at least 2");
  SymplecticMatrix s{d, mod(m00, d), mod(m01, d), mod(m10, d), mod(m11, d)};
  if (s.det() != 1 % d) throw PreconditionViolation("symplectic matrix needs determinant 1 mod d");
  return s;
}

int SymplecticMatrix::det() const {
  return mod(static_cast<long long>(m00) * m11 - static_cast<long long>(m01) * m10, d);
}

bool SymplecticMatrix::is_identity() const { return *this == identity(d); }

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& o) const {
  if (d != o.d) throw IncompatibleDomains("symplectic matrices over different moduli");
  return {d, mod(1LL * m00 * o.m00 + 1LL * m01 * o.m10, d), mod(1LL * m00 * o.m01 + 1LL * m01 * o.m11, d),
          mod(1LL * m10 * o.m00 + 1LL * m11 * o.m10, d), mod(1LL * m10 * o.m01 + 1LL * m11 * o.m11, d)};
}

SymplecticMatrix SymplecticMatrix::pow(long long e) const {
  SymplecticMatrix base = e < 0 ? inverse() : *this;
  unsigned long long n = static_cast<unsigned long long>(e < 0 ? -e : e);
  SymplecticMatrix acc = identity(d);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

SymplecticMatrix SymplecticMatrix::inverse() const { return {d, m11, mod(-m01, d), mod(-m10, d), m00}; }

std::pair<int, int> SymplecticMatrix::apply(int a, int b) const {
  return {mod(1LL * m00 * a + 1LL * m01 * b, d), mod(1LL * m10 * a + 1LL * m11 * b, d)};
}

std::string SymplecticMatrix::to_string() const {
  std::ostringstream os;
  os << "[[" << m00 << "," << m01 << "],[" << m10 << "," << m11 << "]] mod " << d;
  return os.str();
}

SymplecticMatrix fourier_symplectic(int d) { return SymplecticMatrix::make(d, 0, -1, 1, 0); }
SymplecticMatrix phase_symplectic(int d) { return SymplecticMatrix::make(d, 1, 0, 1, 1); }

std::vector<SymplecticMatrix> sl2_elements(int d) {
  require_enumerable(d);
  std::vector<SymplecticMatrix> out;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e)
          if (mod(1LL * a * e - 1LL * b * c, d) == 1 % d) out.push_back({d, a, b, c, e});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SymplecticMatrix> order3_symplectics(int d) {
  std::vector<SymplecticMatrix> out;
  for (const auto& s : sl2_elements(d))
    if (!s.is_identity() && s.pow(3).is_identity()) out.push_back(s);
  return out;
}

std::string symplectic_word(const SymplecticMatrix& s) {
  require_enumerable(s.d);
  if (s.det() != 1 % s.d) throw PreconditionViolation("symplectic matrix needs determinant 1 mod d");
  const auto& table = word_table(s.d);
  auto it = table.find(s);
  if (it == table.end()) throw std::logic_error("F and P failed to generate SL(2,Z_d)");
  return it->second;
}

ExactMatrix clifford_unitary(const SymplecticMatrix& s) {
  const std::string word = symplectic_word(s);
  const int d = s.d;
  ExactMatrix u = ExactMatrix::identity(group_tower(d), static_cast<std::size_t>(d));
  if (word.empty()) return u;
  const ExactMatrix f = dft_matrix(d);
  const ExactMatrix p = p_matrix(d);
  for (char g : word) u = u * (g == 'F' ? f : p);
  return u;
}

Eigen::MatrixXcd clifford_unitary_numeric(const SymplecticMatrix& s) {
  const std::string word = symplectic_word(s);
  const int d = s.d;
  const Eigen::MatrixXcd f = dft_matrix_numeric(d);
  const Eigen::MatrixXcd p = p_matrix_numeric(d);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  for (char g : word) u = u * (g == 'F' ? f : p);
  return u;
}

bool realizes_action(const ExactMatrix& u, const SymplecticMatrix& s) {
  const int d = s.d;
  if (u.rows() != static_cast<std::size_t>(d)) throw IncompatibleDomains("unitary of wrong size");
  const ExactMatrix ud = u.adjoint();
  for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}}) {
    const auto [a2, b2] = s.apply(a, b);
    const ExactMatrix img = u * h_to_matrix(make_heisenberg(d, a, b)) * ud;
    const ExactMatrix ratio = img * h_to_matrix(make_heisenberg(d, a2, b2)).adjoint();
    if (!ratio.is_scalar() || ratio(0, 0).is_zero()) return false;
  }
  return true;
}

bool realizes_action(const Eigen::MatrixXcd& u, const SymplecticMatrix& s, double tol) {
  const int d = s.d;
  if (u.rows() != d) throw IncompatibleDomains("unitary of wrong size");
  for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}}) {
    const auto [a2, b2] = s.apply(a, b);
    const Eigen::MatrixXcd ratio = u * h_to_matrix_numeric(make_heisenberg(d, a, b)) * u.adjoint() *
                                   h_to_matrix_numeric(make_heisenberg(d, a2, b2)).adjoint();
    const std::complex<double> lambda = ratio(0, 0);
    if (std::abs(std::abs(lambda) - 1.0) > tol) return false;
    if ((ratio - lambda * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace whframes::group
