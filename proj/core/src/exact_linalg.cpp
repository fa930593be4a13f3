#include "whframes/exact_linalg.hpp"

#include <algorithm>

#include "whframes/errors.hpp"

namespace whframes::algebra {

AlgebraicNumber inner_preconj(const ExactVector& conj_u, const ExactVector& v) {
  if (conj_u.size() != v.size() || v.empty()) {
    throw IncompatibleDomains("inner product of vectors of different length");
  }
  AlgebraicNumber acc = conj_u[0] * v[0];
  for (std::size_t j = 1; j < v.size(); ++j) acc += conj_u[j] * v[j];
  return acc;
}

AlgebraicNumber inner(const ExactVector& u, const ExactVector& v) {
  return inner_preconj(conj(u), v);
}

AlgebraicNumber abs_squared(const AlgebraicNumber& z) { return z * z.conj(); }

ExactVector conj(const ExactVector& v) {
  ExactVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

ExactVector scale(const ExactVector& v, const AlgebraicNumber& s) {
  ExactVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * s);
  return out;
}

bool is_zero(const ExactVector& v) {
  return std::all_of(v.begin(), v.end(), [](const AlgebraicNumber& x) { return x.is_zero(); });
}

Eigen::VectorXcd embed(const ExactVector& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t j = 0; j < v.size(); ++j) out(static_cast<Eigen::Index>(j)) = v[j].embed().value();
  return out;
}

ExactMatrix::ExactMatrix(TowerPtr tower, std::size_t rows, std::size_t cols)
    : tower_(std::move(tower)), rows_(rows), cols_(cols), data_(rows * cols, tower_->zero()) {}

ExactMatrix ExactMatrix::identity(TowerPtr tower, std::size_t n) {
  ExactMatrix m(tower, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = tower->one();
  return m;
}

ExactMatrix ExactMatrix::diagonal(const ExactVector& diag) {
  if (diag.empty()) throw PreconditionViolation("empty diagonal");
  ExactMatrix m(diag[0].tower_ptr(), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix m(tower_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(tower_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

ExactVector ExactMatrix::column(std::size_t c) const {
  ExactVector v;
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactVector ExactMatrix::apply(const ExactVector& v) const {
  if (v.size() != cols_) throw IncompatibleDomains("matrix-vector size mismatch");
  ExactVector out(rows_, tower_->zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  return out;
}

ExactMatrix ExactMatrix::scaled(const AlgebraicNumber& s) const {
  ExactMatrix m = *this;
  for (auto& x : m.data_) x = x * s;
  return m;
}

AlgebraicNumber ExactMatrix::trace() const {
  AlgebraicNumber t = tower_->zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const AlgebraicNumber& x) { return x.is_zero(); });
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_scalar() const {
  if (rows_ != cols_ || !is_diagonal()) return false;
  for (std::size_t i = 1; i < rows_; ++i)
    if (!((*this)(i, i) == (*this)(0, 0))) return false;
  return true;
}

Eigen::MatrixXcd ExactMatrix::embed() const {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*this)(r, c).embed().value();
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw IncompatibleDomains("matrix product size mismatch");
  ExactMatrix m(a.tower_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const auto& y = b(k, c);
        if (!y.is_zero()) m(r, c) += x * y;
      }
    }
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw IncompatibleDomains("matrix sum size mismatch");
  ExactMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw IncompatibleDomains("matrix sum size mismatch");
  ExactMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace whframes::algebra
