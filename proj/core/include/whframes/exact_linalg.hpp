#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "whframes/algebra.hpp"

namespace whframes::algebra {

using ExactVector = std::vector<AlgebraicNumber>;

/// <u|v> = sum_j conj(u_j) v_j
AlgebraicNumber inner(const ExactVector& u, const ExactVector& v);
/// Same, with conj(u) supplied by the caller.
AlgebraicNumber inner_preconj(const ExactVector& conj_u, const ExactVector& v);
/// |z|^2 computed as z * conj(z).
AlgebraicNumber abs_squared(const AlgebraicNumber& z);
ExactVector conj(const ExactVector& v);
ExactVector scale(const ExactVector& v, const AlgebraicNumber& s);
bool is_zero(const ExactVector& v);
Eigen::VectorXcd embed(const ExactVector& v);

/// Dense matrix over one tower, row-major.
class ExactMatrix {
 public:
  ExactMatrix(TowerPtr tower, std::size_t rows, std::size_t cols);
  static ExactMatrix identity(TowerPtr tower, std::size_t n);
  static ExactMatrix diagonal(const ExactVector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const TowerPtr& tower() const { return tower_; }

  AlgebraicNumber& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const AlgebraicNumber& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ExactMatrix adjoint() const;
  ExactMatrix transpose() const;
  ExactVector column(std::size_t c) const;
  ExactVector row(std::size_t r) const;
  ExactVector apply(const ExactVector& v) const;
  ExactMatrix scaled(const AlgebraicNumber& s) const;
  AlgebraicNumber trace() const;

  bool is_zero() const;
  /// Some scalar multiple of the identity (including zero).
  bool is_scalar() const;
  bool is_diagonal() const;

  Eigen::MatrixXcd embed() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  TowerPtr tower_;
  std::size_t rows_, cols_;
  std::vector<AlgebraicNumber> data_;
};

}  // namespace whframes::algebra
