#pragma once

// Exact arithmetic in towers of relative algebraic extensions of Q.
//
// An element of a tower Q = F_0 ⊂ F_1 ⊂ ... ⊂ F_L, F_k = F_{k-1}(g_k), is
// stored as its coordinate vector over the multiplicative basis
// g_1^{e_1} ... g_L^{e_L} (0 <= e_k < deg_k), lowest level fastest-varying.
// The first D_k coordinates of an element of F_L are therefore exactly the
// coordinates of an element of F_k, which makes lifting a zero-padding.

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <gmpxx.h>

namespace whframes::algebra {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

using ExtReal = boost::multiprecision::cpp_bin_float_50;
using ExtComplex = boost::multiprecision::cpp_complex_50;

enum class Precision { Double, Extended };

/// A complex value with an absolute error radius.
struct ComplexApprox {
  double re = 0.0;
  double im = 0.0;
  double err_bound = 0.0;

  std::complex<double> value() const { return {re, im}; }
  double abs() const;

  friend ComplexApprox operator+(const ComplexApprox& x, const ComplexApprox& y);
  friend ComplexApprox operator-(const ComplexApprox& x, const ComplexApprox& y);
  friend ComplexApprox operator*(const ComplexApprox& x, const ComplexApprox& y);
};

struct ExtendedApprox {
  ExtComplex value;
  double err_bound = 0.0;
};

enum class RootSelection {
  PositiveReal,      // the unique real root > 0
  LargestReal,       // the largest of the real roots
  UniqueReal,        // exactly one real root must exist
  PositiveRealPart,  // the unique root with Re > 0
  ClosestTo,         // the root nearest to `target`
};

struct EmbeddingHint {
  RootSelection rule = RootSelection::PositiveReal;
  std::complex<double> target{};

  std::string describe() const;
};

/// Action of complex conjugation on a level generator.
enum class Conjugation { Fixed, Negated, Inverted, Undeclared };

class AlgebraicNumber;
class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  struct Level {
    std::string generator;
    std::size_t degree = 1;
    // p_0 .. p_{n-1} of the monic minimal polynomial x^n + sum p_l x^l,
    // each a coordinate vector over the tower below this level.
    std::vector<std::vector<Rational>> minpoly;
    EmbeddingHint hint;
    Conjugation conjugation = Conjugation::Undeclared;

    ExtComplex root;
    double root_radius = 0.0;
    int real_root_count = 0;
    // powers 0..n-1 of conj(g) as elements of the tower up to this level
    std::vector<std::vector<Rational>> conj_powers;
  };

  /// The base field Q (no levels, degree 1).
  static TowerPtr rationals();

  /// New tower with one more level on top of this one.  The minimal
  /// polynomial is x^n + sum_l coeffs[l] x^l with coeffs in this tower.
  /// Irreducibility is taken on faith; `checked` records whether the
  /// caller vouches for it.
  TowerPtr extend(std::string id, std::string generator,
                  const std::vector<AlgebraicNumber>& coeffs, EmbeddingHint hint,
                  Conjugation conjugation, bool checked = true) const;

  /// Same levels, new id, optionally declaring a primitive root of unity of
  /// the given order contained in the field (verified exactly).
  TowerPtr finalize(std::string id, std::optional<std::pair<int, std::vector<Rational>>> unity,
                    bool checked) const;

  const std::string& id() const { return id_; }
  bool checked() const { return checked_; }
  std::size_t total_degree() const { return strides_.back(); }
  std::size_t num_levels() const { return levels_.size(); }
  const Level& level(std::size_t k) const { return levels_.at(k); }
  /// Degree of the sub-tower formed by the first k levels.
  std::size_t prefix_degree(std::size_t k) const { return strides_.at(k); }

  /// Generator of level k as an element of this tower.
  AlgebraicNumber generator(std::size_t k) const;
  AlgebraicNumber zero() const;
  AlgebraicNumber one() const;
  AlgebraicNumber from_rational(const Rational& q) const;

  /// Primitive root of unity of order m if the tower knows one.
  std::optional<AlgebraicNumber> root_of_unity(int m) const;
  int unity_order() const { return unity_order_; }

  bool same_as(const FieldTower& other) const;
  /// True if this tower's levels are an initial segment of `other`'s.
  bool is_prefix_of(const FieldTower& other) const;

  // Coordinate kernels (sizes must equal prefix_degree(levels)).
  void mul(std::size_t levels, std::span<const Rational> x, std::span<const Rational> y,
           std::span<Rational> out) const;
  std::vector<Rational> inverse(std::size_t levels, std::span<const Rational> x) const;
  std::vector<Rational> conjugate(std::size_t levels, std::span<const Rational> x) const;
  ExtendedApprox evaluate(std::size_t levels, std::span<const Rational> x) const;

 private:
  FieldTower() = default;
  void scale_chunks(std::size_t levels, std::span<const Rational> lower, std::span<const Rational> x,
                    std::span<Rational> out) const;

  std::string id_ = "Q";
  bool checked_ = true;
  std::vector<Level> levels_;
  std::vector<std::size_t> strides_{1};
  int unity_order_ = 2;
  std::vector<Rational> unity_;
};

class AlgebraicNumber {
 public:
  explicit AlgebraicNumber(TowerPtr tower);
  AlgebraicNumber(TowerPtr tower, std::vector<Rational> coords);

  const FieldTower& tower() const { return *tower_; }
  const TowerPtr& tower_ptr() const { return tower_; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Coordinate 0, meaningful when is_rational().
  const Rational& rational_part() const { return coords_.front(); }

  AlgebraicNumber conj() const;
  AlgebraicNumber inverse() const;
  AlgebraicNumber pow(long long e) const;

  ComplexApprox embed(Precision precision = Precision::Double) const;
  ExtendedApprox embed_extended() const;

  AlgebraicNumber& operator+=(const AlgebraicNumber& y);
  AlgebraicNumber& operator-=(const AlgebraicNumber& y);
  AlgebraicNumber& operator*=(const AlgebraicNumber& y);
  AlgebraicNumber& operator*=(const Rational& q);
  AlgebraicNumber& operator/=(const AlgebraicNumber& y);

  friend AlgebraicNumber operator+(AlgebraicNumber x, const AlgebraicNumber& y) { return x += y; }
  friend AlgebraicNumber operator-(AlgebraicNumber x, const AlgebraicNumber& y) { return x -= y; }
  friend AlgebraicNumber operator*(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator*(AlgebraicNumber x, const Rational& q) { return x *= q; }
  friend AlgebraicNumber operator*(const Rational& q, AlgebraicNumber x) { return x *= q; }
  friend AlgebraicNumber operator/(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator-(AlgebraicNumber x);
  friend bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y);

 private:
  void require_same_tower(const AlgebraicNumber& y) const;

  TowerPtr tower_;
  std::vector<Rational> coords_;
};

inline AlgebraicNumber add(const AlgebraicNumber& x, const AlgebraicNumber& y) { return x + y; }
inline AlgebraicNumber sub(const AlgebraicNumber& x, const AlgebraicNumber& y) { return x - y; }
inline AlgebraicNumber mul(const AlgebraicNumber& x, const AlgebraicNumber& y) { return x * y; }
inline AlgebraicNumber div(const AlgebraicNumber& x, const AlgebraicNumber& y) { return x / y; }
inline bool is_zero(const AlgebraicNumber& x) { return x.is_zero(); }
inline AlgebraicNumber conj(const AlgebraicNumber& x) { return x.conj(); }
inline ComplexApprox embed_numeric(const AlgebraicNumber& x, Precision p = Precision::Double) {
  return x.embed(p);
}

/// Re-express x in a tower that extends x's tower.
AlgebraicNumber lift(const AlgebraicNumber& x, const TowerPtr& target);

/// Integer coefficients (constant term first) of the m-th cyclotomic polynomial.
std::vector<mpz_class> cyclotomic_polynomial(int m);

// Shipped towers.  Each call returns the same shared instance.
TowerPtr rationals();
TowerPtr cyclotomic_tower(int m);
/// Q(√3, √7, i, θ1, θ2, θ3), degree 96.
TowerPtr grassl_tower();
/// Q(ω12, θ) with θ² = (−2ω³ + 4ω + 3)/48, degree 8.
TowerPtr appendix_tower();
/// Lookup by serialization id: "Q", "cyclotomic:<m>", "grassl96", "appendix8".
TowerPtr tower_by_id(const std::string& id);

struct GrasslGenerators {
  AlgebraicNumber sqrt3, sqrt7, i, theta1, theta2, theta3;
};
GrasslGenerators grassl_generators();

struct AppendixGenerators {
  AlgebraicNumber omega, theta;
};
AppendixGenerators appendix_generators();

/// ω_m = exp(2πi/m) in cyclotomic_tower(m).
AlgebraicNumber cyclotomic_generator(int m);

}  // namespace whframes::algebra
