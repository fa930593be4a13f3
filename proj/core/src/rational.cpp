#include <cmath>
#include <string>

#include "whframes/algebra.hpp"
#include "whframes/errors.hpp"

namespace whframes::algebra {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  auto parse_int = [&](const std::string& part, mpz_class& out) {
    if (part.empty() || out.set_str(part, 10) != 0) {
      throw PreconditionViolation("malformed rational '" + s + "'");
    }
  };
  if (slash == std::string::npos) {
    parse_int(s, num);
  } else {
    parse_int(s.substr(0, slash), num);
    parse_int(s.substr(slash + 1), den);
  }
  if (den == 0) {
    throw PreconditionViolation("rational with zero denominator '" + s + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double ComplexApprox::abs() const { return std::hypot(re, im); }

namespace {
constexpr double kUlp = 0x1p-52;

double round_err(double re, double im) { return (std::fabs(re) + std::fabs(im)) * kUlp; }
}  // namespace

ComplexApprox operator+(const ComplexApprox& x, const ComplexApprox& y) {
  ComplexApprox z{x.re + y.re, x.im + y.im, 0.0};
  z.err_bound = x.err_bound + y.err_bound + round_err(z.re, z.im);
  return z;
}

ComplexApprox operator-(const ComplexApprox& x, const ComplexApprox& y) {
  ComplexApprox z{x.re - y.re, x.im - y.im, 0.0};
  z.err_bound = x.err_bound + y.err_bound + round_err(z.re, z.im);
  return z;
}

ComplexApprox operator*(const ComplexApprox& x, const ComplexApprox& y) {
  ComplexApprox z{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re, 0.0};
  const double ax = x.abs(), ay = y.abs();
  z.err_bound = x.err_bound * ay + y.err_bound * ax + x.err_bound * y.err_bound +
                4.0 * kUlp * ax * ay;
  return z;
}

}  // namespace whframes::algebra
