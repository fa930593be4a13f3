#pragma once

#include <stdexcept>
#include <string>

namespace whframes {

/// Operands live in different scalar domains (towers or dimensions).
class IncompatibleDomains : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Embedded constant data failed its exact self-check.
class DataIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Joint eigenvectors of a commuting class are not unique up to phase.
class DegenerateSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two numerically distinct classes came closer than the working tolerance.
class AmbiguousClassification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace whframes
