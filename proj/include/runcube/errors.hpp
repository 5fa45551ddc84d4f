#pragma once

#include <stdexcept>
#include <string>

namespace runcube {

// Input that violates a documented precondition on its value (bad word, bad label).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Work that would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (e.g. f_k for k < -1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Polynomial or series operands built over different variable registries.
class RegistryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series operation whose algebraic precondition fails (non-unit constant term,
// nonzero low coefficients before a shift, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace runcube
