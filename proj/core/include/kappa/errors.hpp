#pragma once

#include <stdexcept>
#include <string>

namespace kappa {

// Bad caller input: zero range bounds, mismatched lengths, unknown names.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dirichlet inverse requested for a sequence whose value at 1 is not +1 or -1.
class NotAUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// zeta(s) requested at s <= 1.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A Dirichlet series of kappa_x or K evaluated at or below the real point
// where zeta(s) = 2. Carries that point so callers can report it.
class SingularityDomainError : public std::domain_error {
 public:
  SingularityDomainError(const std::string& what, double rho)
      : std::domain_error(what), rho_(rho) {}

  double rho() const noexcept { return rho_; }

 private:
  double rho_;
};

}  // namespace kappa
