#pragma once

#include <stdexcept>
#include <string>

namespace logenergy {

/// Precondition violated (n = 0, non-positive tolerance, non-Hermitian input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its target. Carries the best
/// estimate it did reach together with the error bound for it.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double best_estimate = 0.0,
                 double error_bound = 0.0)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_bound_(error_bound) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double best_estimate_;
  double error_bound_;
};

}  // namespace logenergy
