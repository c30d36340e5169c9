#pragma once

#include <variant>

namespace logenergy {

/// m2/(2 lambda) penalty; minimizers are the semicircle (lambda = 1) and the
/// circular law (lambda = 1/2).
struct QuadraticPenalty {
  double lambda = 1.0;
};

/// m1 penalty; minimizer is the Marchenko-Pastur law.
struct LinearPenalty {};

using Penalty = std::variant<QuadraticPenalty, LinearPenalty>;

/// quadratic: moment/(2 lambda) + raw; linear: moment + raw.
/// Throws DomainError when lambda <= 0.
double penalize(double raw, double moment, const Penalty& kind);

}  // namespace logenergy
