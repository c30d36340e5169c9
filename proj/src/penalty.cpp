#include "logenergy/penalty.hpp"

#include "logenergy/errors.hpp"

namespace logenergy {

double penalize(double raw, double moment, const Penalty& kind) {
  if (const auto* q = std::get_if<QuadraticPenalty>(&kind)) {
    if (!(q->lambda > 0)) throw DomainError("penalize: lambda must be > 0");
    return moment / (2.0 * q->lambda) + raw;
  }
  return moment + raw;
}

}  // namespace logenergy
