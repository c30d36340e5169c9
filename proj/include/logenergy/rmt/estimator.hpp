#pragma once
// Cross-replica Monte Carlo estimate of the penalized log energy of the mean
// empirical spectral distribution.

#include <cstdint>
#include <optional>

#include "logenergy/penalty.hpp"
#include "logenergy/rmt/sampling.hpp"

namespace logenergy {

struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;
  unsigned replica_pairs_used = 0;
  unsigned rejected_pairs = 0;
};

struct MeanEnergyEstimate {
  EstimateWithError raw;
  EstimateWithError moment;     // m2, or m1 under the linear penalty
  EstimateWithError penalized;  // with the measured moment
  /// Penalized with the moment set to its nominal value 1; raw energy error.
  EstimateWithError penalized_nominal;
  Penalty penalty;
  std::optional<double> reference;  // closed-form penalized energy when known
};

inline constexpr double kDefaultCollisionEps = 1e-12;

/// Replicas are paired (0,1), (2,3), ...; pair (A, B) contributes
/// -(1/n^2) sum_{i,j} log|lambda_i(A) - lambda_j(B)| and is rejected when
/// some |lambda_i(A) - lambda_j(B)| < collision_eps. Every estimate uses the
/// accepted pairs only. Throws NumericalError when all pairs are rejected.
MeanEnergyEstimate estimate_from_batch(const SpectrumBatch& batch, const Penalty& penalty,
                                       double collision_eps = kDefaultCollisionEps);

/// replicas must be even and >= 2.
MeanEnergyEstimate estimate_mean_energy(const EnsembleSpec& spec, unsigned replicas, std::uint64_t master_seed,
                                        double collision_eps = kDefaultCollisionEps, unsigned workers = 0);

/// Closed-form penalized energy for models whose mean ESD is exactly GUE,
/// Ginibre or LUE (including beta = 2 and complex Gaussian entries).
std::optional<double> reference_energy(const EnsembleSpec& spec);

/// Diagnostic: mean over replicas of the energy of each empirical measure
/// with the diagonal i = j excluded. Not an estimate of the mean-measure energy.
EstimateWithError within_replica_energy(const SpectrumBatch& batch);

}  // namespace logenergy
