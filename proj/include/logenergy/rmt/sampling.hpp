#pragma once
// Matrix ensembles and batched spectrum sampling.

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "logenergy/penalty.hpp"
#include "logenergy/rmt/distributions.hpp"

namespace logenergy {

enum class Model { GUE_exact, Ginibre_exact, LUE_exact, BetaHermite, Wigner, IID, Wishart };

struct EnsembleSpec {
  Model model = Model::GUE_exact;
  unsigned n = 1;
  double beta = 2.0;                       // BetaHermite only
  std::optional<EntryDistribution> dist;   // Wigner, IID, Wishart

  /// Throws DomainError on n = 0, beta <= 0 or a missing distribution.
  void validate() const;
  std::string label() const;
  /// Real spectrum models.
  bool hermitian() const;
  /// Quadratic (lambda = 1 or 1/2) or linear penalty attached to the model.
  Penalty penalty() const;
};

Model parse_model(const std::string& name);
std::string model_name(Model model);

/// Per-replica seed derived from the master seed by splitmix64 mixing.
std::uint64_t replica_seed(std::uint64_t master_seed, std::uint64_t replica_index);

/// Unnormalized draw: GUE_exact, Ginibre_exact and LUE_exact at their final
/// scale; Wigner and IID with raw entries; Wishart as (1/n) X X*.
/// BetaHermite is returned as the dense normalized tridiagonal matrix.
Eigen::MatrixXcd sample_matrix(const EnsembleSpec& spec, Rng& rng);

struct Tridiagonal {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd off_diagonal;
};

/// Normalized beta-Hermite tridiagonal model: a_i ~ N(0,2),
/// b_i ~ chi((n - i) beta), all divided by sqrt(2 + beta (n - 1)).
Tridiagonal sample_beta_hermite(unsigned n, double beta, Rng& rng);

/// Spectrum of one normalized draw (Wigner and IID divided by sqrt n).
/// Hermitian spectra are real, ascending, returned with zero imaginary part.
Eigen::VectorXcd sample_spectrum(const EnsembleSpec& spec, Rng& rng);

struct SpectrumBatch {
  unsigned n = 0;
  unsigned replica_count = 0;
  std::uint64_t master_seed = 0;
  bool hermitian = true;
  Eigen::MatrixXcd spectra;  // n x replica_count, one column per replica

  std::uint64_t seed_of(unsigned replica) const { return replica_seed(master_seed, replica); }
};

/// Number of worker threads: `requested` if nonzero, otherwise the hardware
/// concurrency, capped by the LOGENERGY_THREADS environment variable.
unsigned worker_count(unsigned requested = 0);

/// Samples `replicas` spectra in parallel; the result does not depend on the
/// number of workers.
SpectrumBatch sample_spectra(const EnsembleSpec& spec, unsigned replicas, std::uint64_t master_seed,
                             unsigned workers = 0);

}  // namespace logenergy
