#pragma once
// Entry distributions for random matrix samplers, normalized to unit variance.

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <variant>

namespace logenergy {

using Rng = std::mt19937_64;

struct GaussianReal {};
struct GaussianComplex {};  // real and imaginary parts each N(0, 1/2)
struct Rademacher {};
/// Symmetric generalized gamma: density p / (2 Gamma(d/p)) |x|^{d-1} exp(-|x|^p).
struct SGG {
  double d = 1.0;
  double p = 2.0;
};
/// Density (alpha/2) (1 + |x|)^{-alpha-1}; requires alpha > 2.
struct Heavy {
  double alpha = 5.0;
};

using EntryKind = std::variant<GaussianReal, GaussianComplex, Rademacher, SGG, Heavy>;

class EntryDistribution {
 public:
  /// Validates the parameters and, unless `self_test` is false, checks the
  /// normalized variance on 10^6 draws (fixed seed) against 1 within three
  /// standard errors. Heavy tails with alpha <= 4 only record a warning since
  /// the fourth moment, and hence the standard error, is infinite.
  explicit EntryDistribution(EntryKind kind = GaussianReal{}, bool self_test = true);

  const EntryKind& kind() const { return kind_; }
  double scale() const { return scale_; }
  double raw_variance() const { return raw_variance_; }
  bool is_complex() const { return std::holds_alternative<GaussianComplex>(kind_); }
  std::string name() const;
  const std::string& warning() const { return warning_; }

  std::complex<double> sample(Rng& rng) const;

 private:
  EntryKind kind_;
  double raw_variance_ = 1.0;
  double scale_ = 1.0;
  std::string warning_;
};

inline std::complex<double> sample_entry(const EntryDistribution& dist, Rng& rng) { return dist.sample(rng); }

/// Standard normal draw.
double sample_normal(Rng& rng);
/// Chi distribution with k degrees of freedom, sqrt(2 Gamma(k/2, 1)).
double sample_chi(double k, Rng& rng);

}  // namespace logenergy
