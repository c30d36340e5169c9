#pragma once
// Checks of the combinatorial and analytic identities behind the closed forms.
// Exact-mode checks use rational arithmetic and pass only on equality;
// quadrature-mode checks compare against a declared tolerance.

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "logenergy/specfun.hpp"

namespace logenergy {

enum class IdentityMode { Exact, Quadrature };

using IdentityValue = std::variant<Rational, double>;

struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, double>> params;
  IdentityValue lhs;
  IdentityValue rhs;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  IdentityMode mode = IdentityMode::Exact;
  bool pass = false;
};

// exact mode
IdentityReport check_hockey_stick(unsigned n, unsigned r);
IdentityReport check_calcul_gue(unsigned n);
IdentityReport check_binomial_identity(unsigned k, unsigned l, unsigned p);
IdentityReport check_harmonic_identity(unsigned n);
/// Normalization sum p_k = 1 and positivity of the LUE Howell coefficients.
IdentityReport check_pk(unsigned n);
/// Partial fractions of the Stieltjes transform of (p_k), at each z exactly,
/// plus z (1 - z S(z)) -> (n-1)/4 at z = 1e6 within 1e-3.
IdentityReport check_stieltjes(unsigned n, std::span<const double> z_grid);

// quadrature mode
/// Pointwise, relative to the magnitude of the summands.
IdentityReport check_feldheim(unsigned k, std::span<const double> grid);
IdentityReport check_howell(unsigned k, std::span<const double> grid);
IdentityReport check_integral_mh(unsigned n, double t);
IdentityReport check_beta_prime_log(unsigned n);
IdentityReport check_laguerre_convolution(unsigned k, unsigned l, double t);
/// The first integral (value 2 log 2) of the pair.
IdentityReport check_lue_log_integral();
/// The second integral, 4 (log 2 + 2 oddH_m). For m = 0 the integrand has a
/// simple pole at t = 1/2 and the integral is taken as a principal value.
IdentityReport check_lue_integrals(unsigned m);

struct SuiteOptions {
  std::string only;  // identity name filter; empty runs everything
  unsigned n_max = 0;  // 0 keeps the default range of every identity
};

std::vector<IdentityReport> run_suite(const SuiteOptions& options = {});

/// Names accepted by SuiteOptions::only.
std::vector<std::string> identity_names();

/// One JSON object per line.
std::string to_json_line(const IdentityReport& report);
void write_json_lines(std::ostream& out, const std::vector<IdentityReport>& reports);

}  // namespace logenergy
