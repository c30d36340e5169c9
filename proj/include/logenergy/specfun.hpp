#pragma once

// Special functions and orthogonal polynomials shared by every other module.
// Exact values live in Rational (arbitrary precision, always reduced);
// everything else is double.

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

namespace logenergy {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

inline constexpr double euler_gamma() { return kEulerGamma; }

/// H_n = 1 + 1/2 + ... + 1/n. Throws DomainError for n = 0.
Rational harmonic(unsigned n);

/// 1 + 1/3 + ... + 1/(2m-1); zero for m = 0.
Rational odd_harmonic(unsigned m);

/// Floating H_n, compensated summation.
double harmonic_double(unsigned n);

/// Ordinary binomial coefficient C(n, k), zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// Generalized binomial z(z-1)...(z-n+1)/n!, left-to-right product.
double binom_general(double z, unsigned n);
Rational binom_general(const Rational& z, unsigned n);

/// 4^{-k} C(2k, k) by the recurrence r_k = r_{k-1} (2k-1)/(2k).
double central_binom_ratio(unsigned k);

/// Gamma(n, r) = (n-1)! e^{-r} sum_{k<n} r^k/k!  (n >= 1, r >= 0).
double upper_incomplete_gamma_int(unsigned n, double r);

/// Regularized form Gamma(n, r)/(n-1)!, evaluated in log space so it stays
/// finite for large n and r.
double upper_incomplete_gamma_int_regularized(unsigned n, double r);

/// Physicist's Hermite polynomial h_k(x) via h_{k+1} = 2x h_k - 2k h_{k-1}.
double hermite_h(unsigned k, double x);

/// Integer coefficients of h_k, lowest degree first (recurrence in exact arithmetic).
std::vector<BigInt> hermite_coefficients(unsigned k);

/// Orthonormal Hermite functions psi_j(x) = h_j(x) e^{-x^2/2} / sqrt(2^j j! sqrt(pi))
/// for j = 0..out.size()-1, by the stable three-term recurrence.
void hermite_functions(double x, std::span<double> out);

/// Laguerre polynomial via (k+1) L_{k+1} = (2k+1-s) L_k - k L_{k-1}.
double laguerre_l(unsigned k, double s);

/// L_k by the explicit sum sum_i (-1)^i C(k,i) s^i / i!.
double laguerre_closed_form(unsigned k, double s);

/// Rational coefficients of L_k, lowest degree first (recurrence in exact arithmetic).
std::vector<Rational> laguerre_coefficients(unsigned k);

/// Rational coefficients of L_k from the explicit sum.
std::vector<Rational> laguerre_closed_form_coefficients(unsigned k);

/// Evaluates sum_{k<n} (e^{-s/2} L_k(s))^2 without overflow by tracking a
/// running log-scale. Returns log of the sum (the sum can underflow).
double log_laguerre_square_sum(unsigned n, double s);

/// Running compensated (Neumaier) sum; the result does not depend on the
/// magnitude ordering of the terms up to a few ulps.
class CompensatedSum {
 public:
  void add(double v) noexcept;
  double value() const noexcept { return sum_ + comp_; }
  CompensatedSum& operator+=(double v) noexcept {
    add(v);
    return *this;
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace logenergy
