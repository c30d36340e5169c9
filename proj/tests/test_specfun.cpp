#include <cmath>
#include <numbers>

#include "doctest.h"
#include "logenergy/errors.hpp"
#include "logenergy/quadrature.hpp"
#include "logenergy/specfun.hpp"

using namespace logenergy;

namespace {

// Explicit Hermite sum k! sum_m (-1)^m (2x)^{k-2m} / (m! (k-2m)!), exact.
std::vector<BigInt> hermite_explicit(unsigned k) {
  std::vector<BigInt> c(k + 1, 0);
  BigInt kfact = 1;
  for (unsigned i = 2; i <= k; ++i) kfact *= i;
  for (unsigned m = 0; 2 * m <= k; ++m) {
    BigInt mf = 1, rf = 1;
    for (unsigned i = 2; i <= m; ++i) mf *= i;
    for (unsigned i = 2; i <= k - 2 * m; ++i) rf *= i;
    BigInt v = kfact / (mf * rf) * (BigInt(1) << (k - 2 * m));
    c[k - 2 * m] = (m % 2 == 0) ? v : BigInt(-v);
  }
  return c;
}

}  // namespace

TEST_CASE("harmonic numbers are exact") {
  CHECK(harmonic(1) == Rational(1));
  CHECK(harmonic(2) == Rational(3, 2));
  CHECK(harmonic(4) == Rational(25, 12));
  CHECK_THROWS_AS(harmonic(0), DomainError);
  for (unsigned n = 1; n < 60; ++n) {
    CHECK(harmonic(n + 1) - harmonic(n) == Rational(1, n + 1));
  }
}

TEST_CASE("odd harmonic numbers") {
  CHECK(odd_harmonic(0) == Rational(0));
  CHECK(odd_harmonic(1) == Rational(1));
  CHECK(odd_harmonic(3) == Rational(23, 15));
}

TEST_CASE("Euler-Mascheroni constant") {
  CHECK(euler_gamma() == doctest::Approx(0.5772156649015329).epsilon(1e-16));
  const unsigned n = 1000000;
  CHECK(std::fabs(harmonic_double(n) - std::log(double(n)) - euler_gamma()) < 0.5 / n);
  // gamma = -Gamma'(1) = -(d/dx) lgamma at 1
  const double h = 1e-5;
  const double digamma1 = (std::lgamma(1.0 + h) - std::lgamma(1.0 - h)) / (2 * h);
  CHECK(std::fabs(-digamma1 - euler_gamma()) < 1e-8);
}

TEST_CASE("generalized binomial") {
  CHECK(binom_general(5.0, 2) == doctest::Approx(10.0));
  CHECK(binom_general(-0.5, 1) == doctest::Approx(-0.5));
  CHECK(binom_general(-0.5, 2) == doctest::Approx(0.375));
  CHECK(binom_general(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(binom_general(Rational(7), 3) == Rational(35));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 10) == 0);
}

TEST_CASE("central binomial ratio") {
  CHECK(central_binom_ratio(0) == 1.0);
  CHECK(central_binom_ratio(1) == 0.5);
  CHECK(central_binom_ratio(5) == doctest::Approx(63.0 / 256.0).epsilon(1e-15));
  double prev = 1.0;
  for (unsigned k = 1; k < 200; ++k) {
    const double r = central_binom_ratio(k);
    CHECK(r > 0.0);
    CHECK(r < prev);
    prev = r;
  }
  const double k = 10000;
  const double r = central_binom_ratio(10000);
  CHECK(std::fabs(k * r * r * std::numbers::pi - 1.0) < 0.01);
}

TEST_CASE("upper incomplete gamma at integer order") {
  for (double r : {0.0, 1.0, 3.0}) {
    CHECK(upper_incomplete_gamma_int(1, r) == doctest::Approx(std::exp(-r)).epsilon(1e-14));
  }
  CHECK(upper_incomplete_gamma_int(3, 0.0) == doctest::Approx(2.0));
  CHECK(upper_incomplete_gamma_int(2, 1.0) == doctest::Approx(2.0 / std::exp(1.0)).epsilon(1e-14));
  for (unsigned n : {1u, 2u, 5u, 12u}) {
    double prev = 1.0;
    for (double r = 0.25; r < 40.0; r += 0.25) {
      const double q = upper_incomplete_gamma_int_regularized(n, r);
      CHECK(q > 0.0);
      CHECK(q <= 1.0);
      CHECK(q <= prev);
      prev = q;
    }
  }
}

TEST_CASE("Hermite polynomials") {
  CHECK(hermite_h(0, 0.3) == 1.0);
  CHECK(hermite_h(2, 1.0) == doctest::Approx(2.0));
  for (unsigned k = 0; k <= 12; ++k) CHECK(hermite_coefficients(k) == hermite_explicit(k));

  const auto& rule = gauss_legendre(16);
  const auto panels = graded_panels(-12.0, 12.0, 48, 0, false, false);
  const double cross = integrate_panels(
      [](double x) { return hermite_h(2, x) * hermite_h(3, x) * std::exp(-x * x); }, panels, rule);
  CHECK(std::fabs(cross) < 1e-10);
  // 2^i i! sqrt(pi) normalization
  const double norm3 = integrate_panels(
      [](double x) { return hermite_h(3, x) * hermite_h(3, x) * std::exp(-x * x); }, panels, rule);
  CHECK(norm3 == doctest::Approx(48.0 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("normalized Hermite functions match the weighted polynomials") {
  std::vector<double> psi(20);
  for (double x : {-3.0, -0.7, 0.0, 1.3, 4.2}) {
    hermite_functions(x, psi);
    double fact = 1.0;
    for (unsigned j = 0; j < psi.size(); ++j) {
      if (j > 0) fact *= j;
      const double expect = hermite_h(j, x) * std::exp(-0.5 * x * x) /
                            std::sqrt(std::pow(2.0, j) * fact * std::sqrt(std::numbers::pi));
      CHECK(psi[j] == doctest::Approx(expect).epsilon(1e-11).scale(1e-12));
    }
  }
}

TEST_CASE("Laguerre polynomials") {
  for (unsigned k = 0; k <= 20; ++k) CHECK(laguerre_l(k, 0.0) == doctest::Approx(1.0));
  CHECK(laguerre_l(1, 2.5) == doctest::Approx(-1.5));
  for (unsigned k = 0; k <= 12; ++k) {
    CHECK(laguerre_coefficients(k) == laguerre_closed_form_coefficients(k));
    for (double s : {0.1, 1.0, 3.7, 9.0}) {
      CHECK(laguerre_l(k, s) == doctest::Approx(laguerre_closed_form(k, s)).epsilon(1e-10));
    }
  }
  const auto& rule = gauss_legendre(16);
  const auto panels = graded_panels(0.0, 80.0, 64, 0, false, false);
  const double cross = integrate_panels(
      [](double s) { return laguerre_l(2, s) * laguerre_l(4, s) * std::exp(-s); }, panels, rule);
  CHECK(std::fabs(cross) < 1e-10);
  const double norm = integrate_panels(
      [](double s) { return laguerre_l(3, s) * laguerre_l(3, s) * std::exp(-s); }, panels, rule);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("log Laguerre square sum survives large arguments") {
  for (unsigned n : {1u, 3u, 10u}) {
    for (double s : {0.0, 0.5, 7.0, 30.0}) {
      double direct = 0.0;
      for (unsigned k = 0; k < n; ++k) direct += laguerre_l(k, s) * laguerre_l(k, s);
      CHECK(std::exp(log_laguerre_square_sum(n, s)) ==
            doctest::Approx(std::exp(-s) * direct).epsilon(1e-11));
    }
  }
  const double big = log_laguerre_square_sum(400, 3000.0);
  CHECK(std::isfinite(big));
}

TEST_CASE("compensated summation is order independent") {
  CompensatedSum a, b;
  std::vector<double> v{1e16, 1.0, -1e16, 3.0, 1e-3};
  for (double x : v) a += x;
  for (auto it = v.rbegin(); it != v.rend(); ++it) b += *it;
  CHECK(std::fabs(a.value() - b.value()) < 1e-14);
  CHECK(a.value() == doctest::Approx(4.001));
}
