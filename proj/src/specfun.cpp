#include "logenergy/specfun.hpp"

#include <cmath>
#include <numbers>

#include "logenergy/errors.hpp"

namespace logenergy {

void CompensatedSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::fabs(sum_) >= std::fabs(v)) {
    comp_ += (sum_ - t) + v;
  } else {
    comp_ += (v - t) + sum_;
  }
  sum_ = t;
}

Rational harmonic(unsigned n) {
  if (n == 0) throw DomainError("harmonic: n must be >= 1");
  Rational h = 0;
  for (unsigned k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

Rational odd_harmonic(unsigned m) {
  Rational h = 0;
  for (unsigned i = 1; i <= m; ++i) h += Rational(1, 2 * i - 1);
  return h;
}

double harmonic_double(unsigned n) {
  if (n == 0) throw DomainError("harmonic: n must be >= 1");
  CompensatedSum s;
  // smallest terms first
  for (unsigned k = n; k >= 1; --k) s += 1.0 / static_cast<double>(k);
  return s.value();
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= (n - k + i);
    c /= i;
  }
  return c;
}

double binom_general(double z, unsigned n) {
  double c = 1.0;
  for (unsigned i = 0; i < n; ++i) c *= (z - i) / static_cast<double>(i + 1);
  return c;
}

Rational binom_general(const Rational& z, unsigned n) {
  Rational c = 1;
  for (unsigned i = 0; i < n; ++i) c *= (z - i) / Rational(i + 1);
  return c;
}

double central_binom_ratio(unsigned k) {
  double r = 1.0;
  for (unsigned j = 1; j <= k; ++j) r *= (2.0 * j - 1.0) / (2.0 * j);
  return r;
}

double upper_incomplete_gamma_int(unsigned n, double r) {
  if (n == 0) throw DomainError("upper_incomplete_gamma_int: n must be >= 1");
  if (r < 0) throw DomainError("upper_incomplete_gamma_int: r must be >= 0");
  return std::exp(std::lgamma(static_cast<double>(n))) *
         upper_incomplete_gamma_int_regularized(n, r);
}

double upper_incomplete_gamma_int_regularized(unsigned n, double r) {
  if (n == 0) throw DomainError("upper_incomplete_gamma_int: n must be >= 1");
  if (r < 0) throw DomainError("upper_incomplete_gamma_int: r must be >= 0");
  if (r == 0) return 1.0;
  // e^{-r} r^k / k! in log space
  const double log_r = std::log(r);
  CompensatedSum s;
  for (unsigned k = 0; k < n; ++k) {
    s += std::exp(-r + k * log_r - std::lgamma(k + 1.0));
  }
  return s.value();
}

double hermite_h(unsigned k, double x) {
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = 2.0 * x;
  for (unsigned j = 1; j < k; ++j) {
    const double next = 2.0 * x * cur - 2.0 * j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<BigInt> hermite_coefficients(unsigned k) {
  std::vector<BigInt> prev{1};
  if (k == 0) return prev;
  std::vector<BigInt> cur{0, 2};
  for (unsigned j = 1; j < k; ++j) {
    std::vector<BigInt> next(j + 2, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * j * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

void hermite_functions(double x, std::span<double> out) {
  if (out.empty()) return;
  out[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  if (out.size() == 1) return;
  out[1] = std::numbers::sqrt2 * x * out[0];
  for (std::size_t j = 1; j + 1 < out.size(); ++j) {
    const double jd = static_cast<double>(j);
    out[j + 1] = std::sqrt(2.0 / (jd + 1.0)) * x * out[j] -
                 std::sqrt(jd / (jd + 1.0)) * out[j - 1];
  }
}

double laguerre_l(unsigned k, double s) {
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = 1.0 - s;
  for (unsigned j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 - s) * cur - j * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_closed_form(unsigned k, double s) {
  double sum = 0.0;
  double term = 1.0;  // (-1)^i C(k,i) s^i / i!
  for (unsigned i = 0; i <= k; ++i) {
    sum += term;
    term *= -static_cast<double>(k - i) * s / ((i + 1.0) * (i + 1.0));
  }
  return sum;
}

std::vector<Rational> laguerre_coefficients(unsigned k) {
  std::vector<Rational> prev{1};
  if (k == 0) return prev;
  std::vector<Rational> cur{1, -1};
  for (unsigned j = 1; j < k; ++j) {
    std::vector<Rational> next(j + 2, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] += Rational(2 * j + 1) * cur[i];
      next[i + 1] -= cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= Rational(j) * prev[i];
    for (auto& c : next) c /= (j + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Rational> laguerre_closed_form_coefficients(unsigned k) {
  std::vector<Rational> c(k + 1);
  BigInt fact = 1;
  for (unsigned i = 0; i <= k; ++i) {
    if (i > 0) fact *= i;
    const Rational v = Rational(binomial(k, i)) / Rational(fact);
    c[i] = (i % 2 == 0) ? v : Rational(-v);
  }
  return c;
}

double log_laguerre_square_sum(unsigned n, double s) {
  if (n == 0) throw DomainError("log_laguerre_square_sum: n must be >= 1");
  // Values are held as v * exp(log_scale); rescale whenever they grow large.
  double log_scale = -0.5 * s;
  double prev = 1.0;
  double cur = 1.0 - s;
  double sum = prev * prev;
  constexpr double kBig = 1e100;
  for (unsigned j = 1; j < n; ++j) {
    sum += cur * cur;
    if (j + 1 == n) break;
    const double next = ((2.0 * j + 1.0 - s) * cur - j * prev) / (j + 1.0);
    prev = cur;
    cur = next;
    const double mag = std::max(std::fabs(prev), std::fabs(cur));
    if (mag > kBig) {
      prev /= mag;
      cur /= mag;
      sum /= mag * mag;
      log_scale += std::log(mag);
    }
  }
  return std::log(sum) + 2.0 * log_scale;
}

}  // namespace logenergy
