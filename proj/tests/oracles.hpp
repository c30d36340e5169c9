#pragma once
// Independent reference computations shared by unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "logenergy/rmt/distributions.hpp"

namespace oracle {

using cld = std::complex<long double>;

// Monic characteristic polynomial by Faddeev-LeVerrier, coefficients of
// z^n, z^{n-1}, ..., z^0.
inline std::vector<cld> charpoly(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  using M = Eigen::Matrix<cld, Eigen::Dynamic, Eigen::Dynamic>;
  const M A = a.cast<cld>();
  std::vector<cld> c(n + 1);
  c[0] = 1;
  M mk = M::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = A * mk + c[k - 1] * M::Identity(n, n);
    c[k] = -(A * mk).trace() / static_cast<long double>(k);
  }
  return c;
}

inline cld horner(const std::vector<cld>& c, cld z) {
  cld v = 0;
  for (const auto& x : c) v = v * z + x;
  return v;
}

// Durand-Kerner simultaneous iteration followed by Newton polishing.
inline std::vector<std::complex<double>> durand_kerner(const std::vector<cld>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  long double radius = 0;
  for (int k = 1; k <= n; ++k) radius = std::max(radius, std::pow(std::abs(c[k]), 1.0L / k));
  radius = 2 * radius + 1;
  std::vector<cld> z(n);
  const cld seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[i] = radius * std::pow(seed, static_cast<long double>(i)) / std::abs(seed) * 0.5L;
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      cld den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      const cld step = horner(c, z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-17L * radius) break;
  }
  std::vector<cld> d(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) d[k] = c[k] * static_cast<long double>(n - k);
    for (int it = 0; it < 3; ++it) {
      const cld p = horner(c, z[i]), dp = horner(d, z[i]);
      if (std::abs(dp) > 0) z[i] -= p / dp;
    }
  }
  std::vector<std::complex<double>> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::complex<double>(z[i]);
  return out;
}

// Roots as eigenvalues of the companion matrix (Eigen solver).
inline std::vector<std::complex<double>> companion_roots(const std::vector<cld>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -std::complex<double>(c[n - i]);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<std::complex<double>> out(n);
  for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

// Largest distance under a greedy nearest matching.
inline double match_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    std::size_t best = 0;
    double bd = INFINITY;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!used[j] && std::abs(x - b[j]) < bd) {
        bd = std::abs(x - b[j]);
        best = j;
      }
    used[best] = true;
    worst = std::max(worst, bd);
  }
  return worst;
}

inline std::vector<std::complex<double>> to_vector(const Eigen::VectorXcd& v) {
  return {v.data(), v.data() + v.size()};
}

inline Eigen::MatrixXcd random_complex(int n, logenergy::Rng& rng) {
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = logenergy::sample_normal(rng);
      const double im = logenergy::sample_normal(rng);
      a(i, j) = {re, im};
    }
  return a;
}

inline Eigen::MatrixXcd random_hermitian(int n, logenergy::Rng& rng) {
  Eigen::MatrixXcd a = random_complex(n, rng);
  return (a + a.adjoint()) / 2.0;
}

// Two-sample Kolmogorov-Smirnov p-value (asymptotic distribution).
inline double ks_pvalue(std::vector<double> x, std::vector<double> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    d = std::max(d, std::abs(double(i) / x.size() - double(j) / y.size()));
  }
  const double ne = double(x.size()) * y.size() / (x.size() + y.size());
  const double lam = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  double q = 0;
  for (int k = 1; k <= 100; ++k) q += 2 * ((k % 2) ? 1 : -1) * std::exp(-2.0 * k * k * lam * lam);
  return std::clamp(q, 0.0, 1.0);
}

// Direct partial sum of the tail series to K terms, with the leading
// asymptotic remainder (2/3) K^{-3/2} / sqrt(pi) added.
inline double b_partial(unsigned n, unsigned K) {
  double c = 1.0;  // 4^{-k} C(2k,k)
  for (unsigned k = 1; k <= n; ++k) c *= (2.0 * k - 1.0) / (2.0 * k);
  double s = 0.0, comp = 0.0;
  for (unsigned k = n + 1; k <= K; ++k) {
    c *= (2.0 * k - 1.0) / (2.0 * k);
    double term = c / (double(k) * (k - 1.0));
    double y = term - comp;
    double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  s += (2.0 / 3.0) / (std::sqrt(std::numbers::pi) * std::pow(double(K), 1.5));
  return 0.5 * s;
}

}  // namespace oracle
