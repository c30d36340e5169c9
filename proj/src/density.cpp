#include "logenergy/density.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "logenergy/errors.hpp"
#include "logenergy/quadrature.hpp"

namespace logenergy {

namespace {

constexpr double kCutoffRatio = 1e-16;
constexpr double kMomentTol = 1e-9;

void require_positive(unsigned n, const char* who) {
  if (n == 0) throw DomainError(std::string(who) + ": n must be >= 1");
}

double grid_peak(const std::function<double(double)>& f, double a, double b) {
  double peak = 0.0;
  constexpr int kSamples = 2000;
  for (int i = 0; i <= kSamples; ++i) {
    peak = std::max(peak, f(a + (b - a) * i / kSamples));
  }
  return peak;
}

struct Cutoff {
  double x;
  double tail_mass;
};

// Walks outward from `start` (direction sign(step)) until f drops below
// kCutoffRatio * peak, then bounds the remaining tail by the local
// exponential decay rate.
Cutoff find_cutoff(const std::function<double(double)>& f, double start, double step,
                   double peak) {
  const double threshold = kCutoffRatio * peak;
  double x = start;
  double fx = f(x);
  int guard = 0;
  while (fx >= threshold && guard++ < 100000) {
    x += step;
    fx = f(x);
  }
  const double fprev = f(x - step);
  double decay = std::fabs(step);
  if (fprev > fx && fx > 0) decay = std::fabs(step) / std::log(fprev / fx);
  return {x, 2.0 * fx * decay};
}

// Sum_{k<n} psi_k(x)^2 with the orthonormal Hermite functions.
double hermite_square_sum(unsigned n, double x) {
  double prev = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  double sum = prev * prev;
  if (n == 1) return sum;
  double cur = std::numbers::sqrt2 * x * prev;
  sum += cur * cur;
  for (unsigned j = 1; j + 1 < n; ++j) {
    const double jd = j;
    const double next =
        std::sqrt(2.0 / (jd + 1.0)) * x * cur - std::sqrt(jd / (jd + 1.0)) * prev;
    prev = cur;
    cur = next;
    sum += cur * cur;
  }
  return sum;
}

Density1D symmetric_from(std::function<double(double)> f, double edge, double step,
                         std::string label) {
  const double peak = grid_peak(f, -edge, edge);
  const Cutoff c = find_cutoff(f, edge, step, peak);
  Density1D d;
  d.eval = std::move(f);
  d.lo = -c.x;
  d.hi = c.x;
  d.lo_bounded = false;
  d.hi_bounded = false;
  d.tail_mass = 2.0 * c.tail_mass;
  d.label = std::move(label);
  return d;
}

Density1D half_line_from(std::function<double(double)> f, double edge, double step,
                         std::string label) {
  const double peak = grid_peak(f, 0.0, edge);
  const Cutoff c = find_cutoff(f, edge, step, peak);
  Density1D d;
  d.eval = std::move(f);
  d.lo = 0.0;
  d.hi = c.x;
  d.lo_bounded = true;
  d.hi_bounded = false;
  d.tail_mass = c.tail_mass;
  d.label = std::move(label);
  return d;
}

RadialDensity2D radial_from(std::function<double(double)> profile, double edge,
                            double step, std::string label) {
  const double peak = grid_peak(profile, 0.0, edge);
  const Cutoff c = find_cutoff(profile, edge, step, peak);
  RadialDensity2D d;
  d.profile = std::move(profile);
  d.cutoff = c.x;
  d.tail_mass = c.tail_mass * 2.0 * std::numbers::pi * (c.x + 1.0);
  d.label = std::move(label);
  return d;
}

}  // namespace

std::vector<Rational> gue_feldheim_coefficients(unsigned n) {
  require_positive(n, "gue_feldheim_coefficients");
  std::vector<Rational> c(n);
  BigInt fact = 1;
  BigInt pow2 = 1;
  for (unsigned k = 0; k < n; ++k) {
    if (k > 0) {
      fact *= k;
      pow2 *= 2;
    }
    c[k] = Rational(binomial(n, k + 1)) / Rational(pow2 * fact);
  }
  return c;
}

std::vector<Rational> lue_howell_coefficients(unsigned n) {
  require_positive(n, "lue_howell_coefficients");
  std::vector<Rational> p(n);
  for (unsigned k = 0; k < n; ++k) {
    const Rational b = binom_general(Rational(2 * static_cast<int>(k) - 1, 2), n);  // binom(k - 1/2, n)
    Rational v = 2 * Rational(binomial(n - 1, k)) * b;
    if ((n - k) % 2 == 1) v = -v;
    p[k] = v;
  }
  return p;
}

Density1D gue_density(unsigned n, bool scaled) {
  require_positive(n, "gue_density");
  const double inv_n = 1.0 / n;
  std::function<double(double)> phi = [n, inv_n](double x) {
    return inv_n * hermite_square_sum(n, x);
  };
  const std::string label = "GUE n=" + std::to_string(n);
  if (!scaled) return symmetric_from(phi, std::sqrt(2.0 * n + 1.0), 0.05, label + " unscaled");
  const double c = std::sqrt(0.5 * n);
  std::function<double(double)> f = [phi, c](double x) { return c * phi(c * x); };
  return symmetric_from(f, std::sqrt(2.0 * n + 1.0) / c, 0.05 / c, label);
}

Density1D gue_density_feldheim(unsigned n) {
  require_positive(n, "gue_density_feldheim");
  std::vector<double> coef;
  for (const auto& q : gue_feldheim_coefficients(n)) coef.push_back(static_cast<double>(q));
  const double norm = 1.0 / (n * std::sqrt(std::numbers::pi));
  std::function<double(double)> phi = [coef, norm](double x) {
    // h_{2k}(x) for k < n by the recurrence, keeping even orders
    double prev = 1.0;
    double cur = 2.0 * x;
    double sum = coef[0];
    unsigned order = 1;
    for (std::size_t k = 1; k < coef.size(); ++k) {
      while (order < 2 * k) {
        const double next = 2.0 * x * cur - 2.0 * order * prev;
        prev = cur;
        cur = next;
        ++order;
      }
      sum += coef[k] * cur;
    }
    return norm * std::exp(-x * x) * sum;
  };
  return symmetric_from(phi, std::sqrt(2.0 * n + 1.0), 0.05,
                        "GUE (Feldheim) n=" + std::to_string(n) + " unscaled");
}

RadialDensity2D ginibre_density(unsigned n, bool scaled) {
  require_positive(n, "ginibre_density");
  const double norm = 1.0 / (n * std::numbers::pi);
  std::function<double(double)> rho = [n, norm](double r) {
    return norm * upper_incomplete_gamma_int_regularized(n, r * r);
  };
  const std::string label = "Ginibre n=" + std::to_string(n);
  const double edge = std::sqrt(static_cast<double>(n));
  if (!scaled) return radial_from(rho, edge, 0.05, label + " unscaled");
  const double c = std::sqrt(static_cast<double>(n));
  const double jac = static_cast<double>(n);  // planar dilation by sqrt(n)
  std::function<double(double)> f = [rho, c, jac](double r) { return jac * rho(c * r); };
  return radial_from(f, 1.0, 0.05 / c, label);
}

RadialDensity2D ginibre_density_gamma_form(unsigned n) {
  require_positive(n, "ginibre_density_gamma_form");
  const double norm = 1.0 / (n * std::numbers::pi);
  std::function<double(double)> rho = [n, norm](double r) {
    if (r == 0.0) return norm;
    return norm * boost::math::gamma_q(static_cast<double>(n), r * r);
  };
  return radial_from(rho, std::sqrt(static_cast<double>(n)), 0.05,
                     "Ginibre (Gamma form) n=" + std::to_string(n) + " unscaled");
}

Density1D lue_density(unsigned n, bool scaled) {
  require_positive(n, "lue_density");
  const double log_inv_n = -std::log(static_cast<double>(n));
  std::function<double(double)> phi = [n, log_inv_n](double s) {
    if (s < 0) return 0.0;
    return std::exp(log_inv_n + log_laguerre_square_sum(n, s));
  };
  const std::string label = "LUE n=" + std::to_string(n);
  if (!scaled) return half_line_from(phi, 4.0 * n + 2.0, 0.25, label + " unscaled");
  const double c = static_cast<double>(n);
  std::function<double(double)> f = [phi, c](double s) { return c * phi(c * s); };
  return half_line_from(f, (4.0 * n + 2.0) / c, 0.25 / c, label);
}

Density1D lue_density_howell(unsigned n) {
  require_positive(n, "lue_density_howell");
  std::vector<double> p;
  for (const auto& q : lue_howell_coefficients(n)) p.push_back(static_cast<double>(q));
  std::function<double(double)> phi = [p](double s) {
    if (s < 0) return 0.0;
    const double x = 2.0 * s;
    double prev = 1.0;
    double cur = 1.0 - x;
    double sum = p[0];
    unsigned order = 1;
    for (std::size_t k = 1; k < p.size(); ++k) {
      while (order < 2 * k) {
        const double next = ((2.0 * order + 1.0 - x) * cur - order * prev) / (order + 1.0);
        prev = cur;
        cur = next;
        ++order;
      }
      sum += p[k] * cur;
    }
    return std::exp(-s) * sum;
  };
  return half_line_from(phi, 4.0 * n + 2.0, 0.25,
                        "LUE (Howell) n=" + std::to_string(n) + " unscaled");
}

Density1D semicircle_density() {
  Density1D d;
  d.eval = [](double x) {
    const double v = 4.0 - x * x;
    return v > 0 ? std::sqrt(v) / (2.0 * std::numbers::pi) : 0.0;
  };
  d.lo = -2.0;
  d.hi = 2.0;
  d.label = "semicircle";
  return d;
}

Density1D marchenko_pastur_density() {
  Density1D d;
  d.eval = [](double x) {
    if (x <= 0.0 || x >= 4.0) return 0.0;
    return std::sqrt(4.0 - x) / (2.0 * std::numbers::pi * std::sqrt(x));
  };
  d.lo = 0.0;
  d.hi = 4.0;
  d.label = "Marchenko-Pastur";
  return d;
}

Density1D uniform_density(double a, double b) {
  if (!(b > a)) throw DomainError("uniform_density: need a < b");
  Density1D d;
  const double h = 1.0 / (b - a);
  d.eval = [h](double) { return h; };
  d.lo = a;
  d.hi = b;
  d.label = "uniform";
  return d;
}

Density1D standard_normal_density() {
  std::function<double(double)> f = [](double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  };
  return symmetric_from(f, 1.0, 0.05, "N(0,1)");
}

Density1D exponential_density() {
  std::function<double(double)> f = [](double s) { return s < 0 ? 0.0 : std::exp(-s); };
  return half_line_from(f, 1.0, 0.25, "Exp(1)");
}

RadialDensity2D unit_disk_density() {
  RadialDensity2D d;
  d.profile = [](double r) { return r <= 1.0 ? 1.0 / std::numbers::pi : 0.0; };
  d.cutoff = 1.0;
  d.cutoff_is_edge = true;
  d.label = "unit disk";
  return d;
}

Density1D dilate(const Density1D& density, double c) {
  if (!(c > 0)) throw DomainError("dilate: factor must be > 0");
  Density1D d = density;
  auto f = density.eval;
  d.eval = [f, c](double x) { return f(x / c) / c; };
  d.lo = density.lo * c;
  d.hi = density.hi * c;
  d.label = density.label + " dilated";
  return d;
}

double moment(const Density1D& density, int p) {
  auto f = [&](double x) { return std::pow(std::fabs(x), p) * density(x); };
  return integrate_adaptive(f, density.lo, density.hi, kMomentTol, density.lo_bounded,
                            density.hi_bounded)
      .value;
}

double moment(const RadialDensity2D& density, int p) {
  auto f = [&](double r) {
    return std::pow(r, p) * 2.0 * std::numbers::pi * r * density(r);
  };
  return integrate_adaptive(f, 0.0, density.cutoff, kMomentTol, true, density.cutoff_is_edge)
      .value;
}

double total_mass(const Density1D& density) { return moment(density, 0); }

double total_mass(const RadialDensity2D& density) { return moment(density, 0); }

}  // namespace logenergy
