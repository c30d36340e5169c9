#include "logenergy/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "logenergy/errors.hpp"

namespace logenergy {

namespace {

GaussLegendreRule build_rule(int order) {
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    // Newton iteration from the Chebyshev-like initial guess
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(build_rule(order));
  return *slot;
}

std::vector<Panel> graded_panels(double a, double b, int uniform, int depth,
                                 bool grade_a, bool grade_b) {
  std::vector<Panel> panels;
  if (!(b > a)) return panels;
  uniform = std::max(uniform, 1);
  const double h = (b - a) / uniform;
  if (uniform == 1 && grade_a && grade_b) {
    // grade both ends of a single panel: split at the midpoint
    auto left = graded_panels(a, 0.5 * (a + b), 1, depth, true, false);
    auto right = graded_panels(0.5 * (a + b), b, 1, depth, false, true);
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
  for (int i = 0; i < uniform; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == uniform) ? b : a + (i + 1) * h;
    if (i == 0 && grade_a && depth > 0) {
      double r = 1.0;
      std::vector<Panel> tmp;
      for (int j = 0; j < depth; ++j) {
        const double rn = r * kGradingRatio;
        tmp.push_back({a + (hi - a) * rn, a + (hi - a) * r});
        r = rn;
      }
      tmp.push_back({a, a + (hi - a) * r});
      panels.insert(panels.end(), tmp.rbegin(), tmp.rend());
    } else if (i + 1 == uniform && grade_b && depth > 0) {
      double r = 1.0;
      for (int j = 0; j < depth; ++j) {
        const double rn = r * kGradingRatio;
        panels.push_back({b - (b - lo) * r, b - (b - lo) * rn});
        r = rn;
      }
      panels.push_back({b - (b - lo) * r, b});
    } else {
      panels.push_back({lo, hi});
    }
  }
  return panels;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, bool grade_a, bool grade_b,
                              int depth) {
  if (!(tol > 0)) throw DomainError("integrate_adaptive: tol must be > 0");
  const auto& rule = gauss_legendre(16);
  int uniform = 8;
  double prev = integrate_panels(f, graded_panels(a, b, uniform, depth, grade_a, grade_b), rule);
  double err = 0.0;
  for (int round = 0; round < 10; ++round) {
    uniform *= 2;
    const double cur =
        integrate_panels(f, graded_panels(a, b, uniform, depth, grade_a, grade_b), rule);
    err = std::fabs(cur - prev);
    if (err <= tol) return {cur, err};
    prev = cur;
  }
  throw NumericalError("integrate_adaptive: no convergence on [" + std::to_string(a) +
                           ", " + std::to_string(b) + "]",
                       prev, err);
}

}  // namespace logenergy
