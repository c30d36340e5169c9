#pragma once

// Composite Gauss-Legendre machinery with geometric grading toward
// endpoints or interior singular points.

#include <functional>
#include <vector>

#include "logenergy/specfun.hpp"

namespace logenergy {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order; cached, safe to call concurrently.
const GaussLegendreRule& gauss_legendre(int order);

struct Panel {
  double a;
  double b;
};

/// Geometric grading ratio for panels approaching a singular point.
inline constexpr double kGradingRatio = 0.15;

/// Splits [a, b] into `uniform` equal panels, then replaces the first and/or
/// last panel by `depth` geometrically graded panels (ratio kGradingRatio)
/// accumulating at a and/or b.
std::vector<Panel> graded_panels(double a, double b, int uniform, int depth,
                                 bool grade_a, bool grade_b);

/// Sum of f over the composite rule on the given panels.
template <class F>
double integrate_panels(F&& f, const std::vector<Panel>& panels,
                        const GaussLegendreRule& rule) {
  CompensatedSum s;
  for (const Panel& p : panels) {
    const double half = 0.5 * (p.b - p.a);
    const double mid = 0.5 * (p.a + p.b);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      s += rule.weights[i] * half * f(mid + half * rule.nodes[i]);
    }
  }
  return s.value();
}

template <class F>
double integrate_gl(F&& f, double a, double b, const GaussLegendreRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  CompensatedSum s;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * s.value();
}

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

/// Composite graded Gauss-Legendre integration of f on [a, b] with panel
/// doubling until two successive estimates agree to `tol` (absolute).
/// Throws NumericalError with the best estimate when the budget runs out.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol, bool grade_a = true,
                              bool grade_b = true, int depth = 20);

}  // namespace logenergy
