#include "logenergy/logenergy.hpp"

#include <cmath>
#include <numbers>

#include "logenergy/errors.hpp"
#include "logenergy/specfun.hpp"

namespace logenergy {

namespace {

constexpr int kMaxDoublings = 4;

struct Pass {
  double value;
  double tail_error;  // truncation and neglected-region bound for this pass
};

template <class Compute>
EnergyEstimate refine(Compute&& compute, const QuadSpec& quad, const char* who) {
  validate(quad);
  int panels = quad.panel_count;
  Pass coarse = compute(panels);
  Pass fine = compute(2 * panels);
  double err = std::fabs(fine.value - coarse.value) + fine.tail_error;
  for (int round = 0; err > quad.target_tol; ++round) {
    if (round == kMaxDoublings) {
      throw NumericalError(std::string(who) + ": target tolerance not reached",
                           fine.value, err);
    }
    panels *= 2;
    coarse = fine;
    fine = compute(2 * panels);
    err = std::fabs(fine.value - coarse.value) + fine.tail_error;
  }
  return {fine.value, err, 2 * panels};
}

// Bound on the energy change caused by dropping `mass` of probability that
// sits at distance <= `span` from the rest.
double truncation_error(double mass, double span) {
  return 2.0 * mass * (1.0 + std::fabs(std::log(span)) + span);
}

int scaled_count(int panels, double part, double whole) {
  return std::max(1, static_cast<int>(std::ceil(panels * part / whole)));
}

}  // namespace

void validate(const QuadSpec& quad) {
  if (quad.panel_count < 1) throw DomainError("QuadSpec: panel_count must be >= 1");
  if (quad.nodes_per_panel < 1) throw DomainError("QuadSpec: nodes_per_panel must be >= 1");
  if (!(quad.target_tol > 0)) throw DomainError("QuadSpec: target_tol must be > 0");
  if (quad.diagonal_refinement_depth < 0 || quad.diagonal_refinement_depth > 30) {
    throw DomainError("QuadSpec: diagonal_refinement_depth must be in [0, 30]");
  }
}

EnergyEstimate log_energy_1d_estimate(const Density1D& density, const QuadSpec& quad) {
  const double lo = density.lo;
  const double hi = density.hi;
  const double width = hi - lo;
  if (!(width > 0)) throw DomainError("log_energy_1d: empty support");
  const int depth = quad.diagonal_refinement_depth;
  auto compute = [&](int panels) -> Pass {
    const auto& rule = gauss_legendre(quad.nodes_per_panel);
    const auto outer =
        graded_panels(lo, hi, panels, depth, density.lo_bounded, density.hi_bounded);
    auto outer_integrand = [&](double x) {
      const double fx = density(x);
      if (fx == 0.0) return 0.0;
      // int_x^hi log(y - x) f(y) dy in the offset variable u = y - x
      const double span = hi - x;
      if (!(span > 0)) return 0.0;
      const auto inner = graded_panels(0.0, span, scaled_count(panels, span, width), depth,
                                       true, density.hi_bounded);
      const double inner_value = integrate_panels(
          [&](double u) { return std::log(u) * density(x + u); }, inner, rule);
      return fx * inner_value;
    };
    const double half = integrate_panels(outer_integrand, outer, rule);
    return {-2.0 * half, truncation_error(density.tail_mass, width)};
  };
  return refine(compute, quad, "log_energy_1d");
}

double log_energy_1d(const Density1D& density, const QuadSpec& quad) {
  return log_energy_1d_estimate(density, quad).value;
}

double log_potential(const Density1D& density, double x, const QuadSpec& quad) {
  validate(quad);
  const auto& rule = gauss_legendre(quad.nodes_per_panel);
  const int depth = quad.diagonal_refinement_depth;
  const double width = density.hi - density.lo;
  double total = 0.0;
  if (x > density.lo) {
    const double span = x - density.lo;
    const auto panels = graded_panels(0.0, span, scaled_count(quad.panel_count, span, width),
                                      depth, true, density.lo_bounded);
    total += integrate_panels([&](double u) { return std::log(u) * density(x - u); }, panels,
                              rule);
  }
  if (x < density.hi) {
    const double span = density.hi - x;
    const auto panels = graded_panels(0.0, span, scaled_count(quad.panel_count, span, width),
                                      depth, true, density.hi_bounded);
    total += integrate_panels([&](double u) { return std::log(u) * density(x + u); }, panels,
                              rule);
  }
  return total;
}

EnergyEstimate log_energy_radial_estimate(const RadialDensity2D& density,
                                          const QuadSpec& quad) {
  const double cutoff = density.cutoff;
  if (!(cutoff > 0)) throw DomainError("log_energy_radial: empty support");
  const int depth = quad.diagonal_refinement_depth;
  auto g = [&](double r) { return 2.0 * std::numbers::pi * r * density(r); };
  auto compute = [&](int panels) -> Pass {
    const auto& rule = gauss_legendre(quad.nodes_per_panel);
    const auto outer = graded_panels(0.0, cutoff, panels, depth, true, density.cutoff_is_edge);
    // The kernel log max(r, s) has a kink on r = s; inner panels end exactly
    // on the diagonal so every panel sees a smooth integrand.
    CompensatedSum total;
    CompensatedSum cumulative;  // int_0^{panel start} g
    for (const Panel& p : outer) {
      const double half = 0.5 * (p.b - p.a);
      const double mid = 0.5 * (p.a + p.b);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double s = mid + half * rule.nodes[i];
        const double gs = g(s);
        if (gs == 0.0) continue;
        const double partial = integrate_gl(g, p.a, s, rule);
        total += rule.weights[i] * half * gs * std::log(s) * (cumulative.value() + partial);
      }
      cumulative += integrate_gl(g, p.a, p.b, rule);
    }
    return {-2.0 * total.value(), truncation_error(density.tail_mass, 2.0 * cutoff)};
  };
  return refine(compute, quad, "log_energy_radial");
}

double log_energy_radial(const RadialDensity2D& density, const QuadSpec& quad) {
  return log_energy_radial_estimate(density, quad).value;
}

EnergyEstimate exp_weight_energy_estimate(const Density1D& density, double p,
                                          const QuadSpec& quad) {
  if (!(p == 1.0 || p == 2.0)) throw DomainError("exp_weight_energy: p must be 1 or 2");
  const double lo = density.lo;
  const double hi = density.hi;
  const double width = hi - lo;
  if (!(width > 0)) throw DomainError("exp_weight_energy: empty support");
  const int depth = quad.diagonal_refinement_depth;
  const bool both_bounded = density.lo_bounded && density.hi_bounded;
  auto compute = [&](int panels) -> Pass {
    const auto& rule = gauss_legendre(quad.nodes_per_panel);
    // Autocorrelation A(d) = int f(x) f(x + d) dx on a grid graded toward d = 0,
    // so iint exp(-t|x-y|^p) = 2 int_0^width exp(-t d^p) A(d) dd for every t.
    const auto dpanels = graded_panels(0.0, width, panels, depth, true, both_bounded);
    std::vector<double> dnode;
    std::vector<double> dweight;
    for (const Panel& pan : dpanels) {
      const double half = 0.5 * (pan.b - pan.a);
      const double mid = 0.5 * (pan.a + pan.b);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double d = mid + half * rule.nodes[i];
        const double span = width - d;
        const auto xpanels = graded_panels(lo, hi - d, scaled_count(panels, span, width),
                                           depth, density.lo_bounded, density.hi_bounded);
        const double a =
            integrate_panels([&](double x) { return density(x) * density(x + d); }, xpanels,
                             rule);
        dnode.push_back(std::pow(d, p));
        dweight.push_back(2.0 * rule.weights[i] * half * a);
      }
    }
    auto overlap = [&](double t) {
      CompensatedSum s;
      for (std::size_t j = 0; j < dnode.size(); ++j) s += dweight[j] * std::exp(-t * dnode[j]);
      return s.value();
    };
    // t in (0, 1]: integrand is smooth at t = 0
    const auto tpanels = graded_panels(0.0, 1.0, 16, 0, false, false);
    const double near = integrate_panels(
        [&](double t) { return (1.0 / (1.0 + t) - overlap(t)) / t; }, tpanels, rule);
    // t in [1, inf) via t = 1/u; overlap(1/u) ~ c u^{1/p} as u -> 0
    const int udepth = std::max(depth, 20);
    auto upanels = graded_panels(0.0, 1.0, 16, udepth, true, false);
    const double u0 = upanels.front().b;
    upanels.erase(upanels.begin());
    const double far = integrate_panels(
        [&](double u) { return (u / (1.0 + u) - overlap(1.0 / u)) / u; }, upanels, rule);
    const double neglected = u0 - p * overlap(1.0 / u0);
    const double value = kEulerGamma / p - (near + far + neglected) / p;
    return {value, std::fabs(neglected) / p + truncation_error(density.tail_mass, width)};
  };
  return refine(compute, quad, "exp_weight_energy");
}

double exp_weight_energy(const Density1D& density, double p, const QuadSpec& quad) {
  return exp_weight_energy_estimate(density, p, quad).value;
}

}  // namespace logenergy
