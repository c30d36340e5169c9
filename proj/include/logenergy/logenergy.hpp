#pragma once

// Logarithmic energy E(mu) = -iint log|x - y| mu(dx) mu(dy) of 1D densities
// and rotation-invariant planar densities by singular-kernel quadrature.

#include "logenergy/density.hpp"
#include "logenergy/penalty.hpp"
#include "logenergy/quadrature.hpp"

namespace logenergy {

struct QuadSpec {
  int panel_count = 64;        // uniform panels per axis before refinement
  int nodes_per_panel = 16;    // Gauss-Legendre order
  double target_tol = 1e-7;
  int diagonal_refinement_depth = 20;
};

/// Checks the QuadSpec invariants; throws DomainError.
void validate(const QuadSpec& quad);

struct EnergyEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  int panel_count_used = 0;
};

/// Integrates over x < y and doubles; the inner log-singular integral is
/// refined geometrically toward y = x. Panels are doubled until the Richardson
/// difference plus truncated-tail bound is below target_tol.
/// Throws NumericalError carrying the best estimate when the budget runs out.
EnergyEstimate log_energy_1d_estimate(const Density1D& density, const QuadSpec& quad = {});
double log_energy_1d(const Density1D& density, const QuadSpec& quad = {});

/// Planar log energy of a radial density. Angular integration is exact:
/// E = -iint log max(r, s) g(r) g(s) dr ds with g(r) = 2 pi r rho(r).
EnergyEstimate log_energy_radial_estimate(const RadialDensity2D& density,
                                          const QuadSpec& quad = {});
double log_energy_radial(const RadialDensity2D& density, const QuadSpec& quad = {});

/// Exponential-weight representation with p in {1, 2}:
/// E = gamma/p - (1/p) int_0^inf dt/t (1/(1+t) - iint exp(-t|x-y|^p)).
EnergyEstimate exp_weight_energy_estimate(const Density1D& density, double p,
                                          const QuadSpec& quad = {});
double exp_weight_energy(const Density1D& density, double p, const QuadSpec& quad = {});

/// Log potential U(x) = int log|x - y| f(y) dy, singularity at y = x handled
/// by graded panels on both sides.
double log_potential(const Density1D& density, double x, const QuadSpec& quad = {});

}  // namespace logenergy
