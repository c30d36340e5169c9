#pragma once

// Mean empirical spectral densities of GUE, complex Ginibre and LUE at finite
// n, each in two algebraically distinct forms, plus a few reference laws.

#include <functional>
#include <string>
#include <vector>

#include "logenergy/specfun.hpp"

namespace logenergy {

/// A probability density on an interval of the real line.
///
/// `lo`/`hi` are the effective integration limits. When the true support is
/// unbounded on a side, the limit is a numerical cutoff where the density has
/// fallen below 1e-16 of its peak and `tail_mass` bounds the discarded mass.
/// Bounded sides are treated as possible singular endpoints by quadrature.
struct Density1D {
  std::function<double(double)> eval;
  double lo = 0.0;
  double hi = 0.0;
  bool lo_bounded = true;
  bool hi_bounded = true;
  double tail_mass = 0.0;
  std::string label;

  double operator()(double x) const { return (x < lo || x > hi) ? 0.0 : eval(x); }
};

/// Rotation-invariant planar density given by its radial profile rho(|z|);
/// the density of |z| is 2 pi r rho(r).
struct RadialDensity2D {
  std::function<double(double)> profile;
  double cutoff = 0.0;
  bool cutoff_is_edge = false;  // true when the profile jumps to zero at the cutoff
  double tail_mass = 0.0;
  std::string label;

  double operator()(double r) const { return r > cutoff ? 0.0 : profile(r); }
};

/// GUE level density from the weighted Hermite-square sum; `scaled` applies
/// the sqrt(n/2) dilation giving the mean ESD of the normalized GUE.
Density1D gue_density(unsigned n, bool scaled);

/// Unscaled GUE level density as a combination of even Hermite polynomials.
Density1D gue_density_feldheim(unsigned n);

/// Ginibre level density from the truncated exponential series; `scaled`
/// applies the sqrt(n) dilation of the plane.
RadialDensity2D ginibre_density(unsigned n, bool scaled);

/// Unscaled Ginibre profile through the incomplete gamma function,
/// Gamma(n, r^2) / ((n-1)! n pi). Cross-check of ginibre_density.
RadialDensity2D ginibre_density_gamma_form(unsigned n);

/// LUE level density from the Laguerre-square sum; `scaled` applies the
/// n dilation.
Density1D lue_density(unsigned n, bool scaled);

/// Unscaled LUE level density as a combination of L_{2k}(2s).
Density1D lue_density_howell(unsigned n);

/// Coefficients p_k = 2 (-1)^{n-k} C(n-1,k) binom(k-1/2, n), k < n.
std::vector<Rational> lue_howell_coefficients(unsigned n);

/// Coefficients C(n,k+1)/(2^k k!) of h_{2k} in the GUE density, k < n.
std::vector<Rational> gue_feldheim_coefficients(unsigned n);

// Reference laws.
Density1D semicircle_density();
Density1D marchenko_pastur_density();
Density1D uniform_density(double a, double b);
Density1D standard_normal_density();
Density1D exponential_density();
RadialDensity2D unit_disk_density();

/// Law of c X for X ~ density.
Density1D dilate(const Density1D& density, double c);

/// p-th absolute moment by adaptive quadrature (tolerance 1e-9).
/// Throws NumericalError on non-convergence.
double moment(const Density1D& density, int p);
double moment(const RadialDensity2D& density, int p);

/// Total mass; used by normalization checks.
double total_mass(const Density1D& density);
double total_mass(const RadialDensity2D& density);

}  // namespace logenergy
