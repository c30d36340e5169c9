#pragma once
// Dense eigenvalue solvers: Householder tridiagonalization with implicit QL
// for Hermitian matrices, Hessenberg reduction with shifted complex QR for
// general square matrices.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "logenergy/errors.hpp"

namespace logenergy {

template <typename Real>
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <typename Real>
using VectorC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using MatrixC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// off-diagonal `e` (length n - 1), ascending.
template <typename Real>
VectorR<Real> eig_tridiagonal(VectorR<Real> d, const VectorR<Real>& e) {
  using std::abs;
  using Eigen::Index;
  const Index n = d.size();
  if (n == 0) throw DomainError("eig_tridiagonal: empty matrix");
  if (e.size() != n - 1) throw DomainError("eig_tridiagonal: off-diagonal must have length n - 1");
  const Real eps = std::numeric_limits<Real>::epsilon();
  VectorR<Real> f(n);
  f.head(n - 1) = e;
  f(n - 1) = 0;

  for (Index l = 0; l < n; ++l) {
    int iter = 0;
    Index m;
    do {
      for (m = l; m < n - 1; ++m) {
        const Real dd = abs(d(m)) + abs(d(m + 1));
        if (abs(f(m)) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == 50) throw NumericalError("eig_tridiagonal: no convergence after 50 sweeps", d(l), abs(f(l)));
      Real g = (d(l + 1) - d(l)) / (2 * f(l));
      Real r = std::hypot(g, Real(1));
      g = d(m) - d(l) + f(l) / (g + std::copysign(r, g));
      Real s = 1, c = 1, p = 0;
      Index i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        const Real a = s * f(i);
        const Real b = c * f(i);
        r = std::hypot(a, g);
        f(i + 1) = r;
        if (r == 0) {
          d(i + 1) -= p;
          f(m) = 0;
          underflow = true;
          break;
        }
        s = a / r;
        c = g / r;
        g = d(i + 1) - p;
        r = (d(i) - g) * s + 2 * c * b;
        p = s * r;
        d(i + 1) = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d(l) -= p;
      f(l) = g;
      f(m) = 0;
    } while (true);
  }
  std::sort(d.data(), d.data() + n);
  return d;
}

/// Eigenvalues of a Hermitian (or real symmetric) matrix, ascending.
/// Throws DomainError when the input is not Hermitian to 1e-12 relative.
template <typename Derived>
VectorR<typename Eigen::NumTraits<typename Derived::Scalar>::Real> eig_hermitian(
    const Eigen::MatrixBase<Derived>& input) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using C = std::complex<Real>;
  using Eigen::Index;
  const Index n = input.rows();
  if (n == 0 || input.cols() != n) throw DomainError("eig_hermitian: matrix must be square and nonempty");
  MatrixC<Real> a = input.template cast<C>();
  if ((a - a.adjoint()).norm() > Real(1e-12) * a.norm())
    throw DomainError("eig_hermitian: matrix is not Hermitian");
  a = (a + a.adjoint()).eval() / Real(2);

  for (Index k = 0; k + 2 < n; ++k) {
    const Index m = n - k - 1;
    VectorC<Real> v = a.col(k).tail(m);
    const Real xnorm = v.norm();
    if (xnorm == 0) continue;
    const Real ax0 = std::abs(v(0));
    const C phase = ax0 == 0 ? C(1) : v(0) / ax0;
    const C alpha = -phase * xnorm;
    v(0) -= alpha;
    const Real tau = Real(2) / v.squaredNorm();
    auto block = a.bottomRightCorner(m, m);
    const VectorC<Real> p = tau * (block * v);
    const C K = (tau / 2) * v.dot(p);
    const VectorC<Real> q = p - K * v;
    block -= v * q.adjoint() + q * v.adjoint();
    a.col(k).tail(m).setZero();
    a.row(k).tail(m).setZero();
    a(k + 1, k) = alpha;
    a(k, k + 1) = std::conj(alpha);
  }

  VectorR<Real> d(n), e(n - 1);
  for (Index i = 0; i < n; ++i) d(i) = a(i, i).real();
  for (Index i = 0; i + 1 < n; ++i) e(i) = std::abs(a(i + 1, i));
  return eig_tridiagonal<Real>(std::move(d), e);
}

/// Eigenvalues of a general square matrix, in the order they deflate.
/// Throws NumericalError after 100 n QR iterations.
template <typename Derived>
VectorC<typename Eigen::NumTraits<typename Derived::Scalar>::Real> eig_complex(
    const Eigen::MatrixBase<Derived>& input) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using C = std::complex<Real>;
  using Eigen::Index;
  using std::abs;
  const Index n = input.rows();
  if (n == 0 || input.cols() != n) throw DomainError("eig_complex: matrix must be square and nonempty");
  MatrixC<Real> h = input.template cast<C>();
  const Real eps = std::numeric_limits<Real>::epsilon();

  // Hessenberg form
  for (Index k = 0; k + 2 < n; ++k) {
    const Index m = n - k - 1;
    VectorC<Real> v = h.col(k).tail(m);
    const Real xnorm = v.norm();
    if (xnorm == 0) continue;
    const Real ax0 = abs(v(0));
    const C phase = ax0 == 0 ? C(1) : v(0) / ax0;
    const C alpha = -phase * xnorm;
    v(0) -= alpha;
    const Real tau = Real(2) / v.squaredNorm();
    auto lower = h.bottomRightCorner(m, n - k);
    lower -= (tau * v) * (v.adjoint() * lower);
    auto right = h.rightCols(m);
    right -= (tau * (right * v)) * v.adjoint();
    h.col(k).tail(m).setZero();
    h(k + 1, k) = alpha;
  }

  const Real hnorm = h.norm();
  VectorC<Real> lambda(n);
  Index hi = n - 1;
  long total = 0;
  int its = 0;
  std::vector<C> gc(n), gs(n);
  while (hi >= 0) {
    if (hi == 0) {
      lambda(0) = h(0, 0);
      break;
    }
    Index l = hi;
    for (; l > 0; --l) {
      Real s = abs(h(l, l)) + abs(h(l - 1, l - 1));
      if (s == 0) s = hnorm;
      if (abs(h(l, l - 1)) <= eps * s) {
        h(l, l - 1) = 0;
        break;
      }
    }
    if (l == hi) {
      lambda(hi) = h(hi, hi);
      --hi;
      its = 0;
      continue;
    }
    if (++total > 100 * n) throw NumericalError("eig_complex: no convergence", abs(h(hi, hi)), abs(h(hi, hi - 1)));
    ++its;

    C sigma;
    if (its % 10 == 0) {
      sigma = h(hi, hi) + Real(0.75) * abs(h(hi, hi - 1));
    } else {
      const C a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
      const C half = (a - d) / Real(2);
      const C disc = std::sqrt(half * half + b * c);
      const C mu1 = (a + d) / Real(2) + disc;
      const C mu2 = (a + d) / Real(2) - disc;
      sigma = abs(mu1 - d) < abs(mu2 - d) ? mu1 : mu2;
    }

    for (Index j = l; j <= hi; ++j) h(j, j) -= sigma;
    for (Index k = l; k < hi; ++k) {
      const C x = h(k, k), y = h(k + 1, k);
      const Real r = std::hypot(abs(x), abs(y));
      if (r == 0) {
        gc[k] = 1;
        gs[k] = 0;
        continue;
      }
      gc[k] = x / r;
      gs[k] = y / r;
      for (Index j = k; j <= hi; ++j) {
        const C u = h(k, j), w = h(k + 1, j);
        h(k, j) = std::conj(gc[k]) * u + std::conj(gs[k]) * w;
        h(k + 1, j) = -gs[k] * u + gc[k] * w;
      }
    }
    for (Index k = l; k < hi; ++k) {
      for (Index i = l; i <= std::min(k + 2, hi); ++i) {
        const C u = h(i, k), w = h(i, k + 1);
        h(i, k) = u * gc[k] + w * gs[k];
        h(i, k + 1) = -u * std::conj(gs[k]) + w * std::conj(gc[k]);
      }
    }
    for (Index j = l; j <= hi; ++j) h(j, j) += sigma;
  }
  return lambda;
}

}  // namespace logenergy
