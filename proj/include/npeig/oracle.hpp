#pragma once

// Brute-force eigenvalues from the boundary kernel of (K^k)*.
//
// On the unit sphere the kernel dG_k(x - y)/dnu_x depends only on t = x.y.
// With r = |x - y| = sqrt(2 - 2t) and (x - y).x = r^2/2,
//
//   f(t) = -exp(ikr) (ikr - 1) / (8 pi r),
//
// and by Funk-Hecke the eigenvalue on Y_n^m is 2 pi int f(t) P_n(t) dt. The
// substitution u = r turns this into the smooth integral
//
//   -1/4 int_0^2 exp(iku) (iku - 1) P_n(1 - u^2/2) du.
//
// On the unit circle, with r = 2|sin(theta/2)|, the kernel is
// (ik/8) r H_1(kr), bounded with limit 1/(4 pi) at theta = 0, and the
// eigenvalue on e^{in theta} is its n-th Fourier coefficient. That kernel
// carries an r^2 log r term, so the periodic trapezoid rule converges only
// algebraically.
//
// The kernels are smooth-boundary principal values, i.e. ordinary weakly
// singular integrals; this is not a general p.v. evaluator.

#include <array>
#include <cmath>
#include <numbers>

#include "npeig/errors.hpp"
#include "npeig/quadrature.hpp"
#include "npeig/record.hpp"
#include "npeig/specfun.hpp"

namespace npeig {

struct OracleOptions {
  int sphere_nodes = 128;   // Gauss-Legendre points on [0, 2]
  int circle_nodes = 4096;  // half-shifted trapezoid points on [0, 2 pi)
};

namespace detail {

// r f(r) for the sphere kernel.
inline Complex sphere_kernel_times_distance(double r, double k) {
  const Complex ikr(0.0, k * r);
  return -std::exp(ikr) * (ikr - 1.0) / (8.0 * std::numbers::pi);
}

}  // namespace detail

/// NP kernel on the unit sphere as a function of t = x.y, t in [-1, 1).
inline Complex np_kernel_sphere(double t, double k) {
  if (!(t >= -1.0 && t < 1.0)) detail::throw_domain("np_kernel_sphere", "t must lie in [-1, 1)");
  detail::check_wavenumber(k, false, "np_kernel_sphere");
  const double r = std::sqrt(2.0 - 2.0 * t);
  return detail::sphere_kernel_times_distance(r, k) / r;
}

/// NP kernel on the unit circle as a function of the angle between x and y.
inline Complex np_kernel_circle(double theta, double k) {
  if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi)) {
    detail::throw_domain("np_kernel_circle", "theta must lie in (0, 2 pi)");
  }
  detail::check_wavenumber(k, false, "np_kernel_circle");
  const double r = 2.0 * std::abs(std::sin(0.5 * theta));
  return Complex(0.0, k / 8.0) * r * cyl_h1(1, k * r);
}

/// Ball eigenvalue by Gauss quadrature of the sphere kernel.
inline Complex tau_oracle(int n, double k, const OracleOptions& opt = {}) {
  detail::check_order(n, kDefaultMaxOrder, "tau_oracle");
  detail::check_wavenumber(k, false, "tau_oracle");
  const QuadratureRule& rule = cached_gauss_legendre(opt.sphere_nodes);
  const Complex integral = rule.integrate(
      [&](double u) {
        return detail::sphere_kernel_times_distance(u, k) * legendre_p(n, 1.0 - 0.5 * u * u);
      },
      0.0, 2.0);
  return 2.0 * std::numbers::pi * integral;
}

/// Disk eigenvalue as the Fourier coefficient of the circle kernel.
/// The kernel is even in theta, so paired nodes theta and 2 pi - theta
/// contribute 2 K(theta) cos(n theta).
inline Complex kappa_oracle(int n, double k, const OracleOptions& opt = {}) {
  detail::check_order(n, kDefaultMaxOrder, "kappa_oracle");
  detail::check_wavenumber(k, false, "kappa_oracle");
  if (opt.circle_nodes < 2 || opt.circle_nodes % 2 != 0) {
    detail::throw_domain("kappa_oracle", "circle node count must be even and >= 2");
  }
  const int nodes = opt.circle_nodes;
  const double h = 2.0 * std::numbers::pi / nodes;
  Complex sum;
  for (int j = 0; j < nodes / 2; ++j) {
    const double theta = (j + 0.5) * h;
    sum += 2.0 * np_kernel_circle(theta, k) * std::cos(n * theta);
  }
  return sum * h;
}

/// Radiating fundamental solution of the Helmholtz operator in 3D.
inline Complex green_3d(const std::array<double, 3>& x, double k) {
  const double r = std::hypot(x[0], x[1], x[2]);
  return -std::exp(Complex(0.0, k * r)) / (4.0 * std::numbers::pi * r);
}

/// Radiating fundamental solution of the Helmholtz operator in 2D.
inline Complex green_2d(const std::array<double, 2>& x, double k) {
  const double r = std::hypot(x[0], x[1]);
  return Complex(0.0, -0.25) * cyl_h1(0, k * r);
}

}  // namespace npeig
