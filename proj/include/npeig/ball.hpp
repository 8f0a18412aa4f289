#pragma once

// Eigenvalues tau_{n,k} of the Neumann-Poincare operator (K_B^k)* on the unit
// ball, where (K_B^k)*[Y_n^m] = tau_{n,k} Y_n^m for every degree m.
//
// Three closed forms are provided; they agree through the Wronskian
// j_n' h_n - j_n h_n' = -i/t^2 and through the splitting of (K_B^k)* into the
// single layer potential and the smooth exponential kernel:
//
//   A:  -1/2 - i k^2 j_n(k) h_n'(k)
//   B:   1/2 - i k^2 j_n'(k) h_n(k)
//   C:  (ik/2) (j_n(k) h_n(k) + c_{n,k})
//
// A ball of radius R has the spectrum of the unit ball at wavenumber kR.

#include <cmath>

#include "npeig/errors.hpp"
#include "npeig/quadrature.hpp"
#include "npeig/record.hpp"
#include "npeig/specfun.hpp"

namespace npeig {

/// Static eigenvalue 1/(2(2n+1)); also the k -> 0 limit of every form.
inline double tau_static(int n) {
  detail::check_order(n, kDefaultMaxOrder, "tau_static");
  return 1.0 / (2.0 * (2.0 * n + 1.0));
}

inline Complex tau_form_a(int n, double k) {
  detail::check_wavenumber(k, false, "tau_form_a");
  const Complex i(0.0, 1.0);
  return -0.5 - i * k * k * sph_j(n, k) * sph_h1_prime(n, k);
}

inline Complex tau_form_b(int n, double k) {
  detail::check_wavenumber(k, false, "tau_form_b");
  const Complex i(0.0, 1.0);
  return 0.5 - i * k * k * sph_j_prime(n, k) * sph_h1(n, k);
}

inline Complex tau_form_c(int n, double k) {
  detail::check_wavenumber(k, false, "tau_form_c");
  const Complex i(0.0, 1.0);
  return 0.5 * i * k * (sph_j(n, k) * sph_h1(n, k) + c_nk(n, k).value);
}

/// Leading part tau^(0) = 1/(2(2n+1)) + (i/2) k c_{n,k} of the large-n expansion.
inline Complex tau_leading(int n, double k) {
  detail::check_wavenumber(k, true, "tau_leading");
  return tau_static(n) + Complex(0.0, 0.5 * k) * c_nk(n, k).value;
}

/// Eigenvalue of the ball of the given radius by the requested method.
/// Forms A, B and C return the static value when k * radius = 0.
inline EigenRecord evaluate_ball(int n, double k, double radius, Method method) {
  detail::check_wavenumber(k, true, "evaluate_ball");
  detail::check_radius(radius, "evaluate_ball");
  detail::check_order(n, kDefaultMaxOrder, "evaluate_ball");
  const double kr = k * radius;
  EigenRecord rec{3, n, k, radius, {}, method};
  switch (method) {
    case Method::FormA:
    case Method::FormB:
    case Method::FormC:
    case Method::StaticLimit:
      if (kr == 0.0) {
        rec.value = tau_static(n);
        rec.method = Method::StaticLimit;
        return rec;
      }
      if (method == Method::StaticLimit) detail::throw_domain("evaluate_ball", "static limit requires k = 0");
      rec.value = method == Method::FormA ? tau_form_a(n, kr)
                  : method == Method::FormB ? tau_form_b(n, kr)
                                            : tau_form_c(n, kr);
      return rec;
    case Method::Leading:
      rec.value = tau_leading(n, kr);
      return rec;
    default:
      detail::throw_domain("evaluate_ball", "method not available for the ball");
  }
}

/// tau_{n,k} for a ball of the given radius, by form B.
inline EigenRecord tau(int n, double k, double radius = 1.0) {
  return evaluate_ball(n, k, radius, Method::FormB);
}

/// Denominator tolerance below which the Hankel identity is reported as
/// near-singular instead of evaluated.
inline constexpr double kHankelIdentityDenominatorTol = 1e-8;

/// Outcome of checking h_n(k) = (1 - ik c_{n,k}) / (ik (j_n(k) + 2k j_n'(k))).
struct HankelIdentityCheck {
  double residual = 0.0;     // |lhs - rhs|; 0 when near_singular
  double relative = 0.0;     // residual / |h_n(k)|
  double denominator = 0.0;  // |ik (j_n + 2k j_n')|
  bool near_singular = false;
};

/// j_n(k) + 2k j_n'(k); its zeros are where the Hankel identity degenerates.
inline double hankel_identity_denominator(int n, double k) {
  return sph_j(n, k) + 2.0 * k * sph_j_prime(n, k);
}

inline HankelIdentityCheck hankel_identity_residual(int n, double k) {
  detail::check_wavenumber(k, false, "hankel_identity_residual");
  const Complex i(0.0, 1.0);
  const Complex denominator = i * k * hankel_identity_denominator(n, k);
  HankelIdentityCheck out;
  out.denominator = std::abs(denominator);
  if (out.denominator <= kHankelIdentityDenominatorTol) {
    out.near_singular = true;
    return out;
  }
  const Complex rhs = (1.0 - i * k * c_nk(n, k).value) / denominator;
  const Complex h = sph_h1(n, k);
  out.residual = std::abs(h - rhs);
  out.relative = out.residual / std::abs(h);
  return out;
}

}  // namespace npeig
