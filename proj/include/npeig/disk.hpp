#pragma once

// Eigenvalues kappa_{n,k} of (K_Q^k)* on the unit disk,
// (K_Q^k)*[e^{in theta}] = kappa_{n,k} e^{in theta}:
//
//   A:  -1/2 - (i pi / 2) k J_n(k) H_n'(k)
//   B:   1/2 - (i pi / 2) k J_n'(k) H_n(k)
//
// Only n >= 0 is exposed; kappa_{-n,k} = kappa_{n,k}.

#include <cmath>
#include <numbers>

#include "npeig/errors.hpp"
#include "npeig/record.hpp"
#include "npeig/specfun.hpp"

namespace npeig {

/// k = 0 value: 1/2 on the constant mode, 0 otherwise.
inline double kappa_static(int n) {
  detail::check_order(n, kDefaultMaxOrder, "kappa_static");
  return n == 0 ? 0.5 : 0.0;
}

inline Complex kappa_form_a(int n, double k) {
  detail::check_wavenumber(k, false, "kappa_form_a");
  const Complex half_i_pi(0.0, 0.5 * std::numbers::pi);
  return -0.5 - half_i_pi * k * cyl_j(n, k) * cyl_h1_prime(n, k);
}

inline Complex kappa_form_b(int n, double k) {
  detail::check_wavenumber(k, false, "kappa_form_b");
  const Complex half_i_pi(0.0, 0.5 * std::numbers::pi);
  return 0.5 - half_i_pi * k * cyl_j_prime(n, k) * cyl_h1(n, k);
}

/// Large-order leading term -k^2 / (4 n (n-1) (n+1)); defined for n >= 2.
inline Complex kappa_large_n(int n, double k) {
  if (n < 2) detail::throw_domain("kappa_large_n", "order must be >= 2");
  detail::check_order(n, kDefaultMaxOrder, "kappa_large_n");
  detail::check_wavenumber(k, true, "kappa_large_n");
  const double nn = n;
  return -k * k / (4.0 * nn * (nn - 1.0) * (nn + 1.0));
}

/// Small-k expansion 1/2 - (k^2/2) ln(k/2) of kappa_{0,k}; requires 0 < k < 1.
inline Complex kappa_smallk_n0(double k) {
  if (!(k > 0.0 && k < 1.0)) detail::throw_domain("kappa_smallk_n0", "expansion needs 0 < k < 1");
  return 0.5 - 0.5 * k * k * std::log(0.5 * k);
}

/// Eigenvalue of the disk of the given radius by the requested method.
inline EigenRecord evaluate_disk(int n, double k, double radius, Method method) {
  detail::check_wavenumber(k, true, "evaluate_disk");
  detail::check_radius(radius, "evaluate_disk");
  detail::check_order(n, kDefaultMaxOrder, "evaluate_disk");
  const double kr = k * radius;
  EigenRecord rec{2, n, k, radius, {}, method};
  switch (method) {
    case Method::FormA:
    case Method::FormB:
    case Method::StaticLimit:
      if (kr == 0.0) {
        rec.value = kappa_static(n);
        rec.method = Method::StaticLimit;
        return rec;
      }
      if (method == Method::StaticLimit) detail::throw_domain("evaluate_disk", "static limit requires k = 0");
      rec.value = method == Method::FormA ? kappa_form_a(n, kr) : kappa_form_b(n, kr);
      return rec;
    case Method::LargeNAsymptotic:
      rec.value = kappa_large_n(n, kr);
      return rec;
    case Method::SmallKExpansion:
      if (n != 0) detail::throw_domain("evaluate_disk", "small-k expansion exists for n = 0 only");
      rec.value = kappa_smallk_n0(kr);
      return rec;
    default:
      detail::throw_domain("evaluate_disk", "method not available for the disk");
  }
}

/// kappa_{n,k} for a disk of the given radius, by form B.
inline EigenRecord kappa(int n, double k, double radius = 1.0) {
  return evaluate_disk(n, k, radius, Method::FormB);
}

}  // namespace npeig
