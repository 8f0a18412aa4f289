#pragma once

// Spherical and cylindrical Bessel, Neumann and Hankel functions of integer
// order and non-negative real argument, plus Legendre polynomials.
//
// Regimes:
//   j_n, J_n   ascending power series while the series terms decrease from
//              the first one (t^2 <= 2n+5 resp. t^2 <= 2(n+2)); otherwise
//              Miller's downward recurrence. Spherical values are normalized
//              against whichever of j_0 = sin t / t and j_1 is larger in
//              magnitude, cylindrical ones against J_0 + 2 sum J_2k = 1.
//   y_n        upward recurrence from the closed forms of y_0 and y_1.
//   Y_n        Y_0 and Y_1 from the Neumann series in the Miller values of
//              J_2k, then upward recurrence.
//
// Derivatives use f_n' = f_{n-1} - (n+1)/t f_n (spherical) and
// F_n' = F_{n-1} - n/t F_n (cylindrical), with f_0' = -f_1 and F_0' = -F_1.
// All functions are pure and thread-safe.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "npeig/errors.hpp"

namespace npeig {

using Complex = std::complex<double>;

/// Default cap on the mode order accepted by the evaluation routines.
inline constexpr int kDefaultMaxOrder = 200;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

namespace detail {

inline void check_order(int n, int max_order, const char* where) {
  if (n < 0) throw_domain(where, "negative order");
  if (n > max_order) throw OrderTooLarge(n, max_order);
}

inline void check_argument(double t, bool allow_zero, const char* where) {
  if (std::isnan(t) || t < 0.0) throw_domain(where, "argument must be non-negative");
  if (!allow_zero && t == 0.0) throw_domain(where, "singular at zero argument");
  if (std::isinf(t)) throw_domain(where, "argument must be finite");
}

// Rescaling threshold for the downward recurrences.
inline constexpr double kRescaleAbove = 1e200;
inline constexpr double kRescaleBy = 1e-200;

inline int miller_start(int hi, double t) {
  const double top = std::max(static_cast<double>(hi), std::ceil(t));
  return static_cast<int>(top) + 30 + static_cast<int>(2.0 * std::sqrt(top));
}

// Ascending series of j_n. Stops after three consecutive negligible terms.
inline double sph_j_series(int n, double t) {
  double lead = 1.0;
  for (int i = 1; i <= n; ++i) lead *= t / (2 * i + 1);
  if (lead == 0.0) return 0.0;
  const double half_t2 = 0.5 * t * t;
  double sum = lead;
  double term = lead;
  int negligible = 0;
  for (int l = 1; negligible < 3 && l < 1000; ++l) {
    term *= -half_t2 / (l * (2.0 * n + 2.0 * l + 1.0));
    sum += term;
    negligible = std::abs(term) <= 1e-17 * std::abs(sum) ? negligible + 1 : 0;
  }
  return sum;
}

// {j_lo, j_lo+1} for t > 0.
inline std::pair<double, double> sph_j_two(int lo, double t) {
  const int hi = lo + 1;
  if (t * t <= 2.0 * hi + 3.0) return {sph_j_series(lo, t), sph_j_series(hi, t)};

  const int start = miller_start(hi, t);
  double above = 0.0;  // f_{l+1}
  double cur = 1e-30;  // f_l
  double at_lo = 0.0;
  double at_hi = 0.0;
  for (int l = start; l >= 1; --l) {
    if (l == hi) at_hi = cur;
    if (l == lo) at_lo = cur;
    const double below = (2.0 * l + 1.0) / t * cur - above;
    above = cur;
    cur = below;
    if (std::abs(cur) > kRescaleAbove) {
      cur *= kRescaleBy;
      above *= kRescaleBy;
      at_lo *= kRescaleBy;
      at_hi *= kRescaleBy;
    }
  }
  if (lo == 0) at_lo = cur;

  const double s = std::sin(t);
  const double c = std::cos(t);
  const double j0 = s / t;
  const double j1 = s / (t * t) - c / t;
  const double scale = std::abs(j0) >= std::abs(j1) ? j0 / cur : j1 / above;
  return {at_lo * scale, at_hi * scale};
}

// {y_lo, y_lo+1} for t > 0.
inline std::pair<double, double> sph_y_two(int lo, double t, const char* where) {
  const double s = std::sin(t);
  const double c = std::cos(t);
  double prev = guard(-c / t, where);
  double cur = guard(-c / (t * t) - s / t, where);
  for (int l = 1; l <= lo; ++l) {
    const double next = guard((2.0 * l + 1.0) / t * cur - prev, where);
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

inline double cyl_j_series(int n, double t) {
  const double half = 0.5 * t;
  double lead = 1.0;
  for (int i = 1; i <= n; ++i) lead *= half / i;
  if (lead == 0.0) return 0.0;
  const double q = half * half;
  double sum = lead;
  double term = lead;
  int negligible = 0;
  for (int l = 1; negligible < 3 && l < 1000; ++l) {
    term *= -q / (static_cast<double>(l) * (n + l));
    sum += term;
    negligible = std::abs(term) <= 1e-17 * std::abs(sum) ? negligible + 1 : 0;
  }
  return sum;
}

struct CylMiller {
  double j_lo = 0.0;
  double j_hi = 0.0;
  double j0 = 0.0;
  double j1 = 0.0;
  double y0 = 0.0;
  double y1 = 0.0;
};

// Downward recurrence for J_m, normalized by J_0 + 2 sum J_2k = 1, with the
// Neumann series for Y_0 and Y_1 accumulated on the way down.
inline CylMiller cyl_miller(int lo, double t) {
  const int hi = lo + 1;
  const int start = miller_start(std::max(hi, 2), t);
  double above = 0.0;
  double cur = 1e-30;
  double at_lo = 0.0;
  double at_hi = 0.0;
  double norm = 0.0;  // J_0 + 2 sum J_2k
  double even = 0.0;  // sum_{m even >= 2} (-1)^(m/2) J_m / m
  double odd = 0.0;   // sum_{m odd >= 3} (-1)^((m-1)/2) m / (m^2 - 1) J_m

  auto accumulate = [&](int m, double f) {
    if (m == 0) {
      norm += f;
    } else if (m % 2 == 0) {
      norm += 2.0 * f;
      even += ((m / 2) % 2 == 0 ? f : -f) / m;
    } else if (m > 1) {
      const double w = static_cast<double>(m) / (static_cast<double>(m) * m - 1.0);
      odd += (((m - 1) / 2) % 2 == 0 ? w : -w) * f;
    }
  };

  accumulate(start, cur);
  for (int l = start; l >= 1; --l) {
    if (l == hi) at_hi = cur;
    if (l == lo) at_lo = cur;
    const double below = 2.0 * l / t * cur - above;
    above = cur;
    cur = below;
    accumulate(l - 1, cur);
    if (std::abs(cur) > kRescaleAbove) {
      for (double* v : {&cur, &above, &at_lo, &at_hi, &norm, &even, &odd}) *v *= kRescaleBy;
    }
  }
  if (lo == 0) at_lo = cur;

  CylMiller out;
  out.j_lo = at_lo / norm;
  out.j_hi = at_hi / norm;
  out.j0 = cur / norm;
  out.j1 = above / norm;
  const double log_term = std::log(0.5 * t) + kEulerGamma;
  constexpr double two_over_pi = 2.0 / std::numbers::pi;
  out.y0 = two_over_pi * (log_term * out.j0 - 4.0 * even / norm);
  out.y1 = two_over_pi * ((log_term - 1.0) * out.j1 - out.j0 / t - 4.0 * odd / norm);
  return out;
}

// {J_lo, J_lo+1} for t > 0.
inline std::pair<double, double> cyl_j_two(int lo, double t) {
  const int hi = lo + 1;
  if (t * t <= 2.0 * (hi + 1)) return {cyl_j_series(lo, t), cyl_j_series(hi, t)};
  const CylMiller m = cyl_miller(lo, t);
  return {m.j_lo, m.j_hi};
}

// {Y_lo, Y_lo+1} for t > 0.
inline std::pair<double, double> cyl_y_two(int lo, double t, const char* where) {
  const CylMiller m = cyl_miller(0, t);
  double prev = guard(m.y0, where);
  double cur = guard(m.y1, where);
  for (int l = 1; l <= lo; ++l) {
    const double next = guard(2.0 * l / t * cur - prev, where);
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

// Value and derivative at order n from the pair {f_lo, f_lo+1}, lo = max(n-1, 0).
// `shift` is 1 for the spherical family and 0 for the cylindrical one.
inline std::pair<double, double> value_and_derivative(int n, double t, std::pair<double, double> two,
                                                      int shift, const char* where) {
  if (n == 0) return {two.first, -two.second};
  const double value = two.second;
  return {value, guard(two.first - (n + shift) / t * value, where)};
}

}  // namespace detail

/// Legendre polynomial P_n(t) on [-1, 1] by the three-term recurrence.
inline double legendre_p(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_order(n, max_order, "legendre_p");
  if (!(std::abs(t) <= 1.0)) detail::throw_domain("legendre_p", "argument outside [-1, 1]");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int l = 1; l < n; ++l) {
    const double next = ((2.0 * l + 1.0) * t * cur - l * prev) / (l + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Spherical Bessel function j_n(t), t >= 0.
inline double sph_j(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_order(n, max_order, "sph_j");
  detail::check_argument(t, true, "sph_j");
  if (t == 0.0) return n == 0 ? 1.0 : 0.0;
  const auto two = detail::sph_j_two(std::max(n - 1, 0), t);
  return n == 0 ? two.first : two.second;
}

/// Spherical Neumann function y_n(t), t > 0.
inline double sph_y(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_order(n, max_order, "sph_y");
  detail::check_argument(t, false, "sph_y");
  const auto two = detail::sph_y_two(std::max(n - 1, 0), t, "sph_y");
  return n == 0 ? two.first : two.second;
}

/// Spherical Hankel function of the first kind h_n(t) = j_n(t) + i y_n(t).
inline Complex sph_h1(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_argument(t, false, "sph_h1");
  return {sph_j(n, t, max_order), sph_y(n, t, max_order)};
}

inline double sph_j_prime(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_order(n, max_order, "sph_j_prime");
  detail::check_argument(t, true, "sph_j_prime");
  if (t == 0.0) return n == 1 ? 1.0 / 3.0 : 0.0;
  const int lo = std::max(n - 1, 0);
  return detail::value_and_derivative(n, t, detail::sph_j_two(lo, t), 1, "sph_j_prime").second;
}

inline double sph_y_prime(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_order(n, max_order, "sph_y_prime");
  detail::check_argument(t, false, "sph_y_prime");
  const int lo = std::max(n - 1, 0);
  return detail::value_and_derivative(n, t, detail::sph_y_two(lo, t, "sph_y_prime"), 1,
                                      "sph_y_prime")
      .second;
}

inline Complex sph_h1_prime(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_argument(t, false, "sph_h1_prime");
  return {sph_j_prime(n, t, max_order), sph_y_prime(n, t, max_order)};
}

/// Bessel function of the first kind J_n(t), t >= 0.
inline double cyl_j(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_order(n, max_order, "cyl_j");
  detail::check_argument(t, true, "cyl_j");
  if (t == 0.0) return n == 0 ? 1.0 : 0.0;
  const auto two = detail::cyl_j_two(std::max(n - 1, 0), t);
  return n == 0 ? two.first : two.second;
}

/// Bessel function of the second kind Y_n(t), t > 0.
inline double cyl_y(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_order(n, max_order, "cyl_y");
  detail::check_argument(t, false, "cyl_y");
  const auto two = detail::cyl_y_two(std::max(n - 1, 0), t, "cyl_y");
  return n == 0 ? two.first : two.second;
}

/// Hankel function of the first kind H_n(t) = J_n(t) + i Y_n(t).
inline Complex cyl_h1(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_argument(t, false, "cyl_h1");
  return {cyl_j(n, t, max_order), cyl_y(n, t, max_order)};
}

inline double cyl_j_prime(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_order(n, max_order, "cyl_j_prime");
  detail::check_argument(t, false, "cyl_j_prime");
  const int lo = std::max(n - 1, 0);
  return detail::value_and_derivative(n, t, detail::cyl_j_two(lo, t), 0, "cyl_j_prime").second;
}

inline double cyl_y_prime(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_order(n, max_order, "cyl_y_prime");
  detail::check_argument(t, false, "cyl_y_prime");
  const int lo = std::max(n - 1, 0);
  return detail::value_and_derivative(n, t, detail::cyl_y_two(lo, t, "cyl_y_prime"), 0,
                                      "cyl_y_prime")
      .second;
}

inline Complex cyl_h1_prime(int n, double t, int max_order = kDefaultMaxOrder) {
  detail::check_argument(t, false, "cyl_h1_prime");
  return {cyl_j_prime(n, t, max_order), cyl_y_prime(n, t, max_order)};
}

}  // namespace npeig
