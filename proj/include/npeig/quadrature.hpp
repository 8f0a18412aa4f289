#pragma once

// Gauss-Legendre rules, the Funk-Hecke eigenvalue functional and the
// boundary exponential moment
//
//   c_{n,k} = -1/2 int_{-1}^{1} exp(i k sqrt(2(1-t))) P_n(t) dt.
//
// The square root makes the integrand non-smooth at t = 1. With
// u = sqrt(2(1-t)) the moment becomes
//
//   c_{n,k} = -1/2 int_0^2 exp(i k u) P_n(1 - u^2/2) u du,
//
// which is entire in u and is integrated with a Gauss rule mapped to [0, 2].

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <vector>

#include "npeig/errors.hpp"
#include "npeig/specfun.hpp"

namespace npeig {

inline constexpr int kMaxQuadratureOrder = 2048;

/// Nodes and weights of an m-point Gauss-Legendre rule on [-1, 1].
/// Nodes are strictly increasing and symmetric about the origin.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
      : nodes_(std::move(nodes)), weights_(std::move(weights)) {}

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Sum of w_i f(t_i) over the rule on [-1, 1].
  template <typename F>
  auto integrate(F&& f) const {
    decltype(f(0.0)) sum{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(nodes_[i]);
    return sum;
  }

  /// Integral of f over [a, b] by the affinely mapped rule.
  template <typename F>
  auto integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    return half * integrate([&](double s) { return f(mid + half * s); });
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

namespace detail {

// {P_m(x), P_{m-1}(x)} without an order cap.
inline std::pair<double, double> legendre_top_two(int m, double x) {
  double prev = 1.0;
  double cur = x;
  for (int l = 1; l < m; ++l) {
    const double next = ((2.0 * l + 1.0) * x * cur - l * prev) / (l + 1.0);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace detail

/// m-point Gauss-Legendre rule by Newton iteration on P_m from Chebyshev
/// initial guesses.
inline QuadratureRule gauss_legendre(int m) {
  if (m < 1 || m > kMaxQuadratureOrder) {
    detail::throw_domain("gauss_legendre", "order must lie in [1, 2048]");
  }
  std::vector<double> nodes(m);
  std::vector<double> weights(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double derivative = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, q] = detail::legendre_top_two(m, x);
      derivative = m * (x * p - q) / (x * x - 1.0);
      const double dx = p / derivative;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    const auto [p, q] = detail::legendre_top_two(m, x);
    derivative = m * (x * p - q) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    // descending guesses fill the rule from the right
    nodes[m - 1 - i] = x;
    nodes[i] = -x;
    weights[m - 1 - i] = w;
    weights[i] = w;
  }
  if (m % 2 == 1) nodes[m / 2] = 0.0;
  return QuadratureRule(std::move(nodes), std::move(weights));
}

/// Shared, lazily built rule of order m. Thread-safe; rules are immutable.
inline const QuadratureRule& cached_gauss_legendre(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<const QuadratureRule>(gauss_legendre(m));
  return *slot;
}

/// Funk-Hecke eigenvalue 2 pi int_{-1}^{1} f(t) P_n(t) dt of the zonal kernel f.
template <typename F>
Complex funk_hecke(F&& f, int n, const QuadratureRule& rule) {
  return 2.0 * std::numbers::pi *
         rule.integrate([&](double t) { return Complex(f(t)) * legendre_p(n, t); });
}

/// The coefficient c_{n,k} together with its arguments.
struct CCoefficient {
  int n = 0;
  double k = 0.0;
  Complex value;
};

/// Default Gauss order for c_{n,k}: 64 up to n = 50, then 2n. The u-integrand
/// is a polynomial of degree 2n+1 times exp(iku); wavenumbers above 32 get
/// k + 32 points so the oscillation stays resolved.
inline int c_nk_quadrature_order(int n, double k) {
  const int by_order = n <= 50 ? 64 : std::max(64, 2 * n);
  return std::max(by_order, static_cast<int>(std::ceil(k)) + 32);
}

/// c_{n,k} by the given rule.
inline CCoefficient c_nk(int n, double k, const QuadratureRule& rule) {
  detail::check_order(n, kDefaultMaxOrder, "c_nk");
  if (!(k >= 0.0) || std::isinf(k)) detail::throw_domain("c_nk", "wavenumber must be finite and >= 0");
  const Complex integral = rule.integrate(
      [&](double u) { return std::exp(Complex(0.0, k * u)) * legendre_p(n, 1.0 - 0.5 * u * u) * u; },
      0.0, 2.0);
  return {n, k, -0.5 * integral};
}

inline CCoefficient c_nk(int n, double k) {
  detail::check_order(n, kDefaultMaxOrder, "c_nk");
  if (!(k >= 0.0) || std::isinf(k)) detail::throw_domain("c_nk", "wavenumber must be finite and >= 0");
  const int m = std::min(kMaxQuadratureOrder, c_nk_quadrature_order(n, k));
  return c_nk(n, k, cached_gauss_legendre(m));
}

/// int_{-1}^{1} sqrt(1 - t) P_n(t) dt, integrated exactly after u = sqrt(2(1-t)).
inline double sqrt_moment(int n) {
  detail::check_order(n, kDefaultMaxOrder, "sqrt_moment");
  const QuadratureRule& rule = cached_gauss_legendre(n + 2);
  return std::numbers::sqrt2 / 2.0 *
         rule.integrate([&](double u) { return u * u * legendre_p(n, 1.0 - 0.5 * u * u); }, 0.0, 2.0);
}

/// Leading small-k term -(sqrt2/2) i k int sqrt(1-t) P_n(t) dt of c_{n,k}, n >= 1.
inline Complex c_nk_smallk_n(int n, double k) {
  if (n < 1) detail::throw_domain("c_nk_smallk_n", "order must be >= 1 (n = 0 has its own expansion)");
  return Complex(0.0, -std::numbers::sqrt2 / 2.0 * k * sqrt_moment(n));
}

}  // namespace npeig
