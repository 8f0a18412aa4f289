#pragma once

#include <cmath>
#include <optional>
#include <string_view>

#include "npeig/errors.hpp"
#include "npeig/specfun.hpp"

namespace npeig {

/// How an eigenvalue was obtained.
enum class Method {
  FormA,             // -1/2 + ... j_n h_n' (ball) / J_n H_n' (disk)
  FormB,             // +1/2 - ... j_n' h_n (ball) / J_n' H_n (disk)
  FormC,             // (ik/2)(j_n h_n + c_{n,k}), ball only
  Leading,           // 1/(2(2n+1)) + (i/2) k c_{n,k}, ball only
  StaticLimit,       // k = 0 value
  Oracle,            // direct quadrature of the boundary kernel
  LargeNAsymptotic,  // -k^2 / (4n(n-1)(n+1)), disk only
  SmallKExpansion,   // 1/2 - (k^2/2) ln(k/2), disk n = 0 only
};

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::FormA: return "FormA";
    case Method::FormB: return "FormB";
    case Method::FormC: return "FormC";
    case Method::Leading: return "Leading";
    case Method::StaticLimit: return "StaticLimit";
    case Method::Oracle: return "Oracle";
    case Method::LargeNAsymptotic: return "LargeNAsymptotic";
    case Method::SmallKExpansion: return "SmallKExpansion";
  }
  return "?";
}

inline std::optional<Method> method_from_string(std::string_view s) noexcept {
  for (Method m : {Method::FormA, Method::FormB, Method::FormC, Method::Leading, Method::StaticLimit,
                   Method::Oracle, Method::LargeNAsymptotic, Method::SmallKExpansion}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

/// One evaluated eigenvalue of the Neumann-Poincare operator on the ball
/// (dimension 3, mode Y_n^m) or on the disk (dimension 2, mode e^{in theta}).
struct EigenRecord {
  int dimension = 3;
  int n = 0;
  double k = 0.0;
  double radius = 1.0;
  Complex value;
  Method method = Method::FormB;
};

namespace detail {

inline void check_wavenumber(double k, bool allow_zero, const char* where) {
  if (std::isnan(k) || std::isinf(k) || k < 0.0) throw_domain(where, "wavenumber must be finite and >= 0");
  if (!allow_zero && k == 0.0) throw_domain(where, "wavenumber must be positive");
}

inline void check_radius(double radius, const char* where) {
  if (!(radius > 0.0) || std::isinf(radius)) throw_domain(where, "radius must be finite and positive");
}

}  // namespace detail
}  // namespace npeig
