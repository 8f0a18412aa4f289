#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace npeig {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where the quantity is finite or defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A mode order above the configured cap was requested.
class OrderTooLarge : public Error {
 public:
  OrderTooLarge(int n, int max_order)
      : Error("order " + std::to_string(n) + " exceeds the cap " +
              std::to_string(max_order)),
        order_(n),
        max_order_(max_order) {}

  int order() const noexcept { return order_; }
  int max_order() const noexcept { return max_order_; }

 private:
  int order_;
  int max_order_;
};

/// An intermediate quantity left the representable range.
class Overflow : public Error {
 public:
  using Error::Error;
};

/// Largest magnitude any intermediate may reach before evaluation aborts.
inline constexpr double kOverflowLimit = 1e300;

namespace detail {

[[noreturn]] inline void throw_domain(const char* where, const std::string& what) {
  throw DomainError(std::string(where) + ": " + what);
}

inline double guard(double v, const char* where) {
  if (!std::isfinite(v) || std::abs(v) > kOverflowLimit) {
    throw Overflow(std::string(where) + ": intermediate value out of range");
  }
  return v;
}

}  // namespace detail
}  // namespace npeig
