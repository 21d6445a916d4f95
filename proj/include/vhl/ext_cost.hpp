#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace vhl {

/// A cost value: a non-negative real number or infinity.
///
/// Infinity marks an impossible transition or emission and is absorbing
/// under addition. NaN is not representable; every constructor rejects it,
/// so comparisons form a total order.
class ExtCost {
 public:
  constexpr ExtCost() : v_(0.0) {}

  static constexpr ExtCost inf() {
    return ExtCost(std::numeric_limits<double>::infinity(), unchecked{});
  }

  /// Builds a finite cost. Throws std::invalid_argument on negative,
  /// NaN, or infinite input.
  static ExtCost finite(double v) {
    if (!(v >= 0.0) || std::isinf(v)) {
      throw std::invalid_argument("cost must be finite and non-negative, got " +
                                  std::to_string(v));
    }
    return ExtCost(v, unchecked{});
  }

  /// Builds from a raw double that may be +infinity. Throws on NaN or
  /// negative values.
  static ExtCost from_raw(double v) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument("cost must be non-negative and not NaN, got " +
                                  std::to_string(v));
    }
    return ExtCost(v, unchecked{});
  }

  [[nodiscard]] double raw() const { return v_; }
  [[nodiscard]] bool is_inf() const { return std::isinf(v_); }
  [[nodiscard]] bool is_finite() const { return !std::isinf(v_); }

  /// Addition saturates: inf + x = inf. Finite + finite never produces NaN
  /// because both operands are non-negative.
  friend ExtCost operator+(ExtCost a, ExtCost b) {
    return ExtCost(a.v_ + b.v_, unchecked{});
  }

  friend bool operator==(ExtCost a, ExtCost b) { return a.v_ == b.v_; }
  friend std::partial_ordering operator<=>(ExtCost a, ExtCost b) {
    return a.v_ <=> b.v_;
  }

 private:
  struct unchecked {};
  constexpr ExtCost(double v, unchecked) : v_(v) {}
  double v_;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Saturating addition on raw cost doubles. IEEE semantics already give
/// inf + x = inf, and non-negative operands cannot produce NaN.
inline double ext_add(double a, double b) { return a + b; }

}  // namespace vhl
