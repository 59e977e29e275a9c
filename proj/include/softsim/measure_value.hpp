#pragma once

#include <optional>
#include <string>

#include "softsim/exact.hpp"

namespace softsim {

/// Result of a distance or similarity. `defined` is false only for a 0/0
/// value; `exact` is present whenever the value is algebraic in closed form.
struct MeasureValue {
  bool defined = true;
  double value = 0.0;
  std::optional<ExactValue> exact;

  static MeasureValue undefined() { return {false, 0.0, std::nullopt}; }
  static MeasureValue of(ExactValue v) {
    const auto d = static_cast<double>(v.to_long_double());
    return {true, d, std::move(v)};
  }
  static MeasureValue approximate(double v) { return {true, v, std::nullopt}; }

  /// Exact form when available, else the 6-place decimal.
  std::string str() const {
    if (!defined) return "undefined";
    if (exact) return exact->str();
    return format_decimal(static_cast<long double>(value));
  }

  std::string decimal(int places = 6) const {
    if (!defined) return "undefined";
    if (exact) return format_decimal(*exact, places);
    return format_decimal(static_cast<long double>(value), places);
  }
};

/// Ordering used by threshold and axiom checks: exact when both sides carry
/// exact forms, otherwise on doubles with a 1e-12 absolute tolerance.
inline int compare(const MeasureValue& a, const MeasureValue& b) {
  if (a.exact && b.exact) return compare(*a.exact, *b.exact);
  constexpr double kTolerance = 1e-12;
  if (a.value < b.value - kTolerance) return -1;
  if (a.value > b.value + kTolerance) return 1;
  return 0;
}

inline int compare(const MeasureValue& a, const ExactValue& b) {
  return compare(a, MeasureValue::of(b));
}

}  // namespace softsim
