#pragma once

// Exact arithmetic for measure values: rationals, sums of rational multiples
// of square roots, and reciprocals of such sums. Every distance in the library
// lands in one of these forms, so equalities like 17/6 or 1/(4+sqrt(7)) are
// checked without floating-point slack.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/rational.hpp>

#include "softsim/errors.hpp"

// Under C++20 rewritten comparisons, boost 1.74 resolves rational == integer
// to its own reversed overload and recurses forever. Exact-match overloads
// win overload resolution and break the cycle.
namespace boost {
#define SOFTSIM_RATIONAL_EQ(T)                                                  \
  inline constexpr bool operator==(const rational<std::int64_t>& a, T b) {      \
    return a == rational<std::int64_t>(static_cast<std::int64_t>(b));           \
  }
SOFTSIM_RATIONAL_EQ(int)
SOFTSIM_RATIONAL_EQ(long)
SOFTSIM_RATIONAL_EQ(long long)
SOFTSIM_RATIONAL_EQ(unsigned)
SOFTSIM_RATIONAL_EQ(unsigned long)
SOFTSIM_RATIONAL_EQ(unsigned long long)
#undef SOFTSIM_RATIONAL_EQ
}  // namespace boost

namespace softsim {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("exact arithmetic overflow");
  return out;
}

/// Splits n >= 1 as root^2 * free with `free` square-free.
inline std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  std::int64_t root = 1;
  std::int64_t free = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int power = 0;
    while (n % p == 0) {
      n /= p;
      ++power;
    }
    for (int i = 0; i < power / 2; ++i) root *= p;
    if (power % 2 == 1) free *= p;
  }
  free *= n;
  return {root, free};
}

inline std::int64_t pow10(int places) {
  std::int64_t out = 1;
  for (int i = 0; i < places; ++i) out *= 10;
  return out;
}

inline std::string fixed_point(bool negative, std::int64_t scaled, int places) {
  const std::int64_t unit = pow10(places);
  std::string frac = std::to_string(scaled % unit);
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += std::to_string(scaled / unit);
  if (places > 0) out += "." + frac;
  return out;
}

}  // namespace detail

/// An element of Q(sqrt 2, sqrt 3, ...): rational part plus a finite sum of
/// coeff * sqrt(radicand) with square-free radicands > 1. The representation
/// is canonical, so structural equality is numeric equality.
class Surd {
 public:
  Surd() = default;
  Surd(Rational r) : rational_(r) {}  // NOLINT(google-explicit-constructor)
  Surd(std::int64_t v) : rational_(v) {}  // NOLINT(google-explicit-constructor)

  /// Principal square root of a non-negative rational.
  static Surd sqrt(const Rational& r) {
    if (r < 0) throw PreconditionError("square root of a negative rational");
    if (r == 0) return {};
    const auto [root, free] =
        detail::split_square(detail::checked_mul(r.numerator(), r.denominator()));
    const Rational coeff(root, r.denominator());
    Surd out;
    out.add_term(free, coeff);
    return out;
  }

  const Rational& rational_part() const { return rational_; }
  const std::map<std::int64_t, Rational>& radicals() const { return radicals_; }
  bool is_rational() const { return radicals_.empty(); }
  bool is_zero() const { return radicals_.empty() && rational_ == 0; }

  long double to_long_double() const {
    long double v = boost::rational_cast<long double>(rational_);
    for (const auto& [radicand, coeff] : radicals_) {
      v += boost::rational_cast<long double>(coeff) * std::sqrt(static_cast<long double>(radicand));
    }
    return v;
  }

  /// Sign of the value. Exact when at most one radical is present.
  int sign() const {
    const auto sgn = [](const Rational& r) { return (r > 0) - (r < 0); };
    if (radicals_.empty()) return sgn(rational_);
    if (radicals_.size() == 1) {
      const auto& [radicand, coeff] = *radicals_.begin();
      const int a = sgn(rational_);
      const int b = sgn(coeff);
      if (a == 0 || a == b) return b;
      // opposite signs: compare a^2 with coeff^2 * radicand
      const Rational lhs = rational_ * rational_;
      const Rational rhs = coeff * coeff * Rational(radicand);
      if (lhs == rhs) return 0;
      return lhs > rhs ? a : b;
    }
    const long double v = to_long_double();
    return (v > 0) - (v < 0);
  }

  /// Renders as "a+sqrt(r)" with each coefficient folded under its radical,
  /// e.g. "1+sqrt(3)", "sqrt(1/3)", "3/2".
  std::string str() const {
    std::string out;
    if (rational_ != 0 || radicals_.empty()) out = to_string(rational_);
    for (const auto& [radicand, coeff] : radicals_) {
      const Rational folded = coeff * coeff * Rational(radicand);
      if (coeff < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      out += "sqrt(" + to_string(folded) + ")";
    }
    return out;
  }

  Surd operator-() const {
    Surd out;
    out.rational_ = -rational_;
    for (const auto& [radicand, coeff] : radicals_) out.radicals_.emplace(radicand, -coeff);
    return out;
  }

  Surd& operator+=(const Surd& rhs) {
    rational_ += rhs.rational_;
    for (const auto& [radicand, coeff] : rhs.radicals_) add_term(radicand, coeff);
    return *this;
  }

  Surd& operator-=(const Surd& rhs) { return *this += -rhs; }

  friend Surd operator+(Surd lhs, const Surd& rhs) { return lhs += rhs; }
  friend Surd operator-(Surd lhs, const Surd& rhs) { return lhs -= rhs; }

  friend Surd operator*(const Surd& lhs, const Surd& rhs) {
    Surd out(lhs.rational_ * rhs.rational_);
    for (const auto& [s, c] : lhs.radicals_) out.add_term(s, c * rhs.rational_);
    for (const auto& [t, d] : rhs.radicals_) out.add_term(t, d * lhs.rational_);
    for (const auto& [s, c] : lhs.radicals_) {
      for (const auto& [t, d] : rhs.radicals_) {
        // s, t square-free: s*t = g^2 * (s/g)*(t/g) with the cofactor square-free
        const std::int64_t g = std::gcd(s, t);
        out.add_term(detail::checked_mul(s / g, t / g), c * d * Rational(g));
      }
    }
    return out;
  }

  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  void add_term(std::int64_t radicand, const Rational& coeff) {
    if (coeff == 0) return;
    if (radicand == 1) {
      rational_ += coeff;
      return;
    }
    auto [it, inserted] = radicals_.try_emplace(radicand, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) radicals_.erase(it);
    }
  }

  Rational rational_{0};
  std::map<std::int64_t, Rational> radicals_;
};

/// A measure value in exact form: either a Surd, or 1/Surd (Koczy-type
/// similarities). Reciprocals of rationals are normalized to plain rationals.
class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(Surd v) : surd_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExactValue(Rational r) : surd_(r) {}  // NOLINT(google-explicit-constructor)
  ExactValue(std::int64_t v) : surd_(v) {}  // NOLINT(google-explicit-constructor)

  static ExactValue reciprocal(const Surd& denominator) {
    if (denominator.is_zero()) throw UndefinedMeasureError("reciprocal of zero");
    if (denominator.is_rational()) return {Rational(1) / denominator.rational_part()};
    ExactValue out(denominator);
    out.reciprocal_ = true;
    return out;
  }

  bool is_reciprocal() const { return reciprocal_; }
  /// The value itself, or its denominator when is_reciprocal().
  const Surd& surd() const { return surd_; }

  bool is_rational() const { return !reciprocal_ && surd_.is_rational(); }
  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return surd_.rational_part();
  }

  long double to_long_double() const {
    const long double v = surd_.to_long_double();
    return reciprocal_ ? 1.0L / v : v;
  }

  std::string str() const { return reciprocal_ ? "1/(" + surd_.str() + ")" : surd_.str(); }

  friend bool operator==(const ExactValue&, const ExactValue&) = default;

 private:
  Surd surd_;
  bool reciprocal_ = false;
};

/// Three-way comparison; exact whenever the sign of the difference can be
/// decided from at most one radical, floating point otherwise.
inline int compare(const ExactValue& a, const ExactValue& b) {
  if (!a.is_reciprocal() && !b.is_reciprocal()) return (a.surd() - b.surd()).sign();
  if (a.is_reciprocal() && b.is_reciprocal() && a.surd().sign() > 0 && b.surd().sign() > 0) {
    return (b.surd() - a.surd()).sign();
  }
  if (a.is_reciprocal() && !b.is_reciprocal() && a.surd().sign() > 0) {
    return (Surd(1) - a.surd() * b.surd()).sign();
  }
  if (!a.is_reciprocal() && b.is_reciprocal() && b.surd().sign() > 0) {
    return (a.surd() * b.surd() - Surd(1)).sign();
  }
  const long double x = a.to_long_double();
  const long double y = b.to_long_double();
  return (x > y) - (x < y);
}

/// Fixed-point rendering, round-half-even at `places` digits.
inline std::string format_decimal(long double v, int places = 6) {
  const bool negative = v < 0;
  const long double scaled = std::nearbyint(std::fabs(v) * static_cast<long double>(detail::pow10(places)));
  return detail::fixed_point(negative, static_cast<std::int64_t>(scaled), places);
}

inline std::string format_decimal(const Rational& r, int places = 6) {
  const bool negative = r < 0;
  const __int128 num = static_cast<__int128>(negative ? -r.numerator() : r.numerator()) * detail::pow10(places);
  const __int128 den = r.denominator();
  __int128 q = num / den;
  const __int128 twice_rem = 2 * (num % den);
  if (twice_rem > den || (twice_rem == den && q % 2 == 1)) ++q;
  return detail::fixed_point(negative, static_cast<std::int64_t>(q), places);
}

inline std::string format_decimal(const ExactValue& v, int places = 6) {
  if (const auto r = v.as_rational()) return format_decimal(*r, places);
  return format_decimal(v.to_long_double(), places);
}

/// Drops trailing zeros (and a bare trailing point) from a fixed-point string.
inline std::string trim_decimal(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

}  // namespace softsim
