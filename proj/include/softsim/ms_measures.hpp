#pragma once

// Matrix-based measures of Majumdar and Samanta: the matching-function
// similarity and the four entrywise distances. Both operands are totalized
// first, as the matrix formulas require.

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "softsim/matrix.hpp"
#include "softsim/measure_value.hpp"
#include "softsim/soft_set.hpp"

namespace softsim {

namespace detail {

struct EntrywiseCounts {
  std::int64_t both = 0;        // Σ F1(e)(x)·F2(e)(x)
  std::int64_t either = 0;      // Σ max(F1(e)(x)^2, F2(e)(x)^2)
  std::int64_t abs_diff = 0;    // Σ |F1(e)(x) − F2(e)(x)|
  std::int64_t sq_diff = 0;     // Σ (F1(e)(x) − F2(e)(x))^2
};

inline EntrywiseCounts entrywise(const SoftSet& f1, const SoftSet& f2) {
  require_same_space(f1, f2);
  const BinaryMatrix a = to_matrix(totalize(f1));
  const BinaryMatrix b = to_matrix(totalize(f2));
  EntrywiseCounts out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const int x = a.at(i, j);
      const int y = b.at(i, j);
      out.both += x * y;
      out.either += std::max(x * x, y * y);
      out.abs_diff += std::abs(x - y);
      out.sq_diff += (x - y) * (x - y);
    }
  }
  return out;
}

}  // namespace detail

/// Σ dot products over Σ componentwise max of squares; undefined for 0/0.
inline MeasureValue ms_matching_similarity(const SoftSet& f1, const SoftSet& f2) {
  const auto c = detail::entrywise(f1, f2);
  if (c.either == 0) return MeasureValue::undefined();
  return MeasureValue::of(Rational(c.both, c.either));
}

/// D^s: mean Hamming distance, k/m.
inline MeasureValue ms_hamming(const SoftSet& f1, const SoftSet& f2) {
  const auto c = detail::entrywise(f1, f2);
  const auto m = static_cast<std::int64_t>(f1.space().attribute_count());
  return MeasureValue::of(Rational(c.abs_diff, m));
}

/// L^s: normalized Hamming distance, k/(mn).
inline MeasureValue ms_hamming_norm(const SoftSet& f1, const SoftSet& f2) {
  const auto c = detail::entrywise(f1, f2);
  const auto mn = static_cast<std::int64_t>(f1.space().attribute_count() * f1.space().element_count());
  return MeasureValue::of(Rational(c.abs_diff, mn));
}

/// E^s: sqrt of the mean squared entry difference.
inline MeasureValue ms_euclid(const SoftSet& f1, const SoftSet& f2) {
  const auto c = detail::entrywise(f1, f2);
  const auto m = static_cast<std::int64_t>(f1.space().attribute_count());
  return MeasureValue::of(Surd::sqrt(Rational(c.sq_diff, m)));
}

/// Q^s: sqrt of the normalized squared entry difference.
inline MeasureValue ms_euclid_norm(const SoftSet& f1, const SoftSet& f2) {
  const auto c = detail::entrywise(f1, f2);
  const auto mn = static_cast<std::int64_t>(f1.space().attribute_count() * f1.space().element_count());
  return MeasureValue::of(Surd::sqrt(Rational(c.sq_diff, mn)));
}

/// S′ = 1/(1+E^s).
inline MeasureValue ms_similarity_prime(const SoftSet& f1, const SoftSet& f2) {
  const MeasureValue es = ms_euclid(f1, f2);
  return MeasureValue::of(ExactValue::reciprocal(Surd(1) + es.exact->surd()));
}

}  // namespace softsim
