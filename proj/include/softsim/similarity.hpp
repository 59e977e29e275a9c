#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "softsim/distances.hpp"
#include "softsim/errors.hpp"
#include "softsim/measure_value.hpp"
#include "softsim/soft_set.hpp"

namespace softsim {

/// Parameters for the similarity family. `steepness` is the Williams–Steele
/// exponent scale; `alpha_threshold` the level for α-similarity;
/// `significant_threshold` the fixed level for significant similarity.
struct SimilarityConfig {
  double steepness = 1.0;
  Rational alpha_threshold{1, 2};
  Rational significant_threshold{1, 2};

  void validate() const {
    if (!(steepness > 0.0) || !std::isfinite(steepness)) {
      throw PreconditionError("steepness must be a positive real");
    }
    if (alpha_threshold <= 0 || alpha_threshold >= 1) {
      throw PreconditionError("alpha threshold must lie strictly between 0 and 1");
    }
  }
};

struct MatchingSimilarity {
  MeasureValue raw;         ///< in [0,2]
  MeasureValue normalized;  ///< raw / 2
};

/// Set-theoretic matching function: domain overlap |A∩B|/max(|A|,|B|) plus
/// value overlap Σ|F(ε)∩G(ε)| / Σ max(|F(ε)|,|G(ε)|) over ε ∈ A∩B.
/// The value term is 0 for disjoint domains and 1 when every shared value
/// set is empty on both sides.
inline MatchingSimilarity matching_similarity_m(const SoftSet& f, const SoftSet& g) {
  require_same_space(f, g);
  const auto left = static_cast<std::int64_t>(f.domain_size());
  const auto right = static_cast<std::int64_t>(g.domain_size());
  if (left == 0 && right == 0) return {MeasureValue::undefined(), MeasureValue::undefined()};

  std::int64_t shared = 0;
  std::int64_t overlap = 0;
  std::int64_t larger = 0;
  for (const auto& [attr, values] : f.assignment()) {
    const ElementSet* other = g.value(attr);
    if (other == nullptr) continue;
    ++shared;
    overlap += static_cast<std::int64_t>((values & *other).count());
    larger += static_cast<std::int64_t>(std::max(values.count(), other->count()));
  }
  Rational raw(shared, std::max(left, right));
  if (shared != 0) raw += larger == 0 ? Rational(1) : Rational(overlap, larger);
  return {MeasureValue::of(raw), MeasureValue::of(raw / 2)};
}

namespace detail {

inline MeasureValue koczy(const MeasureValue& distance) {
  return MeasureValue::of(ExactValue::reciprocal(Surd(1) + distance.exact->surd()));
}

inline MeasureValue williams(const MeasureValue& distance, double steepness) {
  if (!(steepness > 0.0)) throw PreconditionError("steepness must be a positive real");
  return MeasureValue::approximate(static_cast<double>(
      std::exp(-static_cast<long double>(steepness) * distance.exact->to_long_double())));
}

}  // namespace detail

/// S_K^e = 1/(1+e).
inline MeasureValue koczy_e(const SoftSet& f, const SoftSet& g) { return detail::koczy(euclid(f, g)); }

/// S_K^q = 1/(1+q).
inline MeasureValue koczy_q(const SoftSet& f, const SoftSet& g) { return detail::koczy(euclid_norm(f, g)); }

/// S_W^e = exp(−steepness·e).
inline MeasureValue williams_e(const SoftSet& f, const SoftSet& g, double steepness = 1.0) {
  return detail::williams(euclid(f, g), steepness);
}

/// S_W^q = exp(−steepness·q).
inline MeasureValue williams_q(const SoftSet& f, const SoftSet& g, double steepness = 1.0) {
  return detail::williams(euclid_norm(f, g), steepness);
}

}  // namespace softsim
