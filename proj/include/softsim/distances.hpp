#pragma once

// Set-operation distances between soft sets. Unlike the matrix measures these
// look at attribute domains as well as value sets, so partial soft sets are
// compared as they are, never totalized.
//
//   d  Hamming quasi-metric        |AΔB| + Σ |F(ε)ΔG(ε)|
//   l  normalized Hamming          |AΔB|/|A∪B| + Σ |F(ε)ΔG(ε)|/|F(ε)∪G(ε)|
//   c  cardinality semi-metric     ||A|−|B|| + Σ ||F(ε)|−|G(ε)||
//   p  normalized cardinality      ||A|−|B||/|E| + Σ ||F(ε)|−|G(ε)||/|X|
//   e  Euclidean                   |AΔB| + sqrt(Σ |F(ε)ΔG(ε)|)
//   q  normalized Euclidean        |AΔB|/sqrt|A∪B| + sqrt(Σ |F(ε)ΔG(ε)|/|F(ε)∪G(ε)|)
//
// Sums run over ε ∈ A∩B; a ratio with an empty denominator contributes 0.
// e and q sum set sizes under the radical, i.e. the per-element Euclidean
// norm of the indicator difference. The "literal" variants square each size
// before summing.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "softsim/errors.hpp"
#include "softsim/measure_value.hpp"
#include "softsim/soft_set.hpp"

namespace softsim {

namespace detail {

struct SharedAttribute {
  std::int64_t sym_diff = 0;
  std::int64_t unite = 0;
  std::int64_t left = 0;
  std::int64_t right = 0;
};

struct DomainComparison {
  std::int64_t left_size = 0;
  std::int64_t right_size = 0;
  std::int64_t sym_diff = 0;
  std::int64_t unite = 0;
  std::vector<SharedAttribute> shared;
};

inline DomainComparison compare_domains(const SoftSet& f, const SoftSet& g) {
  require_same_space(f, g);
  DomainComparison out;
  out.left_size = static_cast<std::int64_t>(f.domain_size());
  out.right_size = static_cast<std::int64_t>(g.domain_size());
  for (const auto& [attr, values] : f.assignment()) {
    const ElementSet* other = g.value(attr);
    if (other == nullptr) continue;
    out.shared.push_back({static_cast<std::int64_t>((values ^ *other).count()),
                          static_cast<std::int64_t>((values | *other).count()),
                          static_cast<std::int64_t>(values.count()),
                          static_cast<std::int64_t>(other->count())});
  }
  const auto common = static_cast<std::int64_t>(out.shared.size());
  out.unite = out.left_size + out.right_size - common;
  out.sym_diff = out.unite - common;
  return out;
}

inline void require_non_void(const SoftSet& f, const SoftSet& g, const char* measure) {
  if (f.domain_size() == 0 || g.domain_size() == 0) {
    throw PreconditionError(std::string(measure) + " needs soft sets with non-empty attribute domains");
  }
}

inline std::int64_t power(std::int64_t v, int exponent) { return exponent == 2 ? v * v : v; }

inline MeasureValue euclid(const SoftSet& f, const SoftSet& g, int exponent, const char* name) {
  require_non_void(f, g, name);
  const auto dc = compare_domains(f, g);
  std::int64_t under_root = 0;
  for (const auto& s : dc.shared) under_root += power(s.sym_diff, exponent);
  return MeasureValue::of(Surd(dc.sym_diff) + Surd::sqrt(Rational(under_root)));
}

inline MeasureValue euclid_norm(const SoftSet& f, const SoftSet& g, int exponent, const char* name) {
  require_non_void(f, g, name);
  const auto dc = compare_domains(f, g);
  Rational under_root = 0;
  for (const auto& s : dc.shared) {
    if (s.unite != 0) under_root += Rational(power(s.sym_diff, exponent), s.unite);
  }
  // |AΔB|/sqrt|A∪B| = sqrt(|AΔB|^2/|A∪B|)
  const Surd domain_term = Surd::sqrt(Rational(dc.sym_diff * dc.sym_diff, dc.unite));
  return MeasureValue::of(domain_term + Surd::sqrt(under_root));
}

}  // namespace detail

inline MeasureValue hamming_quasi(const SoftSet& f, const SoftSet& g) {
  detail::require_non_void(f, g, "d");
  const auto dc = detail::compare_domains(f, g);
  std::int64_t total = dc.sym_diff;
  for (const auto& s : dc.shared) total += s.sym_diff;
  return MeasureValue::of(Rational(total));
}

inline MeasureValue hamming_quasi_norm(const SoftSet& f, const SoftSet& g) {
  detail::require_non_void(f, g, "l");
  const auto dc = detail::compare_domains(f, g);
  Rational total(dc.sym_diff, dc.unite);
  for (const auto& s : dc.shared) {
    if (s.unite != 0) total += Rational(s.sym_diff, s.unite);
  }
  return MeasureValue::of(total);
}

inline MeasureValue cardinality_semi(const SoftSet& f, const SoftSet& g) {
  const auto dc = detail::compare_domains(f, g);
  std::int64_t total = std::abs(dc.left_size - dc.right_size);
  for (const auto& s : dc.shared) total += std::abs(s.left - s.right);
  return MeasureValue::of(Rational(total));
}

inline MeasureValue cardinality_semi_norm(const SoftSet& f, const SoftSet& g) {
  const auto dc = detail::compare_domains(f, g);
  const auto m = static_cast<std::int64_t>(f.space().attribute_count());
  const auto n = static_cast<std::int64_t>(f.space().element_count());
  Rational total(std::abs(dc.left_size - dc.right_size), m);
  for (const auto& s : dc.shared) total += Rational(std::abs(s.left - s.right), n);
  return MeasureValue::of(total);
}

inline MeasureValue euclid(const SoftSet& f, const SoftSet& g) { return detail::euclid(f, g, 1, "e"); }

inline MeasureValue euclid_norm(const SoftSet& f, const SoftSet& g) {
  return detail::euclid_norm(f, g, 1, "q");
}

/// e with each |F(ε)ΔG(ε)| squared under the radical.
inline MeasureValue euclid_literal(const SoftSet& f, const SoftSet& g) {
  return detail::euclid(f, g, 2, "e-literal");
}

/// q with each |F(ε)ΔG(ε)| squared in the χ numerator.
inline MeasureValue euclid_norm_literal(const SoftSet& f, const SoftSet& g) {
  return detail::euclid_norm(f, g, 2, "q-literal");
}

}  // namespace softsim
