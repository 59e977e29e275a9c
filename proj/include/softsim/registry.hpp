#pragma once

// String identifiers for every measure, and uniform evaluation by identifier.

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "softsim/distances.hpp"
#include "softsim/errors.hpp"
#include "softsim/ms_measures.hpp"
#include "softsim/similarity.hpp"

namespace softsim {

enum class MeasureId {
  MsMatching,
  Ds,
  Ls,
  Es,
  Qs,
  MsPrime,
  D,
  L,
  C,
  P,
  E,
  Q,
  ELiteral,
  QLiteral,
  M,
  MNorm,
  KoczyE,
  KoczyQ,
  WilliamsE,
  WilliamsQ,
};

enum class MeasureKind { Distance, Similarity };

namespace detail {

struct MeasureInfo {
  MeasureId id;
  std::string_view name;
  MeasureKind kind;
};

inline constexpr std::array<MeasureInfo, 20> kMeasures{{
    {MeasureId::MsMatching, "ms-matching", MeasureKind::Similarity},
    {MeasureId::Ds, "Ds", MeasureKind::Distance},
    {MeasureId::Ls, "Ls", MeasureKind::Distance},
    {MeasureId::Es, "Es", MeasureKind::Distance},
    {MeasureId::Qs, "Qs", MeasureKind::Distance},
    {MeasureId::MsPrime, "ms-prime", MeasureKind::Similarity},
    {MeasureId::D, "d", MeasureKind::Distance},
    {MeasureId::L, "l", MeasureKind::Distance},
    {MeasureId::C, "c", MeasureKind::Distance},
    {MeasureId::P, "p", MeasureKind::Distance},
    {MeasureId::E, "e", MeasureKind::Distance},
    {MeasureId::Q, "q", MeasureKind::Distance},
    {MeasureId::ELiteral, "e-literal", MeasureKind::Distance},
    {MeasureId::QLiteral, "q-literal", MeasureKind::Distance},
    {MeasureId::M, "M", MeasureKind::Similarity},
    {MeasureId::MNorm, "M-norm", MeasureKind::Similarity},
    {MeasureId::KoczyE, "koczy-e", MeasureKind::Similarity},
    {MeasureId::KoczyQ, "koczy-q", MeasureKind::Similarity},
    {MeasureId::WilliamsE, "williams-e", MeasureKind::Similarity},
    {MeasureId::WilliamsQ, "williams-q", MeasureKind::Similarity},
}};

inline const MeasureInfo& info(MeasureId id) {
  for (const auto& m : kMeasures) {
    if (m.id == id) return m;
  }
  throw Error("unregistered measure");
}

}  // namespace detail

inline MeasureId parse_measure(std::string_view name) {
  for (const auto& m : detail::kMeasures) {
    if (m.name == name) return m.id;
  }
  throw UnknownMeasureError(std::string(name));
}

inline std::string measure_name(MeasureId id) { return std::string(detail::info(id).name); }
inline MeasureKind measure_kind(MeasureId id) { return detail::info(id).kind; }

inline std::vector<MeasureId> all_measures(MeasureKind kind) {
  std::vector<MeasureId> out;
  for (const auto& m : detail::kMeasures) {
    if (m.kind == kind) out.push_back(m.id);
  }
  return out;
}

/// Evaluates any registered measure. Only the Williams–Steele measures read
/// the config (its steepness).
inline MeasureValue evaluate(MeasureId id, const SoftSet& f, const SoftSet& g,
                             const SimilarityConfig& config = {}) {
  switch (id) {
    case MeasureId::MsMatching: return ms_matching_similarity(f, g);
    case MeasureId::Ds: return ms_hamming(f, g);
    case MeasureId::Ls: return ms_hamming_norm(f, g);
    case MeasureId::Es: return ms_euclid(f, g);
    case MeasureId::Qs: return ms_euclid_norm(f, g);
    case MeasureId::MsPrime: return ms_similarity_prime(f, g);
    case MeasureId::D: return hamming_quasi(f, g);
    case MeasureId::L: return hamming_quasi_norm(f, g);
    case MeasureId::C: return cardinality_semi(f, g);
    case MeasureId::P: return cardinality_semi_norm(f, g);
    case MeasureId::E: return euclid(f, g);
    case MeasureId::Q: return euclid_norm(f, g);
    case MeasureId::ELiteral: return euclid_literal(f, g);
    case MeasureId::QLiteral: return euclid_norm_literal(f, g);
    case MeasureId::M: return matching_similarity_m(f, g).raw;
    case MeasureId::MNorm: return matching_similarity_m(f, g).normalized;
    case MeasureId::KoczyE: return koczy_e(f, g);
    case MeasureId::KoczyQ: return koczy_q(f, g);
    case MeasureId::WilliamsE: return williams_e(f, g, config.steepness);
    case MeasureId::WilliamsQ: return williams_q(f, g, config.steepness);
  }
  throw Error("unregistered measure");
}

/// Whether the measure requires both attribute domains to be non-empty.
inline bool needs_non_void_domains(MeasureId id) {
  switch (id) {
    case MeasureId::D:
    case MeasureId::L:
    case MeasureId::E:
    case MeasureId::Q:
    case MeasureId::ELiteral:
    case MeasureId::QLiteral:
    case MeasureId::KoczyE:
    case MeasureId::KoczyQ:
    case MeasureId::WilliamsE:
    case MeasureId::WilliamsQ:
      return true;
    default:
      return false;
  }
}

/// True iff S(f,g) ≥ threshold, inclusive, for a similarity measure and a
/// threshold in (0,1).
inline bool is_alpha_similar(const SoftSet& f, const SoftSet& g, MeasureId measure,
                             const Rational& alpha_threshold, const SimilarityConfig& config = {}) {
  if (alpha_threshold <= 0 || alpha_threshold >= 1) {
    throw PreconditionError("alpha threshold must lie strictly between 0 and 1");
  }
  if (measure_kind(measure) != MeasureKind::Similarity) {
    throw PreconditionError("'" + measure_name(measure) + "' is a distance, not a similarity");
  }
  const MeasureValue v = evaluate(measure, f, g, config);
  if (!v.defined) throw UndefinedMeasureError(measure_name(measure) + " is undefined (0/0) for these soft sets");
  return compare(v, ExactValue(alpha_threshold)) >= 0;
}

/// α-similarity at the fixed level 1/2.
inline bool is_significantly_similar(const SoftSet& f, const SoftSet& g, MeasureId measure,
                                     const SimilarityConfig& config = {}) {
  return is_alpha_similar(f, g, measure, config.significant_threshold, config);
}

}  // namespace softsim
