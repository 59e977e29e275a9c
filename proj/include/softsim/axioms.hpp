#pragma once

// Sample-based axiom checking. A distance is tested against the metric
// hierarchy M1..M5, a similarity against s1..s4. Verdicts are "held on the
// sample" or "violated", and every violation keeps the soft sets that
// produced it so the failure can be re-evaluated.

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "softsim/errors.hpp"
#include "softsim/io.hpp"
#include "softsim/registry.hpp"
#include "softsim/sampling.hpp"
#include "softsim/worked_examples.hpp"

namespace softsim {

enum class Verdict { HeldOnSample, Violated };

struct Witness {
  std::vector<SoftSet> sets;
  std::vector<MeasureValue> values;
  std::string detail;
};

struct AxiomResult {
  std::string axiom;
  Verdict verdict = Verdict::HeldOnSample;
  std::size_t checks = 0;
  std::optional<Witness> witness;

  bool held() const { return verdict == Verdict::HeldOnSample; }
};

struct AxiomReport {
  std::string measure;
  std::vector<AxiomResult> axioms;

  const AxiomResult& at(std::string_view axiom) const {
    for (const auto& a : axioms) {
      if (a.axiom == axiom) return a;
    }
    throw Error("no axiom '" + std::string(axiom) + "' in report");
  }
  bool held(std::string_view axiom) const { return at(axiom).held(); }
};

namespace detail {

inline void record(AxiomResult& result, bool ok, const std::vector<SoftSet>& sets,
                   const std::vector<MeasureValue>& values, std::string detail) {
  ++result.checks;
  if (ok || result.verdict == Verdict::Violated) return;
  result.verdict = Verdict::Violated;
  result.witness = Witness{sets, values, std::move(detail)};
}

inline bool is_zero(const MeasureValue& v) { return v.defined && compare(v, ExactValue(0)) == 0; }

/// a + b >= c. Exact when all three are surds; long double otherwise.
inline bool triangle_holds(const MeasureValue& a, const MeasureValue& b, const MeasureValue& c) {
  if (a.exact && b.exact && c.exact && !a.exact->is_reciprocal() && !b.exact->is_reciprocal() &&
      !c.exact->is_reciprocal()) {
    const long double slack =
        a.exact->to_long_double() + b.exact->to_long_double() - c.exact->to_long_double();
    if (slack > 1e-9L) return true;
    if (slack < -1e-9L) return false;
    return compare(ExactValue(a.exact->surd() + b.exact->surd()), *c.exact) >= 0;
  }
  return a.value + b.value >= c.value - 1e-12;
}

inline std::string sum_detail(const MeasureValue& a, const MeasureValue& b, const MeasureValue& c) {
  return a.str() + " + " + b.str() + " < " + c.str();
}

class DistanceChecker {
 public:
  DistanceChecker(MeasureId id, const SimilarityConfig& config) : id_(id), config_(config) {
    for (const char* name : {"M1", "M2", "M3", "M4", "M5"}) {
      report_.axioms.push_back(AxiomResult{name, Verdict::HeldOnSample, 0, std::nullopt});
    }
    report_.measure = measure_name(id);
  }

  MeasureValue value(const SoftSet& f, const SoftSet& g) const { return evaluate(id_, f, g, config_); }

  void check_pair(const SoftSet& f, const SoftSet& g) {
    const MeasureValue fg = value(f, g);
    const MeasureValue gf = value(g, f);
    check_pair(f, g, fg, gf);
  }

  void check_pair(const SoftSet& f, const SoftSet& g, const MeasureValue& fg, const MeasureValue& gf) {
    record(axiom(0), fg.defined && compare(fg, ExactValue(0)) >= 0, {f, g}, {fg}, fg.str() + " < 0");
    record(axiom(1), fg.defined && gf.defined && compare(fg, gf) == 0, {f, g}, {fg, gf},
           fg.str() + " != " + gf.str());
    if (is_zero(fg)) {
      record(axiom(4), soft_equal(f, g), {f, g}, {fg}, "distance 0 between unequal soft sets");
    } else {
      ++axiom(4).checks;
    }
  }

  void check_identity(const SoftSet& f) {
    const SoftSet copy(f.space_ptr(), f.assignment());
    const MeasureValue ff = value(f, copy);
    record(axiom(3), is_zero(ff), {f, copy}, {ff}, "d(f,f) = " + ff.str());
  }

  /// Triangle inequality with g in the middle.
  void check_triangle(const SoftSet& f, const SoftSet& g, const SoftSet& h, const MeasureValue& fg,
                      const MeasureValue& gh, const MeasureValue& fh) {
    record(axiom(2), triangle_holds(fg, gh, fh), {f, g, h}, {fg, gh, fh}, sum_detail(fg, gh, fh));
  }

  void check_triple(const SoftSet& f, const SoftSet& g, const SoftSet& h) {
    const MeasureValue fg = value(f, g);
    const MeasureValue gh = value(g, h);
    const MeasureValue fh = value(f, h);
    check_triangle(f, g, h, fg, gh, fh);
    check_triangle(g, f, h, fg, fh, gh);
    check_triangle(f, h, g, fh, gh, fg);
  }

  void inject_worked_examples() {
    for (const auto& t : {worked::hamming_triangle_counterexample(), worked::cardinality_triangle_counterexample()}) {
      check_triangle(t.f, t.g, t.h, value(t.f, t.g), value(t.g, t.h), value(t.f, t.h));
      check_pair(t.f, t.g);
      check_pair(t.g, t.h);
      check_pair(t.f, t.h);
      for (const SoftSet* s : {&t.f, &t.g, &t.h}) check_identity(*s);
    }
    const auto [f, g] = worked::cardinality_zero_pair();
    check_pair(f, g);
  }

  AxiomReport take() { return std::move(report_); }

 private:
  AxiomResult& axiom(std::size_t i) { return report_.axioms[i]; }

  MeasureId id_;
  SimilarityConfig config_;
  AxiomReport report_;
};

inline void require_kind(MeasureId id, MeasureKind kind) {
  if (measure_kind(id) != kind) {
    throw PreconditionError("'" + measure_name(id) + "' is not a " +
                            (kind == MeasureKind::Distance ? "distance" : "similarity") + " measure");
  }
}

}  // namespace detail

/// Tests M1..M5 on the worked counterexamples plus `trials` random draws.
/// Each trial draws a space, a soft set f, and g, h that are either fresh or
/// small edits of the previous set; M3 is checked with each of the three
/// sets in the middle.
inline AxiomReport classify_measure(MeasureId id, SoftSetSampler& sampler, std::size_t trials,
                                    const SimilarityConfig& config = {}) {
  detail::require_kind(id, MeasureKind::Distance);
  if (trials < 1) throw PreconditionError("classification needs at least one trial");
  detail::DistanceChecker checker(id, config);
  checker.inject_worked_examples();
  for (std::size_t t = 0; t < trials; ++t) {
    const SpacePtr space = sampler.draw_space();
    const SoftSet f = sampler.draw(space);
    const SoftSet g = sampler.coin() ? sampler.perturb(f) : sampler.draw(space);
    const SoftSet h = sampler.coin() ? sampler.perturb(g) : sampler.draw(space);
    checker.check_identity(f);
    checker.check_pair(f, g);
    checker.check_pair(g, h);
    checker.check_triple(f, g, h);
  }
  return checker.take();
}

/// Tests M1..M5 on every pair and ordered triple of soft sets with non-empty
/// domain over `space`.
inline AxiomReport classify_exhaustive(MeasureId id, const SpacePtr& space, const SimilarityConfig& config = {}) {
  detail::require_kind(id, MeasureKind::Distance);
  const std::vector<SoftSet> sets = enumerate_soft_sets(space, true);
  const std::size_t n = sets.size();
  detail::DistanceChecker checker(id, config);
  std::vector<MeasureValue> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = checker.value(sets[i], sets[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    checker.check_identity(sets[i]);
    for (std::size_t j = 0; j < n; ++j) {
      checker.check_pair(sets[i], sets[j], table[i * n + j], table[j * n + i]);
      for (std::size_t k = 0; k < n; ++k) {
        checker.check_triangle(sets[i], sets[j], sets[k], table[i * n + j], table[j * n + k], table[i * n + k]);
      }
    }
  }
  return checker.take();
}

/// Metric-hierarchy label from an M1..M5 report.
inline std::string metric_class(const AxiomReport& r) {
  if (!r.held("M1") || !r.held("M2")) return "none";
  if (!r.held("M3")) return "quasi-metric";
  if (!r.held("M4")) return "semi-metric";
  if (!r.held("M5")) return "pseudo-metric";
  return "metric";
}

namespace detail {

class SimilarityChecker {
 public:
  SimilarityChecker(MeasureId id, const SimilarityConfig& config) : id_(id), config_(config) {
    for (const char* name : {"s1", "s2", "s3", "s4"}) {
      report_.axioms.push_back(AxiomResult{name, Verdict::HeldOnSample, 0, std::nullopt});
    }
    report_.measure = measure_name(id);
  }

  MeasureValue value(const SoftSet& f, const SoftSet& g) const { return evaluate(id_, f, g, config_); }

  void check_range(const SoftSet& f, const SoftSet& g, const MeasureValue& v) {
    const bool ok = v.defined && compare(v, ExactValue(0)) >= 0 && compare(v, ExactValue(1)) <= 0;
    record(report_.axioms[0], ok, {f, g}, {v}, v.str() + " outside [0,1]");
  }

  void check_identity(const SoftSet& f) {
    const SoftSet copy(f.space_ptr(), f.assignment());
    const MeasureValue ff = value(f, copy);
    check_range(f, copy, ff);
    record(report_.axioms[1], ff.defined && compare(ff, ExactValue(1)) == 0, {f, copy}, {ff},
           "S(f,f) = " + ff.str());
  }

  void check_pair(const SoftSet& f, const SoftSet& g) {
    const MeasureValue fg = value(f, g);
    const MeasureValue gf = value(g, f);
    check_range(f, g, fg);
    const bool symmetric = (!fg.defined && !gf.defined) || (fg.defined && gf.defined && compare(fg, gf) == 0);
    record(report_.axioms[2], symmetric, {f, g}, {fg, gf}, fg.str() + " != " + gf.str());
  }

  /// f ⊆ g ⊆ h: S(f,h) <= S(f,g) and S(f,h) <= S(g,h).
  void check_chain(const SoftSet& f, const SoftSet& g, const SoftSet& h) {
    const MeasureValue fh = value(f, h);
    const MeasureValue fg = value(f, g);
    const MeasureValue gh = value(g, h);
    const bool defined = fh.defined && fg.defined && gh.defined;
    const bool ok = defined && compare(fh, fg) <= 0 && compare(fh, gh) <= 0;
    record(report_.axioms[3], ok, {f, g, h}, {fh, fg, gh},
           "S(f,h) = " + fh.str() + ", S(f,g) = " + fg.str() + ", S(g,h) = " + gh.str());
  }

  AxiomReport take() { return std::move(report_); }

 private:
  MeasureId id_;
  SimilarityConfig config_;
  AxiomReport report_;
};

}  // namespace detail

/// Tests s1..s4. Per trial: s1 and s2 on (f,f), s1 and s3 on a pair (f,g),
/// and s4 on one constructively nested chain.
inline AxiomReport check_similarity_axioms(MeasureId id, SoftSetSampler& sampler, std::size_t trials,
                                           const SimilarityConfig& config = {}) {
  detail::require_kind(id, MeasureKind::Similarity);
  if (trials < 1) throw PreconditionError("axiom check needs at least one trial");
  config.validate();
  detail::SimilarityChecker checker(id, config);
  const auto ex = worked::superiority_example();
  for (const SoftSet* s : {&ex.f, &ex.g, &ex.h}) checker.check_identity(*s);
  checker.check_pair(ex.f, ex.h);
  checker.check_pair(ex.g, ex.h);
  for (std::size_t t = 0; t < trials; ++t) {
    const SpacePtr space = sampler.draw_space();
    const SoftSet f = sampler.draw(space);
    checker.check_identity(f);
    const SoftSet g = sampler.coin() ? sampler.perturb(f) : sampler.draw(space);
    checker.check_pair(f, g);
    const auto chain = sampler.draw_chain(space);
    checker.check_chain(chain[0], chain[1], chain[2]);
  }
  return checker.take();
}

/// Re-evaluates a stored witness; true when it still violates its axiom.
inline bool witness_reproduces(MeasureId id, const AxiomResult& result, const SimilarityConfig& config = {}) {
  if (!result.witness) return false;
  const auto& s = result.witness->sets;
  const auto v = [&](const SoftSet& a, const SoftSet& b) { return evaluate(id, a, b, config); };
  const auto between = [](const MeasureValue& x, int lo, int hi) {
    return x.defined && compare(x, ExactValue(lo)) >= 0 && compare(x, ExactValue(hi)) <= 0;
  };
  const std::string& a = result.axiom;
  if (a == "M1") return !(v(s[0], s[1]).defined && compare(v(s[0], s[1]), ExactValue(0)) >= 0);
  if (a == "M2" || a == "s3") {
    const auto x = v(s[0], s[1]);
    const auto y = v(s[1], s[0]);
    if (!x.defined || !y.defined) return x.defined != y.defined;
    return compare(x, y) != 0;
  }
  if (a == "M3") return !detail::triangle_holds(v(s[0], s[1]), v(s[1], s[2]), v(s[0], s[2]));
  if (a == "M4") return !detail::is_zero(v(s[0], s[1]));
  if (a == "M5") return detail::is_zero(v(s[0], s[1])) && !soft_equal(s[0], s[1]);
  if (a == "s1") return !between(v(s[0], s[1]), 0, 1);
  if (a == "s2") return !(v(s[0], s[1]).defined && compare(v(s[0], s[1]), ExactValue(1)) == 0);
  if (a == "s4") {
    const auto fh = v(s[0], s[2]);
    const auto fg = v(s[0], s[1]);
    const auto gh = v(s[1], s[2]);
    if (!fh.defined || !fg.defined || !gh.defined) return true;
    return compare(fh, fg) > 0 || compare(fh, gh) > 0;
  }
  return false;
}

/// One line per axiom; witnesses are serialized in the soft-set file format.
inline std::string render(const AxiomReport& report, bool distance) {
  std::ostringstream out;
  out << "measure " << report.measure;
  if (distance) out << ": " << metric_class(report);
  out << '\n';
  for (const auto& a : report.axioms) {
    out << a.axiom << ' ' << (a.held() ? "held-on-sample" : "violated") << " checks=" << a.checks;
    if (a.witness) {
      out << " witness=[";
      for (std::size_t i = 0; i < a.witness->sets.size(); ++i) {
        out << (i ? "," : "") << serialize(a.witness->sets[i]);
      }
      out << "] values=[";
      for (std::size_t i = 0; i < a.witness->values.size(); ++i) {
        out << (i ? "," : "") << a.witness->values[i].str();
      }
      out << "] (" << a.witness->detail << ")";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace softsim
