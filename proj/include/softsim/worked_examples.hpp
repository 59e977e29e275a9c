#pragma once

// Small hand-built soft sets with known measure values. The axiom checkers
// inject the triangle and zero-distance counterexamples into every run.

#include <utility>

#include "softsim/soft_set.hpp"

namespace softsim::worked {

struct Triple {
  SoftSet f;
  SoftSet g;
  SoftSet h;
};

/// X={a,b,c,d}, E={e1..e4}; d = 4, 5, 10 and l = 5/4, 4/3, 17/6, so the
/// triangle inequality fails for both.
inline Triple hamming_triangle_counterexample() {
  const SpacePtr s = make_space({"a", "b", "c", "d"}, {"e1", "e2", "e3", "e4"});
  return {SoftSet::from_names(s, {{"e1", {"c", "b"}}, {"e2", {"b"}}, {"e3", {"a", "b", "c"}}, {"e4", {"d"}}}),
          SoftSet::from_names(s, {{"e2", {"b", "c"}}, {"e3", {"a", "b", "c", "d"}}}),
          SoftSet::from_names(s, {{"e1", {"b", "d"}}, {"e2", {"b", "c", "d"}}, {"e3", {"a", "d"}},
                                  {"e4", {"a", "b", "c", "d"}}})};
}

/// X={a,b,c}, E={e1..e4}; c = 3, 1, 5 and p = 11/12, 1/3, 19/12.
inline Triple cardinality_triangle_counterexample() {
  const SpacePtr s = make_space({"a", "b", "c"}, {"e1", "e2", "e3", "e4"});
  return {SoftSet::from_names(s, {{"e3", {"c"}}, {"e4", {"a"}}, {"e1", {"c", "b", "a"}}, {"e2", {"b", "a"}}}),
          SoftSet::from_names(s, {{"e3", {"c", "b"}}, {"e4", {"c", "b"}}, {"e2", {"b", "a"}}}),
          SoftSet::from_names(s, {{"e4", {"c", "b", "a"}}, {"e1", {"c"}}, {"e2", {"b", "a"}}})};
}

/// Two different soft sets at cardinality distance 0 (same space as above).
inline std::pair<SoftSet, SoftSet> cardinality_zero_pair() {
  const SpacePtr s = make_space({"a", "b", "c"}, {"e1", "e2", "e3", "e4"});
  return {SoftSet::from_names(s, {{"e4", {"b", "a"}}, {"e1", {}}}),
          SoftSet::from_names(s, {{"e3", {"b"}}, {"e4", {"c", "b"}}})};
}

/// X={a,b,c,d}, E={e1,e2,e3}: f = {e1=∅, e2=∅}, g = {e2={b,d}},
/// h = {e2={b,c,d}}. The matrix measure calls both f and g significantly
/// similar to h; the set-operation measure separates them.
inline Triple superiority_example() {
  const SpacePtr s = make_space({"a", "b", "c", "d"}, {"e1", "e2", "e3"});
  return {SoftSet::from_names(s, {{"e1", {}}, {"e2", {}}}),
          SoftSet::from_names(s, {{"e2", {"b", "d"}}}),
          SoftSet::from_names(s, {{"e2", {"b", "c", "d"}}})};
}

/// Financial-diagnosis space. Elements: i inflation, p profit-earning ratio,
/// s share price, c paid-up capital, m competition, d business
/// diversification, o future outlook, l debt level, f foreign direct
/// investment, x fixed income. Attributes: e1 fluctuating, e2 low, e3 rising,
/// e4 high, e5 bearish.
inline SpacePtr financial_space() {
  return make_space({"i", "p", "s", "c", "m", "d", "o", "l", "f", "x"}, {"e1", "e2", "e3", "e4", "e5"});
}

/// f = firm ABC, g = firm XYZ, h = liquidity-problem model.
inline Triple financial_example() {
  const SpacePtr s = financial_space();
  return {SoftSet::from_names(s, {{"e5", {"o", "s"}}, {"e3", {"p", "i"}}, {"e2", {"s", "f"}}}),
          SoftSet::from_names(s, {{"e1", {"s", "o"}}, {"e2", {"c"}}, {"e3", {"i", "m"}}, {"e4", {"i", "l"}},
                                  {"e5", {"p", "f"}}}),
          SoftSet::from_names(s, {{"e1", {"o", "s"}}, {"e2", {"c"}}, {"e4", {"i", "l"}}, {"e5", {"p", "f"}}})};
}

/// X={a,b,c}, E={e1,e2,e3}: the partial soft set {e1={a,c}, e3={b,c}}.
inline SoftSet partial_example() {
  const SpacePtr s = make_space({"a", "b", "c"}, {"e1", "e2", "e3"});
  return SoftSet::from_names(s, {{"e1", {"a", "c"}}, {"e3", {"b", "c"}}});
}

}  // namespace softsim::worked
