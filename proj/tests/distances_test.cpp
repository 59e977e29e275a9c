#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "softsim/distances.hpp"
#include "softsim/sampling.hpp"
#include "softsim/worked_examples.hpp"

using namespace softsim;

namespace {

Rational exact_rational(const MeasureValue& v) {
  EXPECT_TRUE(v.exact && v.exact->is_rational());
  return v.exact ? v.exact->as_rational().value_or(Rational(-1)) : Rational(-1);
}

Rational as_rational(const oracle::Fraction& f) { return {f.num, f.den}; }

// Random pairs over spaces up to 4x4, half of them small edits of each other.
std::vector<std::pair<SoftSet, SoftSet>> sample_pairs(std::uint64_t seed, int count) {
  SoftSetSampler sampler(SamplerOptions{.seed = seed});
  std::vector<std::pair<SoftSet, SoftSet>> out;
  for (int i = 0; i < count; ++i) {
    SoftSet f = sampler.draw(sampler.draw_space());
    SoftSet g = sampler.coin() ? sampler.perturb(f) : sampler.draw(f.space_ptr());
    if (g.domain_size() == 0) g = f;
    out.emplace_back(std::move(f), std::move(g));
  }
  return out;
}

}  // namespace

TEST(HammingQuasi, TriangleCounterexample) {
  const auto t = worked::hamming_triangle_counterexample();
  EXPECT_EQ(exact_rational(hamming_quasi(t.f, t.g)), 4);
  EXPECT_EQ(exact_rational(hamming_quasi(t.g, t.h)), 5);
  EXPECT_EQ(exact_rational(hamming_quasi(t.f, t.h)), 10);
  EXPECT_EQ(exact_rational(hamming_quasi_norm(t.f, t.g)), Rational(5, 4));
  EXPECT_EQ(exact_rational(hamming_quasi_norm(t.g, t.h)), Rational(4, 3));
  EXPECT_EQ(exact_rational(hamming_quasi_norm(t.f, t.h)), Rational(17, 6));
}

TEST(CardinalitySemi, TriangleCounterexample) {
  const auto t = worked::cardinality_triangle_counterexample();
  EXPECT_EQ(exact_rational(cardinality_semi(t.f, t.g)), 3);
  EXPECT_EQ(exact_rational(cardinality_semi(t.g, t.h)), 1);
  EXPECT_EQ(exact_rational(cardinality_semi(t.f, t.h)), 5);
  EXPECT_EQ(exact_rational(cardinality_semi_norm(t.f, t.g)), Rational(11, 12));
  EXPECT_EQ(exact_rational(cardinality_semi_norm(t.g, t.h)), Rational(1, 3));
  EXPECT_EQ(exact_rational(cardinality_semi_norm(t.f, t.h)), Rational(19, 12));
}

TEST(CardinalitySemi, ZeroForDistinctSoftSets) {
  const auto [f, g] = worked::cardinality_zero_pair();
  EXPECT_FALSE(soft_equal(f, g));
  EXPECT_EQ(exact_rational(cardinality_semi(f, g)), 0);
  EXPECT_EQ(exact_rational(cardinality_semi_norm(f, g)), 0);
}

TEST(Euclid, WorkedValues) {
  const auto sup = worked::superiority_example();
  EXPECT_EQ(euclid(sup.f, sup.h).exact->str(), "1+sqrt(3)");
  const auto fin = worked::financial_example();
  EXPECT_EQ(euclid(fin.f, fin.h).exact->str(), "3+sqrt(7)");
  EXPECT_EQ(exact_rational(euclid(fin.g, fin.h)), 1);
}

TEST(Distances, SelfDistanceIsZero) {
  for (const auto& [f, g] : sample_pairs(21, 300)) {
    (void)g;
    for (auto fn : {hamming_quasi, hamming_quasi_norm, cardinality_semi, cardinality_semi_norm, euclid,
                    euclid_norm, euclid_literal, euclid_norm_literal}) {
      EXPECT_EQ(exact_rational(fn(f, f)), 0);
    }
  }
}

TEST(Distances, AgreeWithSetOracle) {
  for (const auto& [f, g] : sample_pairs(22, 2000)) {
    const oracle::Naive a = oracle::from(f);
    const oracle::Naive b = oracle::from(g);
    EXPECT_EQ(exact_rational(hamming_quasi(f, g)), oracle::d(a, b));
    EXPECT_EQ(exact_rational(hamming_quasi_norm(f, g)), as_rational(oracle::l(a, b)));
    EXPECT_EQ(exact_rational(cardinality_semi(f, g)), oracle::c(a, b));
    EXPECT_EQ(exact_rational(cardinality_semi_norm(f, g)), as_rational(oracle::p(a, b)));
    EXPECT_NEAR(euclid(f, g).value, static_cast<double>(oracle::e(a, b)), 1e-12);
    EXPECT_NEAR(euclid_norm(f, g).value, static_cast<double>(oracle::q(a, b)), 1e-12);
    EXPECT_NEAR(euclid_literal(f, g).value, static_cast<double>(oracle::e(a, b, 2)), 1e-12);
    EXPECT_NEAR(euclid_norm_literal(f, g).value, static_cast<double>(oracle::q(a, b, 2)), 1e-12);
  }
}

TEST(Distances, SymmetricAndNonNegative) {
  for (const auto& [f, g] : sample_pairs(23, 1000)) {
    for (auto fn : {hamming_quasi, hamming_quasi_norm, cardinality_semi, cardinality_semi_norm, euclid,
                    euclid_norm}) {
      EXPECT_EQ(fn(f, g).exact, fn(g, f).exact);
      EXPECT_GE(fn(f, g).value, 0.0);
    }
  }
}

TEST(Distances, ZeroExactlyOnEqualSoftSets) {
  for (const auto& [f, g] : sample_pairs(24, 2000)) {
    const bool equal = soft_equal(f, g);
    for (auto fn : {hamming_quasi, hamming_quasi_norm, euclid, euclid_norm}) {
      EXPECT_EQ(fn(f, g).exact->surd().is_zero(), equal);
    }
  }
}

TEST(Euclid, SquaredValuePartEqualsHammingValuePart) {
  // (d - |A delta B|) = (e - |A delta B|)^2
  for (const auto& [f, g] : sample_pairs(25, 2000)) {
    const oracle::Naive a = oracle::from(f);
    const auto domain = static_cast<std::int64_t>(oracle::sym_diff(oracle::keys(a), oracle::keys(oracle::from(g))).size());
    const Surd value_part = euclid(f, g).exact->surd() - Surd(domain);
    const Surd squared = value_part * value_part;
    ASSERT_TRUE(squared.is_rational());
    EXPECT_EQ(squared.rational_part(), exact_rational(hamming_quasi(f, g)) - domain);
  }
}

TEST(Distances, ComplementIdentitiesUnderNegatedAttributes) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& f : enumerate_soft_sets(standard_space(m, n))) {
        const auto pair = complement_pair(f, ComplementConvention::NegatedAttributes);
        const auto twice = static_cast<std::int64_t>(2 * f.domain_size());
        EXPECT_EQ(exact_rational(hamming_quasi(pair.original, pair.complement)), twice);
        EXPECT_EQ(exact_rational(euclid(pair.original, pair.complement)), twice);
        EXPECT_EQ(euclid_norm(pair.original, pair.complement).exact->surd(), Surd::sqrt(twice));
      }
    }
  }
}

TEST(Distances, ComplementIdentitiesFailUnderSameAttributes) {
  const SpacePtr s = standard_space(2, 2);
  const SoftSet f = SoftSet::from_names(s, {{"e1", {"x1"}}});
  // same domain, so only the value part counts: sqrt(2) rather than 2|A| = 2
  EXPECT_EQ(euclid(f, soft_complement(f)).exact->surd(), Surd::sqrt(2));
  EXPECT_EQ(exact_rational(hamming_quasi(f, soft_complement(f))), 2);
  EXPECT_EQ(euclid_norm(f, soft_complement(f)).exact->surd(), Surd(1));
}

TEST(Distances, ExtremeSoftSets) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const SpacePtr s = standard_space(m, n);
      const auto mm = static_cast<std::int64_t>(m);
      const auto nn = static_cast<std::int64_t>(n);
      EXPECT_EQ(euclid(null_soft_set(s), whole_soft_set(s)).exact->surd(), Surd::sqrt(mm * nn));
      EXPECT_EQ(euclid_norm(null_soft_set(s), whole_soft_set(s)).exact->surd(), Surd::sqrt(mm));
      EXPECT_EQ(exact_rational(hamming_quasi(null_soft_set(s), whole_soft_set(s))), mm * nn);
    }
  }
}

TEST(Distances, EmptyDomainRejected) {
  const SpacePtr s = standard_space(2, 2);
  const SoftSet empty(s, {});
  const SoftSet f = SoftSet::from_names(s, {{"e1", {}}});
  for (auto fn : {hamming_quasi, hamming_quasi_norm, euclid, euclid_norm, euclid_literal, euclid_norm_literal}) {
    EXPECT_THROW(fn(empty, f), PreconditionError);
    EXPECT_THROW(fn(f, empty), PreconditionError);
  }
  // all-empty value sets with a non-empty domain are fine
  EXPECT_EQ(exact_rational(euclid(f, f)), 0);
  EXPECT_THROW(hamming_quasi(f, SoftSet::from_names(standard_space(2, 3), {{"e1", {}}})), SpaceMismatchError);
}

TEST(Euclid, TriangleFailsOnceUniverseHasFiveElements) {
  // F={e1=X, e2={a}}, G={e2={a}}, H={e1=∅, e2={a}}: 1 + 1 against sqrt(|X|)
  for (std::size_t n = 1; n <= 6; ++n) {
    const SpacePtr s = standard_space(2, n);
    const SoftSet f = SoftSet(s, {{0, ElementSet(n).set()}, {1, ElementSet(n, 1)}});
    const SoftSet g = SoftSet(s, {{1, ElementSet(n, 1)}});
    const SoftSet h = SoftSet(s, {{0, ElementSet(n)}, {1, ElementSet(n, 1)}});
    const Surd slack = euclid(f, g).exact->surd() + euclid(g, h).exact->surd() - euclid(f, h).exact->surd();
    EXPECT_EQ(slack.sign() < 0, n >= 5) << "n=" << n;
  }
}

TEST(LiteralVariants, TriangleFailsOnSmallSpaces) {
  const SpacePtr s23 = standard_space(2, 3);
  const SoftSet f = SoftSet::from_names(s23, {{"e2", {}}});
  const SoftSet g = SoftSet::from_names(s23, {{"e1", {}}});
  const SoftSet h = SoftSet::from_names(s23, {{"e1", {}}, {"e2", {"x1", "x2", "x3"}}});
  EXPECT_EQ(exact_rational(euclid_literal(f, g)) + exact_rational(euclid_literal(g, h)), 3);
  EXPECT_EQ(exact_rational(euclid_literal(f, h)), 4);
  EXPECT_EQ(euclid(f, h).exact->str(), "1+sqrt(3)");

  const SpacePtr s32 = standard_space(3, 2);
  const SoftSet a = SoftSet::from_names(s32, {{"e1", {}}, {"e2", {}}, {"e3", {}}});
  const SoftSet b = SoftSet::from_names(s32, {{"e2", {}}, {"e3", {}}});
  const SoftSet c = SoftSet::from_names(s32, {{"e1", {"x1", "x2"}}});
  const Surd slack = euclid_norm_literal(a, b).exact->surd() + euclid_norm_literal(b, c).exact->surd() -
                     euclid_norm_literal(a, c).exact->surd();
  EXPECT_LT(slack.to_long_double(), 0);
  const Surd fixed = euclid_norm(a, b).exact->surd() + euclid_norm(b, c).exact->surd() -
                     euclid_norm(a, c).exact->surd();
  EXPECT_GE(fixed.to_long_double(), 0);
}
