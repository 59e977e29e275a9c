#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "softsim/registry.hpp"
#include "softsim/sampling.hpp"
#include "softsim/worked_examples.hpp"

using namespace softsim;

namespace {

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

const std::vector<MeasureId> kBounded = {MeasureId::KoczyE, MeasureId::KoczyQ, MeasureId::WilliamsE,
                                         MeasureId::WilliamsQ, MeasureId::MsPrime, MeasureId::MNorm};

}  // namespace

TEST(MatchingM, ExtremeSoftSets) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const SpacePtr s = standard_space(m, n);
      EXPECT_EQ(matching_similarity_m(null_soft_set(s), whole_soft_set(s)).raw.exact, ExactValue(1));
    }
  }
}

TEST(MatchingM, ZeroAgainstNegatedComplement) {
  for (const auto& f : enumerate_soft_sets(standard_space(2, 2))) {
    const auto pair = complement_pair(f, ComplementConvention::NegatedAttributes);
    EXPECT_EQ(matching_similarity_m(pair.original, pair.complement).raw.exact, ExactValue(0));
  }
  // under SameAttributes the domain term alone is already 1
  const SoftSet f = SoftSet::from_names(standard_space(2, 2), {{"e1", {"x1"}}});
  EXPECT_EQ(matching_similarity_m(f, soft_complement(f)).raw.exact, ExactValue(1));
}

TEST(MatchingM, SuperiorityPair) {
  const auto ex = worked::superiority_example();
  const auto m = matching_similarity_m(ex.g, ex.h);
  EXPECT_EQ(m.raw.exact, ExactValue(Rational(5, 3)));
  EXPECT_EQ(m.normalized.exact, ExactValue(Rational(5, 6)));
}

TEST(MatchingM, Conventions) {
  const SpacePtr s = standard_space(2, 2);
  const SoftSet none(s, {});
  EXPECT_FALSE(matching_similarity_m(none, none).raw.defined);
  EXPECT_FALSE(matching_similarity_m(none, none).normalized.defined);
  const SoftSet empties = SoftSet::from_names(s, {{"e1", {}}});
  EXPECT_EQ(matching_similarity_m(empties, empties).raw.exact, ExactValue(2));
  EXPECT_EQ(matching_similarity_m(none, empties).raw.exact, ExactValue(0));
  EXPECT_EQ(matching_similarity_m(SoftSet::from_names(s, {{"e1", {"x1"}}}), SoftSet::from_names(s, {{"e2", {"x1"}}}))
                .raw.exact,
            ExactValue(0));
}

TEST(MatchingM, AgreesWithOracle) {
  for (const auto& [f, g] : sample_pairs(31, 2000)) {
    const auto m = matching_similarity_m(f, g);
    EXPECT_NEAR(m.raw.value, static_cast<double>(oracle::matching_m(oracle::from(f), oracle::from(g))), 1e-12);
    EXPECT_EQ(m.raw.exact, matching_similarity_m(g, f).raw.exact);
    EXPECT_GE(m.normalized.value, 0.0);
    EXPECT_LE(m.normalized.value, 1.0);
  }
}

TEST(Koczy, SuperiorityValues) {
  const auto ex = worked::superiority_example();
  EXPECT_EQ(koczy_e(ex.f, ex.h).exact->str(), "1/(2+sqrt(3))");
  EXPECT_NEAR(koczy_e(ex.f, ex.h).value, 0.2679, 1e-4);
  EXPECT_EQ(koczy_e(ex.g, ex.h).exact, ExactValue(Rational(1, 2)));
  EXPECT_EQ(koczy_e(ex.h, ex.h).exact, ExactValue(1));
}

TEST(Williams, DirectSubstitution) {
  const SpacePtr s = standard_space(1, 2);
  const SoftSet f = SoftSet::from_names(s, {{"e1", {"x1"}}});
  const SoftSet g = SoftSet::from_names(s, {{"e1", {}}});
  EXPECT_DOUBLE_EQ(williams_e(f, g, 1.0).value, std::exp(-1.0));
  EXPECT_DOUBLE_EQ(williams_e(f, g, 2.5).value, std::exp(-2.5));
  EXPECT_DOUBLE_EQ(williams_e(f, f, 7.0).value, 1.0);
  EXPECT_THROW(williams_e(f, g, 0.0), PreconditionError);
  EXPECT_THROW(williams_q(f, g, -1.0), PreconditionError);
}

TEST(Similarity, ComplementIdentitiesUnderNegatedAttributes) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& f : enumerate_soft_sets(standard_space(m, n))) {
        const auto pair = complement_pair(f, ComplementConvention::NegatedAttributes);
        const auto twice = static_cast<std::int64_t>(2 * f.domain_size());
        EXPECT_EQ(koczy_e(pair.original, pair.complement).exact, ExactValue(Rational(1, 1 + twice)));
        EXPECT_EQ(koczy_q(pair.original, pair.complement).exact,
                  ExactValue::reciprocal(Surd(1) + Surd::sqrt(twice)));
        for (double alpha : {0.5, 1.0, 2.0}) {
          EXPECT_NEAR(williams_e(pair.original, pair.complement, alpha).value, std::exp(-twice * alpha), 1e-12);
          EXPECT_NEAR(williams_q(pair.original, pair.complement, alpha).value,
                      std::exp(-std::sqrt(static_cast<double>(twice)) * alpha), 1e-12);
        }
      }
    }
  }
}

TEST(Similarity, ExtremeSoftSetIdentities) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const SpacePtr s = standard_space(m, n);
      const auto mm = static_cast<std::int64_t>(m);
      const auto mn = static_cast<std::int64_t>(m * n);
      const SoftSet lo = null_soft_set(s);
      const SoftSet hi = whole_soft_set(s);
      EXPECT_EQ(koczy_e(lo, hi).exact, ExactValue::reciprocal(Surd(1) + Surd::sqrt(mn)));
      EXPECT_EQ(koczy_q(lo, hi).exact, ExactValue::reciprocal(Surd(1) + Surd::sqrt(mm)));
      EXPECT_NEAR(williams_e(lo, hi, 1.5).value, std::exp(-1.5 * std::sqrt(static_cast<double>(mn))), 1e-12);
      EXPECT_NEAR(williams_q(lo, hi, 1.5).value, std::exp(-1.5 * std::sqrt(static_cast<double>(mm))), 1e-12);
    }
  }
}

TEST(Similarity, InUnitIntervalAndOneOnlyForEqualSoftSets) {
  for (const auto& [f, g] : sample_pairs(32, 1500)) {
    for (MeasureId id : {MeasureId::KoczyE, MeasureId::KoczyQ, MeasureId::WilliamsE, MeasureId::WilliamsQ}) {
      const MeasureValue v = evaluate(id, f, g);
      EXPECT_GT(v.value, 0.0);
      EXPECT_LE(v.value, 1.0);
      EXPECT_EQ(compare(v, ExactValue(1)) == 0, soft_equal(f, g)) << measure_name(id);
    }
  }
}

TEST(Similarity, DecreasesAsDistanceGrows) {
  auto pairs = sample_pairs(33, 600);
  const SimilarityConfig config{.steepness = 0.7};
  for (auto [dist, sims] : {std::pair{MeasureId::E, std::pair{MeasureId::KoczyE, MeasureId::WilliamsE}},
                            std::pair{MeasureId::Q, std::pair{MeasureId::KoczyQ, MeasureId::WilliamsQ}}}) {
    std::vector<std::tuple<double, double, double>> rows;
    for (const auto& [f, g] : pairs) {
      rows.emplace_back(evaluate(dist, f, g).value, evaluate(sims.first, f, g).value,
                        evaluate(sims.second, f, g, config).value);
    }
    std::sort(rows.begin(), rows.end());
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& [d0, k0, w0] = rows[i - 1];
      const auto& [d1, k1, w1] = rows[i];
      if (d1 > d0 + 1e-12) {
        EXPECT_LT(k1, k0);
        EXPECT_LT(w1, w0);
      }
    }
  }
}

TEST(AlphaSimilar, ReflexiveAndSymmetric) {
  SoftSetSampler thresholds(SamplerOptions{.seed = 34});
  for (const auto& [f, g] : sample_pairs(35, 500)) {
    const Rational alpha(static_cast<std::int64_t>(thresholds.below(99)) + 1, 100);
    for (MeasureId id : {MeasureId::KoczyE, MeasureId::KoczyQ, MeasureId::WilliamsE, MeasureId::WilliamsQ}) {
      EXPECT_TRUE(is_alpha_similar(f, f, id, alpha));
      EXPECT_EQ(is_alpha_similar(f, g, id, alpha), is_alpha_similar(g, f, id, alpha));
    }
  }
}

TEST(AlphaSimilar, ThresholdBehaviour) {
  const auto ex = worked::superiority_example();
  EXPECT_FALSE(is_alpha_similar(ex.f, ex.h, MeasureId::KoczyE, Rational(3, 10)));
  EXPECT_TRUE(is_alpha_similar(ex.f, ex.h, MeasureId::KoczyE, Rational(1, 4)));
  EXPECT_THROW(is_alpha_similar(ex.f, ex.h, MeasureId::KoczyE, Rational(0)), PreconditionError);
  EXPECT_THROW(is_alpha_similar(ex.f, ex.h, MeasureId::KoczyE, Rational(1)), PreconditionError);
  EXPECT_THROW(is_alpha_similar(ex.f, ex.h, MeasureId::E, Rational(1, 2)), PreconditionError);
  const SoftSet empty = null_soft_set(ex.f.space_ptr());
  EXPECT_THROW(is_alpha_similar(empty, empty, MeasureId::MsMatching, Rational(1, 2)), UndefinedMeasureError);
}

TEST(SignificantSimilarity, VerdictsFlipBetweenMeasures) {
  const auto ex = worked::superiority_example();
  EXPECT_TRUE(is_significantly_similar(ex.f, ex.h, MeasureId::MsPrime));
  EXPECT_TRUE(is_significantly_similar(ex.g, ex.h, MeasureId::MsPrime));
  EXPECT_FALSE(is_significantly_similar(ex.f, ex.h, MeasureId::KoczyE));
  EXPECT_TRUE(is_significantly_similar(ex.g, ex.h, MeasureId::KoczyE));  // exactly 1/2, inclusive
}

TEST(SimilarityConfig, Validation) {
  EXPECT_NO_THROW(SimilarityConfig{}.validate());
  EXPECT_THROW((SimilarityConfig{.steepness = 0.0}.validate()), PreconditionError);
  EXPECT_THROW((SimilarityConfig{.steepness = std::nan("")}.validate()), PreconditionError);
  EXPECT_THROW((SimilarityConfig{.alpha_threshold = Rational(3, 2)}.validate()), PreconditionError);
}

TEST(Registry, NamesRoundTrip) {
  for (MeasureKind kind : {MeasureKind::Distance, MeasureKind::Similarity}) {
    for (MeasureId id : all_measures(kind)) {
      EXPECT_EQ(parse_measure(measure_name(id)), id);
      EXPECT_EQ(measure_kind(id), kind);
    }
  }
  EXPECT_EQ(all_measures(MeasureKind::Distance).size() + all_measures(MeasureKind::Similarity).size(), 20u);
  EXPECT_THROW(parse_measure("cosine"), UnknownMeasureError);
}

TEST(Registry, BoundedMeasuresStayInRange) {
  for (const auto& [f, g] : sample_pairs(36, 500)) {
    for (MeasureId id : kBounded) {
      const MeasureValue v = evaluate(id, f, g);
      EXPECT_GE(v.value, 0.0) << measure_name(id);
      EXPECT_LE(v.value, 1.0) << measure_name(id);
    }
  }
}
