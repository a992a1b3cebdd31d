#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "structctl/decision.hpp"
#include "structctl/errors.hpp"
#include "structctl/oracle/oracle.hpp"
#include "test_support.hpp"

namespace structctl {
namespace {

using testing::make_pattern;
using testing::read_fixture;

constexpr auto kControllable = Verdict::structurally_controllable;
constexpr auto kUncontrollable = Verdict::structurally_uncontrollable;

TEST(Verdict, Strings) {
  EXPECT_EQ(to_string(kControllable), "structurally_controllable");
  EXPECT_EQ(to_phrase(kUncontrollable), "structurally uncontrollable");
}

TEST(Analyze, Coupled2x3) {
  const AnalysisReport r = analyze(parse_pattern(read_fixture("coupled_2x3.pat")));
  EXPECT_EQ(r.verdict, kControllable);
  EXPECT_TRUE(r.minimal);
  EXPECT_EQ(r.term_rank, 2u);
  EXPECT_TRUE(r.redundant_edges.empty());
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_FALSE(r.components[0].is_square());
  EXPECT_EQ(r.components[0].max_weight, std::optional<Degree>(2));
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Analyze, Coupled2x3AllDegreeOne) {
  EXPECT_EQ(analyze(parse_pattern(read_fixture("coupled_2x3_degree1.pat"))).verdict, kControllable);
}

TEST(Analyze, ScalarFirstOrderEquationIsUncontrollable) {
  const AnalysisReport r = analyze(parse_pattern(read_fixture("scalar_degree1.pat")));
  EXPECT_EQ(r.verdict, kUncontrollable);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->edge, (Edge{0, 0, 1}));
}

TEST(Analyze, ScalarConstantIsControllable) {
  EXPECT_EQ(analyze(make_pattern(1, 1, {{1, 1, 0}})).verdict, kControllable);
}

TEST(Analyze, BlockWitness) {
  const AnalysisReport r = analyze(parse_pattern(read_fixture("block_witness.pat")));
  EXPECT_EQ(r.verdict, kUncontrollable);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_TRUE(r.components[0].is_square());
  EXPECT_FALSE(r.components[1].is_square());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->component, 0u);
  EXPECT_EQ(r.witness->edge, (Edge{0, 0, 1}));
}

TEST(Analyze, RedundantHighDegreeEdgeDoesNotCount) {
  // (1,1) is redundant; what remains is a constant perfect matching.
  const AnalysisReport r = analyze(make_pattern(2, 2, {{1, 1, 5}, {1, 2, 0}, {2, 1, 0}}));
  EXPECT_EQ(r.verdict, kControllable);
  EXPECT_EQ(r.redundant_edges, (std::vector<Edge>{{0, 0, 5}}));
}

TEST(Analyze, RankDeficientPattern) {
  // Both rows see only column 1: term rank 1, not minimal.
  const AnalysisReport r = analyze(make_pattern(2, 2, {{1, 1, 1}, {2, 1, 1}}));
  EXPECT_FALSE(r.minimal);
  EXPECT_EQ(r.term_rank, 1u);
  EXPECT_EQ(r.verdict, kControllable);
}

TEST(Analyze, EmptyPatternIsAnError) {
  EXPECT_THROW(analyze(PolyPattern(2, 3)), ZeroTermRankError);
}

TEST(Analyze, MarkingOptionGivesSameReport) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const PolyPattern p = testing::random_small_pattern(rng, 4, 5, 12, 2);
    const AnalysisReport a = analyze(p);
    const AnalysisReport b = analyze(p, {.reduction = {.mark_matched = true}});
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.redundant_edges, b.redundant_edges);
    EXPECT_EQ(a.components.size(), b.components.size());
  }
}

TEST(Analyze, InvariantUnderRowAndColumnPermutation) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    const PolyPattern p = testing::random_small_pattern(rng, 4, 5, 12, 2);
    std::vector<Index> pr(static_cast<std::size_t>(p.rows())), pc(static_cast<std::size_t>(p.cols()));
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    const AnalysisReport a = analyze(p);
    const AnalysisReport b = analyze(testing::permute(p, pr, pc));
    EXPECT_EQ(a.verdict, b.verdict) << emit_pattern(p);
    EXPECT_EQ(a.term_rank, b.term_rank);
    EXPECT_EQ(a.redundant_edges.size(), b.redundant_edges.size());
  }
}

TEST(Analyze, WitnessPresentIffUncontrollable) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    const AnalysisReport r = analyze(testing::random_small_pattern(rng, 4, 5, 12, 2));
    EXPECT_EQ(r.witness.has_value(), r.verdict == kUncontrollable);
    if (r.witness) {
      const ComponentSummary& c = r.components.at(r.witness->component);
      EXPECT_TRUE(c.is_square());
      EXPECT_GT(r.witness->edge.weight, 0);
    }
  }
}

TEST(Analyze, AgreesWithExactOracle) {
  std::mt19937_64 rng(101);
  const auto seeds = oracle::seed_range(1, 5);
  for (int k = 0; k < 120; ++k) {
    const PolyPattern p = testing::random_small_pattern(rng, 4, 5, 12, 2);
    const bool controllable = analyze(p).verdict == kControllable;
    EXPECT_EQ(controllable, oracle::oracle_zero_set_empty(p, seeds)) << emit_pattern(p);
  }
}

TEST(GenericNonsingular, MatchesTermRank) {
  EXPECT_TRUE(generic_nonsingular(make_pattern(2, 2, {{1, 2, 0}, {2, 1, 0}})));
  EXPECT_FALSE(generic_nonsingular(make_pattern(2, 2, {{1, 1, 0}, {2, 1, 0}})));
  EXPECT_THROW(generic_nonsingular(make_pattern(1, 2, {{1, 1, 0}})), InputError);
}

TEST(GenericUnimodular, HandCases) {
  // det = a*c with both constants.
  EXPECT_TRUE(generic_unimodular(make_pattern(2, 2, {{1, 1, 0}, {1, 2, 3}, {2, 2, 0}})));
  // det = a*d - b*c with a of degree 1.
  EXPECT_FALSE(generic_unimodular(make_pattern(2, 2, {{1, 1, 1}, {1, 2, 0}, {2, 1, 0}, {2, 2, 0}})));
  EXPECT_FALSE(generic_unimodular(make_pattern(2, 2, {{1, 1, 0}, {2, 1, 0}})));
}

TEST(GenericUnimodular, FullRankSquareAgreesWithAnalyze) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    const PolyPattern p = testing::random_square_pattern(rng, 4, 2);
    if (p.entry_count() == 0 || !generic_nonsingular(p)) continue;
    ++checked;
    EXPECT_EQ(generic_unimodular(p), analyze(p).verdict == kControllable) << emit_pattern(p);
  }
  EXPECT_GT(checked, 50);
}

TEST(PropertyP, HandCases) {
  EXPECT_TRUE(property_p_holds(parse_pattern(read_fixture("coupled_2x3.pat"))));
  EXPECT_FALSE(property_p_holds(parse_pattern(read_fixture("block_witness.pat"))));
  EXPECT_FALSE(property_p_holds(parse_pattern(read_fixture("scalar_degree1.pat"))));
  EXPECT_THROW(property_p_holds(make_pattern(2, 2, {{1, 1, 0}, {2, 1, 0}})), InputError);
  EXPECT_THROW(property_p_holds(PolyPattern(9, 9)), GuardError);
}

TEST(PropertyP, EquivalentToComponentRule) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    const PolyPattern p = testing::random_small_pattern(rng, 4, 5, 12, 2);
    if (testing::brute_force_term_rank(p) != static_cast<std::size_t>(p.rows())) continue;
    ++checked;
    EXPECT_TRUE(forced_subset_equiv_check(p)) << emit_pattern(p);
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace structctl
