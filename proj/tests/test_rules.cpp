#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ttclab/errors.hpp"
#include "ttclab/fixtures.hpp"
#include "ttclab/matrix.hpp"
#include "ttclab/suites.hpp"

namespace ttclab {
namespace {

using testing::alloc;
using testing::lex;

TEST(Registry, NamesAndLookup) {
  std::vector<std::string> names;
  for (const auto& r : registered_rules()) names.push_back(r.name());
  EXPECT_EQ(names, (std::vector<std::string>{"ttc", "attc", "no_trade",
                                             "balanced_serial_dictatorship",
                                             "rule_not_tp", "rule_not_bal",
                                             "rule_not_welb", "rule_not_mar"}));
  EXPECT_EQ(find_rule("no_trade").name(), "no_trade");
  EXPECT_THROW(find_rule("nope"), InputError);
}

TEST(NoTrade, KeepsTheEndowment) {
  const Problem p = fixtures::three_agent_profile();
  EXPECT_EQ(no_trade_rule()(p), p.instance().endowment());
}

TEST(SerialDictatorship, GreedyTopSubsets) {
  const Problem p = fixtures::three_agent_profile();
  EXPECT_EQ(serial_dictatorship_rule()(p),
            alloc(p.instance(), {{"a", "c"}, {"b"}, {"d"}}));
}

TEST(NotTp, MatchesOnMarginals) {
  const Problem p = fixtures::not_tp_profile();
  const Instance& inst = p.instance();
  EXPECT_EQ(not_tp_rule()(p), alloc(inst, {{"a", "c"}, {"b"}}));
  const Problem resp = p.with_preference(
      0,
      Preference::responsive_unchecked(ranking(inst, {"c", "a", "b"}),
                                       ResponsiveComparator::cardinality_first(
                                           ranking(inst, {"c", "a", "b"}))));
  EXPECT_EQ(not_tp_rule()(resp), alloc(inst, {{"a", "c"}, {"b"}}));
  const Problem other = p.with_preference(1, lex(inst, {"a", "c", "b"}));
  EXPECT_EQ(not_tp_rule()(other), ttc(other));
}

TEST(NotBal, ExactLexicographicProfileOnly) {
  const Problem p = fixtures::not_tp_profile();
  const Instance& inst = p.instance();
  EXPECT_EQ(not_bal_rule()(p), alloc(inst, {{"c"}, {"a", "b"}}));
  const Problem resp = p.with_preference(
      0,
      Preference::responsive_unchecked(ranking(inst, {"c", "a", "b"}),
                                       ResponsiveComparator::cardinality_first(
                                           ranking(inst, {"c", "a", "b"}))));
  EXPECT_FALSE(not_bal_rule().accepts(resp));
  EXPECT_THROW(not_bal_rule()(resp), DomainError);
}

TEST(NotWelb, PinnedProfile) {
  const Problem p = fixtures::not_welb_profile();
  const Instance& inst = p.instance();
  EXPECT_EQ(not_welb_rule()(p), alloc(inst, {{"c", "d"}, {"a", "b"}}));
  const Problem q = p.with_preference(1, lex(inst, {"b", "a", "c", "d"}));
  EXPECT_EQ(not_welb_rule()(q), ttc(q));
}

TEST(NotMar, DominatingAllocationOnlyWithTheComparator) {
  const Problem p = fixtures::not_mar_profile();
  const Instance& inst = p.instance();
  EXPECT_EQ(ttc(p), alloc(inst, {{"a", "d", "e"}, {"b", "c"}}));
  EXPECT_EQ(not_mar_rule()(p), alloc(inst, {{"b", "c", "e"}, {"a", "d"}}));
  const Problem shadow = lexicographic_shadow(p);
  EXPECT_EQ(not_mar_rule()(shadow), ttc(shadow));
  const AxiomReport r = check_marginality(not_mar_rule(), p);
  ASSERT_FALSE(r.holds);
  const auto& w = std::get<MarginalityWitness>(*r.witness);
  EXPECT_EQ(w.second, shadow);
  EXPECT_TRUE(check_marginality(ttc_rule(), p).holds);
}

TEST(PinnedRules, RejectOtherMarkets) {
  const Problem p = fixtures::three_agent_profile();
  for (const Rule& r :
       {not_tp_rule(), not_bal_rule(), not_welb_rule(), not_mar_rule()}) {
    EXPECT_FALSE(r.accepts(p));
    EXPECT_THROW(r(p), DomainError);
  }
}

TEST(Domains, AttcNeedsCl) {
  const Problem p = fixtures::drop_gain_profile();
  EXPECT_FALSE(attc_rule().accepts(p));
  EXPECT_TRUE(ttc_rule().accepts(p));
  EXPECT_FALSE(serial_dictatorship_rule().accepts(
      Problem(three_object_market(),
              {Preference::conditionally_lexicographic(all_lp_trees(3)[3]),
               lex(*three_object_market(), {"a", "b", "c"})})));
}

TEST(Suites, Sizes) {
  EXPECT_EQ(lexicographic_suite(three_object_market()).count(), 36);
  EXPECT_EQ(responsive_suite(three_object_market()).count(), 36 * 16);
  EXPECT_EQ(responsive_suite(fixtures::three_agent_market()).count(),
            24LL * 24 * 24 * 10);
  EXPECT_EQ(cl_suite(three_object_market()).count(), 144);
  EXPECT_EQ(endowment_shapes(2, 3).size(), 2u);
  EXPECT_EQ(endowment_shapes(3, 4).size(), 3u);
}

TEST(Matrix, ExpectedTables) {
  const PropertyMatrix t1 = expected_matrix(1);
  EXPECT_EQ(t1.rows.size(), 6u);
  EXPECT_EQ(t1.rows[0].cells.back().expected, Expectation::kFails);
  const PropertyMatrix t3 = expected_matrix(3);
  EXPECT_EQ(t3.rows[2].cells[5].expected, Expectation::kNotStudied);
  EXPECT_THROW(expected_matrix(4), InputError);
}

}  // namespace
}  // namespace ttclab
