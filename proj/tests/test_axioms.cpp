#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ttclab/attc.hpp"
#include "ttclab/axioms.hpp"
#include "ttclab/errors.hpp"
#include "ttclab/fixtures.hpp"
#include "ttclab/strategies.hpp"
#include "ttclab/suites.hpp"

namespace ttclab {
namespace {

using testing::alloc;

TEST(Balanced, WitnessNamesAnAgent) {
  const Problem p = fixtures::not_tp_profile();
  const AxiomReport r =
      check_balanced(alloc(p.instance(), {{"c"}, {"a", "b"}}), p);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(std::get<AgentWitness>(*r.witness).agent, 0);
  EXPECT_TRUE(check_balanced(p.instance().endowment(), p).holds);
}

TEST(IndividualRationality, Examples) {
  const Problem p = fixtures::not_tp_profile();
  EXPECT_TRUE(check_ir(alloc(p.instance(), {{"b", "c"}, {"a"}}), p).holds);
  const AxiomReport r = check_ir(alloc(p.instance(), {{"a"}, {"b", "c"}}), p);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(std::get<AgentWitness>(*r.witness).agent, 0);
  // c beats {a,b} for agent 1 and {a,b} beats c for agent 2.
  EXPECT_TRUE(check_ir(alloc(p.instance(), {{"c"}, {"a", "b"}}), p).holds);
}

TEST(WorstEndowmentBound, Examples) {
  const Problem p = fixtures::not_welb_profile();
  const Instance& inst = p.instance();
  const AxiomReport r = check_welb(alloc(inst, {{"c", "d"}, {"a", "b"}}), p);
  EXPECT_FALSE(r.holds);
  const auto w = std::get<AgentWitness>(*r.witness);
  EXPECT_EQ(w.agent, 0);
  EXPECT_EQ(w.object, inst.object_index("d"));
  EXPECT_TRUE(check_welb(ttc(p), p).holds);
  const Problem q = fixtures::not_tp_profile();
  EXPECT_TRUE(check_welb(alloc(q.instance(), {{"c"}, {"a", "b"}}), q).holds);
}

TEST(StrongEndowmentBound, PairwiseDominance) {
  const Problem p = fixtures::three_agent_profile();
  const Instance& inst = p.instance();
  EXPECT_FALSE(strong_endowment_violation(ttc(p), p).has_value());
  // Agent 1 ranks c,a,d,b, so {b,d} has to pair the endowed a with d.
  const auto w =
      strong_endowment_violation(alloc(inst, {{"b", "d"}, {"a"}, {"c"}}), p);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->agent, 0);
  EXPECT_EQ(w->object, inst.object_index("a"));
  const auto size =
      strong_endowment_violation(alloc(inst, {{"b"}, {"a", "c"}, {"d"}}), p);
  ASSERT_TRUE(size.has_value());
  EXPECT_EQ(size->object, -1);
}

TEST(Pareto, SwapProfileSeparatesIgeFromPe) {
  const Problem p = fixtures::swap_profile(true);
  const Instance& inst = p.instance();
  const Allocation w = inst.endowment();
  EXPECT_TRUE(find_improving_cycle(w, p).holds);
  const AxiomReport pe = check_pareto_efficient(w, p);
  ASSERT_FALSE(pe.holds);
  EXPECT_EQ(std::get<DominatingAllocation>(*pe.witness).allocation,
            alloc(inst, {{"b", "c"}, {"a", "d"}}));
  // Under the lexicographic profile with the same marginals w is efficient.
  const Problem q = fixtures::swap_profile(false);
  EXPECT_TRUE(check_pareto_efficient(w, q).holds);
  EXPECT_EQ(ttc(p), w);
  EXPECT_EQ(ttc(q), w);
}

TEST(Pareto, ImprovingCycleWitness) {
  const Problem p = fixtures::not_tp_profile();
  const Instance& inst = p.instance();
  const AxiomReport r = find_improving_cycle(inst.endowment(), p);
  ASSERT_FALSE(r.holds);
  // Agent 1 swaps a for c, agent 2 swaps c for a.
  const TradingCycle c = std::get<ImprovingCycle>(*r.witness).cycle;
  EXPECT_EQ(c.length(), 2);
  EXPECT_EQ(c.agents.back(), 0);
  EXPECT_EQ(c.object_set(), testing::bundle(inst, {"a", "c"}));
}

// Equivalence of the two efficiency notions where marginals decide.
TEST(Pareto, IgeEqualsPeOnLexicographicProfiles) {
  for (const auto& inst : endowment_shapes(2, 3)) {
    lexicographic_suite(inst).for_each([&](const Problem& p) {
      for_each_allocation(*inst, false, [&](const Allocation& a) {
        EXPECT_EQ(find_improving_cycle(a, p).holds,
                  check_pareto_efficient(a, p).holds);
        return true;
      });
      return !::testing::Test::HasFailure();
    });
  }
}

TEST(Pareto, TtcIsEfficientOnLexicographicProfiles) {
  lexicographic_suite(fixtures::three_agent_market())
      .for_each([](const Problem& p) {
        const Allocation a = ttc(p);
        EXPECT_TRUE(check_pareto_efficient(a, p).holds);
        EXPECT_TRUE(check_ir(a, p).holds);
        EXPECT_TRUE(check_welb(a, p).holds);
        EXPECT_TRUE(check_balanced(a, p).holds);
        return !::testing::Test::HasFailure();
      });
}

TEST(CheckAllocation, RejectsProfileAxioms) {
  const Problem p = fixtures::not_tp_profile();
  EXPECT_THROW(check_allocation(Axiom::kTp, p.instance().endowment(), p),
               InputError);
}

TEST(SizeFunction, TruncationShrinksTheProfile) {
  const Problem p = fixtures::not_tp_profile();
  const Instance& inst = p.instance();
  EXPECT_EQ(size_function(p), 6);
  const Allocation mu = alloc(inst, {{"a", "c"}, {"b"}});
  const SizeSimilarity s = divergence_and_size(mu, p);
  EXPECT_EQ(s.divergence, 1);
  EXPECT_EQ(s.size, 6);
  const auto t = divergence_truncation(mu, p);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->agent, 1);
  EXPECT_EQ(t->cutoff, inst.object_index("a"));
  EXPECT_EQ(t->truncated.preference(1).marginal(),
            ranking(inst, {"a", "c", "b"}));
  EXPECT_EQ(size_function(t->truncated), 5);
  EXPECT_EQ(divergence_and_size(ttc(p), p).divergence, kNoDivergence);
  EXPECT_FALSE(divergence_truncation(ttc(p), p).has_value());
}

TEST(SizeFunction, LaterDivergence) {
  const Problem p = fixtures::three_agent_profile();
  const Instance& inst = p.instance();
  // Follows the first TTC cycle, then leaves b and d where they are.
  const Allocation mu = alloc(inst, {{"b", "c"}, {"a"}, {"d"}});
  EXPECT_EQ(divergence_and_size(mu, p).divergence, 2);
}

TEST(SizeFunction, ConditionalFormSumsOverContexts) {
  // For a spine tree every conditional ranking agrees with the marginal on
  // the endowment, so each of the 2^m contexts contributes the same count.
  auto inst = three_object_market();
  const MarginalPreference m = ranking(*inst, {"c", "a", "b"});
  const Problem lex(inst, {Preference::lexicographic(m),
                           testing::lex(*inst, {"a", "b", "c"})});
  const Problem cl(
      inst, {Preference::conditionally_lexicographic(LPTree::lexicographic(m)),
             Preference::conditionally_lexicographic(
                 LPTree::lexicographic(ranking(*inst, {"a", "b", "c"})))});
  EXPECT_EQ(size_function(cl), 8 * size_function(lex));
}

TEST(GapWitness, MonotoneOrder) {
  const Bundle a = Bundle::single(0), b = Bundle::single(1),
               c = Bundle::single(2);
  const BundleOrder order(3,
                          {a | b | c, a | c, a | b, b | c, a, b, c, Bundle()});
  const GapWitness g = ige_pe_gap_witness(order, {"a", "b", "c"});
  EXPECT_EQ(g.x, a | b | c);
  EXPECT_EQ(g.y, Bundle());
  EXPECT_EQ(g.x_star, 0);
  EXPECT_EQ(g.mu, (Allocation{{a, b | c}}));
  EXPECT_EQ(g.dominating, (Allocation{{b | c, a}}));
  EXPECT_TRUE(find_improving_cycle(g.mu, g.problem).holds);
  const AxiomReport pe = check_pareto_efficient(g.mu, g.problem);
  ASSERT_FALSE(pe.holds);
  EXPECT_EQ(std::get<DominatingAllocation>(*pe.witness).allocation,
            g.dominating);
}

TEST(GapWitness, ThirdAgentTakesTheRest) {
  // Same order on a, b, c with a fourth object z added on top of every
  // comparison as a final tiebreak.
  const Bundle z = Bundle::single(3);
  std::vector<Bundle> base{Bundle(7), Bundle(5), Bundle(3), Bundle(6),
                           Bundle(1), Bundle(2), Bundle(4), Bundle(0)};
  std::vector<Bundle> order;
  for (Bundle x : base) order.push_back(x | z);
  for (Bundle x : base) order.push_back(x);
  const GapWitness g =
      ige_pe_gap_witness(BundleOrder(4, order), {"a", "b", "c", "z"});
  EXPECT_EQ(g.problem.num_agents(), 3);
  EXPECT_EQ(g.mu[2], g.dominating[2]);
  EXPECT_TRUE(find_improving_cycle(g.mu, g.problem).holds);
  EXPECT_FALSE(check_pareto_efficient(g.mu, g.problem).holds);
}

TEST(GapWitness, RejectsClAndNonMonotoneOrders) {
  const MarginalPreference m({0, 1, 2});
  const BundleOrder lex = BundleOrder::from_comparator(
      3, [&](Bundle x, Bundle y) { return lex_compare(m, x, y); });
  EXPECT_THROW(ige_pe_gap_witness(lex, {"a", "b", "c"}), DomainError);
  const BundleOrder not_monotone(2,
                                 {Bundle(1), Bundle(0), Bundle(3), Bundle(2)});
  EXPECT_THROW(ige_pe_gap_witness(not_monotone, {"a", "b"}), DomainError);
}

}  // namespace
}  // namespace ttclab
