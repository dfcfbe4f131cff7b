#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ttclab/attc.hpp"
#include "ttclab/errors.hpp"
#include "ttclab/fixtures.hpp"
#include "ttclab/io.hpp"
#include "ttclab/suites.hpp"

namespace ttclab {
namespace {

using testing::alloc;

TEST(Attc, EqualsTtcOnLexicographicProfiles) {
  const Suite s = lexicographic_suite(three_object_market()) +
                  lexicographic_suite(two_pair_market());
  s.for_each([](const Problem& p) {
    EXPECT_EQ(attc(p), ttc(p));
    return !::testing::Test::HasFailure();
  });
}

TEST(Attc, RejectsResponsivePreferences) {
  EXPECT_THROW(attc(fixtures::drop_gain_profile()), DomainError);
  EXPECT_THROW(run_attc(fixtures::drop_gain_profile()), DomainError);
}

TEST(Attc, SampleTreeProfile) {
  const auto file =
      io::read_instance_file(testing::data_path("cl_sample.json"));
  const MechanismTrace t = run_attc(file.problem);
  const Instance& inst = file.problem.instance();
  EXPECT_EQ(t.outcome, alloc(inst, {{"a", "c"}, {"b", "d"}}));
  ASSERT_EQ(t.steps.size(), 3u);
  // Having received a, agent 1 points at c, then at d.
  EXPECT_EQ(t.steps[1].agent_targets[0], inst.object_index("c"));
  EXPECT_EQ(t.steps[2].agent_targets[0], inst.object_index("d"));
  EXPECT_EQ(attc(file.problem), t.outcome);
}

TEST(Attc, PointingFollowsTheConditionalRanking) {
  for (const auto& inst : endowment_shapes(2, 3)) {
    cl_suite(inst).for_each([](const Problem& p) {
      const MechanismTrace t = run_attc(p);
      for (const auto& step : t.steps) {
        for (int i = 0; i < p.num_agents(); ++i) {
          const Bundle before =
              &step == &t.steps.front() ? Bundle() : (&step - 1)->partial[i];
          const MarginalPreference r =
              p.preference(i).conditional_marginal(before);
          EXPECT_EQ(step.agent_targets[i], r.best_of(step.remaining));
        }
      }
      return !::testing::Test::HasFailure();
    });
  }
}

TEST(AttcDeferred, HoldsBackTheAgentWhileOthersCanTrade) {
  auto inst = fixtures::three_agent_market();
  const Problem p(inst, {testing::lex(*inst, {"a", "b", "c", "d"}),
                         testing::lex(*inst, {"c", "a", "b", "d"}),
                         testing::lex(*inst, {"d", "a", "b", "c"})});
  const MechanismTrace plain = run_attc(p);
  const MechanismTrace held = run_attc_deferred(p, 0);
  EXPECT_EQ(plain.steps.size(), 2u);  // a, then b for agent 1
  ASSERT_GE(held.steps.size(), 2u);
  EXPECT_EQ(held.steps[0].arising.size(), 3u);
  EXPECT_EQ(held.steps[0].executed.size(), 2u);
  for (const auto& c : held.steps[0].executed) EXPECT_FALSE(c.involves(0));
  EXPECT_EQ(held.outcome, plain.outcome);
  EXPECT_THROW(run_attc_deferred(p, 3), InputError);
}

TEST(AttcDeferred, SameOutcomeOnAllSmallTreeProfiles) {
  for (const auto& inst : endowment_shapes(2, 3)) {
    cl_suite(inst).for_each([](const Problem& p) {
      const Allocation a = attc(p);
      for (int i = 0; i < p.num_agents(); ++i) {
        EXPECT_EQ(run_attc_deferred(p, i).outcome, a);
      }
      return !::testing::Test::HasFailure();
    });
  }
}

}  // namespace
}  // namespace ttclab
