#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ttclab/errors.hpp"
#include "ttclab/fixtures.hpp"
#include "ttclab/io.hpp"

namespace ttclab {
namespace {

using io::Json;
using testing::data_path;

std::string error_of(const std::string& text) {
  try {
    io::parse_instance_text(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Parse, ThreeAgentFile) {
  const auto f = io::read_instance_file(data_path("three_agent.json"));
  EXPECT_EQ(f.problem.num_agents(), 3);
  EXPECT_EQ(f.problem.num_objects(), 4);
  EXPECT_EQ(f.problem, fixtures::three_agent_profile());
  EXPECT_FALSE(f.allocation.has_value());
}

TEST(Parse, ResponsiveOverride) {
  const auto f = io::read_instance_file(data_path("drop_gain.json"));
  EXPECT_EQ(f.problem, fixtures::drop_gain_profile());
  const Instance& inst = f.problem.instance();
  EXPECT_TRUE(f.problem.preference(0).prefers(inst.bundle_of({"b", "c"}),
                                              inst.bundle_of({"a", "d"})));
}

TEST(Parse, FilesMatchFixtures) {
  EXPECT_EQ(io::read_instance_file(data_path("swap.json")).problem,
            fixtures::swap_profile(true));
  EXPECT_EQ(io::read_instance_file(data_path("not_tp.json")).problem,
            fixtures::not_tp_profile());
  EXPECT_EQ(io::read_instance_file(data_path("not_welb.json")).problem,
            fixtures::not_welb_profile());
  EXPECT_EQ(io::read_instance_file(data_path("not_mar.json")).problem,
            fixtures::not_mar_profile());
  const auto cl = io::read_instance_file(data_path("cl_sample.json"));
  EXPECT_EQ(cl.problem.preference(0).tree().to_order(),
            fixtures::sample_tree().to_order());
}

TEST(Parse, DuplicateInRankingPointsAtTheEntry) {
  const std::string msg = error_of(R"({
    "agents": ["1", "2"], "objects": ["a", "b", "c"],
    "endowment": {"1": ["a", "b"], "2": ["c"]},
    "preferences": {"1": {"kind": "lex", "order": ["c", "a", "a"]},
                    "2": {"kind": "lex", "order": ["a", "b", "c"]}}})");
  EXPECT_EQ(msg.rfind("/preferences/1/order/2:", 0), 0u) << msg;
}

TEST(Parse, StructuredErrors) {
  EXPECT_NE(error_of("{").find("malformed JSON"), std::string::npos);
  EXPECT_EQ(error_of(R"({"agents": ["1"]})").rfind("/:", 0), 0u);
  const std::string unknown = error_of(R"({
    "agents": ["1", "2"], "objects": ["a", "b"],
    "endowment": {"1": ["a"], "2": ["b"]},
    "preferences": {"1": {"kind": "lex", "order": ["a", "z"]},
                    "2": {"kind": "lex", "order": ["a", "b"]}}})");
  EXPECT_EQ(unknown.rfind("/preferences/1/order/1:", 0), 0u) << unknown;
  const std::string kind = error_of(R"({
    "agents": ["1", "2"], "objects": ["a", "b"],
    "endowment": {"1": ["a"], "2": ["b"]},
    "preferences": {"1": {"kind": "weird"},
                    "2": {"kind": "lex", "order": ["a", "b"]}}})");
  EXPECT_EQ(kind.rfind("/preferences/1/kind:", 0), 0u) << kind;
  const std::string comparator = error_of(R"({
    "agents": ["1", "2"], "objects": ["a", "b"],
    "endowment": {"1": ["a"], "2": ["b"]},
    "preferences": {
      "1": {"kind": "responsive", "marginal": ["a", "b"],
            "comparator": {"scheme": "additive",
                           "utilities": {"a": 1, "b": 2}}},
      "2": {"kind": "lex", "order": ["a", "b"]}}})");
  EXPECT_EQ(comparator.rfind("/preferences/1/comparator", 0), 0u) << comparator;
  const std::string overlap = error_of(R"({
    "agents": ["1", "2"], "objects": ["a", "b"],
    "endowment": {"1": ["a"], "2": ["a"]},
    "preferences": {"1": {"kind": "lex", "order": ["a", "b"]},
                    "2": {"kind": "lex", "order": ["a", "b"]}}})");
  EXPECT_FALSE(overlap.empty());
}

TEST(Serialize, RoundTripOnEveryFixture) {
  for (const char* name :
       {"three_agent.json", "drop_gain.json", "swap.json", "not_tp.json",
        "not_welb.json", "not_mar.json", "cl_sample.json"}) {
    const auto f = io::read_instance_file(data_path(name));
    const Json once = io::instance_json(f);
    const auto back = io::parse_instance(once);
    EXPECT_EQ(back.problem, f.problem) << name;
    EXPECT_EQ(back.allocation, f.allocation) << name;
    EXPECT_EQ(io::dump(io::instance_json(back)), io::dump(once)) << name;
  }
}

TEST(Serialize, IntegralUtilitiesStayIntegers) {
  const auto f = io::read_instance_file(data_path("drop_gain.json"));
  const Json j =
      io::preference_json(f.problem.preference(0), f.problem.instance());
  EXPECT_TRUE(j["comparator"]["utilities"]["d"].is_number_integer());
  EXPECT_EQ(j["comparator"]["overrides"],
            Json::parse(R"([[["b","c"],["a","d"]]])"));
}

TEST(Serialize, TraceCycles) {
  const Problem p = fixtures::three_agent_profile();
  const Json t = io::trace_json(run_ttc(p), p.instance());
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0]["cycles"], Json::parse(R"([["c","2","a","1","c"]])"));
  EXPECT_EQ(t[1]["cycles"], Json::parse(R"([["d","3","b","1","d"]])"));
}

TEST(Serialize, OrderFile) {
  const Json doc = Json::parse(R"({"objects": ["a", "b"],
                                   "order": [["a","b"],["a"],["b"],[]]})");
  const auto f = io::parse_order_file(doc);
  EXPECT_EQ(f.order.order().front(), Bundle(3));
  EXPECT_THROW(io::parse_order_file(
                   Json::parse(R"({"objects": ["a", "b"], "order": [["a"]]})")),
               InputError);
}

TEST(Oracle, ListsEveryAllocation) {
  const Problem p = fixtures::not_tp_profile();
  const Json j = io::oracle_json(p);
  EXPECT_EQ(j["count"], 6);
  int pe = 0;
  for (const auto& row : j["allocations"]) {
    EXPECT_EQ(row["flags"]["PE"], row["flags"]["IGE"]);
    pe += row["flags"]["PE"].get<bool>();
  }
  EXPECT_GT(pe, 0);
}

}  // namespace
}  // namespace ttclab
