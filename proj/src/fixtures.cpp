#include "ttclab/fixtures.hpp"

#include "ttclab/rules.hpp"

namespace ttclab::fixtures {

namespace {

using Labels = std::vector<std::vector<std::string>>;

Preference lex(const Instance& inst, const std::vector<std::string>& order) {
  return Preference::lexicographic(ranking(inst, order));
}

// Additive base with one adjacent pair of bundles flipped.
Preference flipped_additive(const Instance& inst,
                            const std::vector<std::string>& order,
                            const std::vector<double>& utilities_by_rank,
                            const std::vector<std::string>& above,
                            const std::vector<std::string>& below) {
  const MarginalPreference m = ranking(inst, order);
  std::vector<double> u(m.size());
  for (int r = 0; r < m.size(); ++r) u[m.order()[r]] = utilities_by_rank[r];
  return Preference::responsive(
      m, ResponsiveComparator::additive(std::move(u))
             .with_overrides({{inst.bundle_of(above), inst.bundle_of(below)}}));
}

}  // namespace

std::shared_ptr<const Instance> three_agent_market() {
  static const auto inst = Instance::create(
      {"1", "2", "3"}, {"a", "b", "c", "d"}, Labels{{"a", "b"}, {"c"}, {"d"}});
  return inst;
}

Problem three_agent_profile() {
  auto inst = three_agent_market();
  return Problem(
      inst, {lex(*inst, {"c", "a", "d", "b"}), lex(*inst, {"a", "b", "c", "d"}),
             lex(*inst, {"a", "c", "b", "d"})});
}

Problem drop_gain_profile() {
  auto inst = three_agent_market();
  return Problem(
      inst,
      {flipped_additive(*inst, {"d", "b", "c", "a"}, {17, 12, 7, 3}, {"b", "c"},
                        {"a", "d"}),
       lex(*inst, {"d", "b", "c", "a"}), lex(*inst, {"b", "a", "c", "d"})});
}

Rule obvious_manipulation_rule() {
  auto inst = three_agent_market();
  const MarginalPreference lie = ranking(*inst, {"a", "b", "c", "d"});
  return Rule(
      "obvious_manipulation", {Domain::kResponsive},
      [lie](const Problem& p) {
        if (p.preference(0).marginal() == lie) {
          return p.instance().allocation_of({{"c", "d"}, {"a"}, {"b"}});
        }
        return p.instance().endowment();
      },
      inst);
}

std::shared_ptr<const Instance> swap_market() {
  static const auto inst = Instance::create({"1", "2"}, {"a", "b", "c", "d"},
                                            Labels{{"a", "d"}, {"b", "c"}});
  return inst;
}

Problem swap_profile(bool responsive) {
  auto inst = swap_market();
  const std::vector<std::string> order{"a", "b", "c", "d"};
  if (!responsive) return Problem(inst, {lex(*inst, order), lex(*inst, order)});
  return Problem(inst, {flipped_additive(*inst, order, {17, 12, 7, 3},
                                         {"b", "c"}, {"a", "d"}),
                        lex(*inst, order)});
}

Problem not_tp_profile() {
  auto inst = three_object_market();
  return Problem(inst,
                 {lex(*inst, {"c", "a", "b"}), lex(*inst, {"a", "b", "c"})});
}

Problem not_welb_profile() {
  auto inst = two_pair_market();
  return Problem(inst, {lex(*inst, {"c", "a", "b", "d"}),
                        lex(*inst, {"a", "b", "c", "d"})});
}

Problem not_mar_profile() {
  auto inst = five_object_market();
  return Problem(inst, {flipped_additive(*inst, {"a", "e", "b", "c", "d"},
                                         {14, 12, 10, 6, 3}, {"b", "c", "e"},
                                         {"a", "d", "e"}),
                        lex(*inst, {"a", "c", "b", "d", "e"})});
}

LPTree sample_tree() {
  // Objects a=0, b=1, c=2, d=3.
  return LPTree(4, {
                       {0, 1, 8},    // a
                       {2, 2, 5},    // a in: c
                       {3, 3, 4},    // a, c in: d
                       {1, -1, -1},  // b
                       {1, -1, -1},  // b
                       {1, 6, 7},    // a in, c out: b
                       {3, -1, -1},  // d
                       {3, -1, -1},  // d
                       {1, 9, 12},   // a out: b
                       {3, 10, 11},  // b in: d
                       {2, -1, -1},  // c
                       {2, -1, -1},  // c
                       {2, 13, 14},  // b out: c
                       {3, -1, -1},  // d
                       {3, -1, -1},  // d
                   });
}

LPTree sample_tree_without_b() {
  return LPTree(4, {
                       {0, 1, 8},    // a
                       {2, 2, 5},    // a in: c
                       {3, 3, 4},    // d
                       {1, -1, -1},  // b
                       {1, -1, -1},  // b
                       {3, 6, 7},    // d
                       {1, -1, -1},  // b
                       {1, -1, -1},  // b
                       {2, 9, 12},   // a out: c
                       {3, 10, 11},  // d
                       {1, -1, -1},  // b
                       {1, -1, -1},  // b
                       {3, 13, 14},  // d
                       {1, -1, -1},  // b
                       {1, -1, -1},  // b
                   });
}

}  // namespace ttclab::fixtures
