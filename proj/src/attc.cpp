#include "ttclab/attc.hpp"

#include <string>

#include "ttclab/errors.hpp"

namespace ttclab {

namespace {

void require_cl(const Problem& prob) {
  for (int i = 0; i < prob.num_agents(); ++i) {
    if (!in_domain(prob.preference(i), Domain::kConditionallyLexicographic)) {
      throw DomainError(
          "ATTC needs conditionally lexicographic preferences; "
          "agent " +
          prob.instance().agent_label(i) + " has a " +
          std::string(kind_name(prob.preference(i).kind())) + " preference");
    }
  }
}

TargetFunction conditional_target(const Problem& prob) {
  return [&prob](int agent, Bundle remaining, Bundle received) {
    const Preference& p = prob.preference(agent);
    if (p.kind() == PreferenceKind::kLexicographic) {
      return p.marginal().best_of(remaining);
    }
    const LPTree& t = p.tree();
    // Follow the path of `received`; the first remaining label is the top.
    int v = 0;
    while (true) {
      const auto& node = t.node(v);
      if (remaining.contains(node.object)) return node.object;
      v = received.contains(node.object) ? node.in_child : node.out_child;
    }
  };
}

}  // namespace

MechanismTrace run_attc(const Problem& prob) {
  require_cl(prob);
  return run_trading_cycles(prob, conditional_target(prob));
}

Allocation attc(const Problem& prob) {
  require_cl(prob);
  return trading_cycles_outcome(prob, conditional_target(prob));
}

MechanismTrace run_attc_deferred(const Problem& prob, int agent) {
  require_cl(prob);
  if (agent < 0 || agent >= prob.num_agents()) {
    throw InputError("deferred agent out of range");
  }
  return run_trading_cycles(prob, conditional_target(prob), agent);
}

}  // namespace ttclab
