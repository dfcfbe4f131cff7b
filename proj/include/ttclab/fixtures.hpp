#pragma once

#include <memory>

#include "ttclab/lp_tree.hpp"
#include "ttclab/problem.hpp"
#include "ttclab/rule.hpp"

// Small hand-checked markets and profiles shared by tests, the CLI and the
// property suites.
namespace ttclab::fixtures {

// Agents 1..3, objects a..d, endowment ({a,b}, {c}, {d}).
std::shared_ptr<const Instance> three_agent_market();
// Lexicographic c,a,d,b / a,b,c,d / a,c,b,d. TTC trades in two steps.
Problem three_agent_profile();
// Agent 1 responsive over d,b,c,a with {b,c} above {a,d}; agents 2 and 3
// lexicographic d,b,c,a and b,a,c,d. Agent 1 gains by dropping d.
Problem drop_gain_profile();

// On the three-agent market: agent 1 reporting a,b,c,d receives {c,d}
// (agents 2 and 3 get a and b); every other profile keeps the endowment.
Rule obvious_manipulation_rule();

// Agents 1, 2 with endowment ({a,d}, {b,c}).
std::shared_ptr<const Instance> swap_market();
// Both rank a,b,c,d. Lexicographic, or (responsive) with agent 1 preferring
// {b,c} to {a,d}.
Problem swap_profile(bool responsive);

// The single profile where each counterexample rule leaves TTC.
Problem not_tp_profile();
Problem not_welb_profile();
// Agent 1 responsive over a,e,b,c,d with {b,c,e} above {a,d,e}; agent 2
// lexicographic a,c,b,d,e.
Problem not_mar_profile();

// Tree over a..d with {a,c} above {a,b}; for endowment {b,c} the bundles
// failing the CL lower bound are exactly {d}, {a,d}, {a,b,d}, {c,d}.
LPTree sample_tree();
// The same tree after dropping b.
LPTree sample_tree_without_b();

}  // namespace ttclab::fixtures
