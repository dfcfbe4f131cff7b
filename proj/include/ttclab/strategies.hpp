#pragma once

#include <string_view>
#include <vector>

#include "ttclab/axioms.hpp"
#include "ttclab/lp_tree.hpp"
#include "ttclab/prefs.hpp"
#include "ttclab/rule.hpp"

namespace ttclab {

enum class StrategyClass { kTruncation, kDrop, kSubsetDrop, kAny };

std::string_view strategy_class_name(StrategyClass cls);
// TP, DSP, SDSP or SP.
Axiom incentive_axiom(StrategyClass cls);

// Moves `dropped` to the bottom, keeping the relative order inside and
// outside it.
MarginalPreference drop_objects(const MarginalPreference& m, Bundle dropped);

// All 2^|O \ endowment| subset drops, identity first. Subsets are numbered
// by a mask over the outside objects in preference order.
std::vector<MarginalPreference> gen_subset_drops(const MarginalPreference& m,
                                                 Bundle endowment);
// Identity, then one drop per outside object in preference order.
std::vector<MarginalPreference> gen_drops(const MarginalPreference& m,
                                          Bundle endowment);
// Truncation at each cutoff y drops every outside object ranked below y.
// Identity first, duplicates removed.
std::vector<MarginalPreference> gen_truncations(const MarginalPreference& m,
                                                Bundle endowment);

// Whether `upper` can be matched one-to-one onto `lower` with every object
// weakly above its partner under `m`. Sizes must agree.
bool dominates_pointwise(const MarginalPreference& m, Bundle upper,
                         Bundle lower);

// Drop strategy on an LP tree. Throws DomainError if `object` is endowed.
LPTree drop_cl(const LPTree& tree, int object, Bundle endowment);

// A report of the same kind as `truth` whose marginal is `m`: lexicographic
// stays lexicographic, additive utilities are re-assigned by rank, other
// responsive comparators fall back to the lexicographic extension.
Preference report_with_marginal(const Preference& truth,
                                const MarginalPreference& m);

// Misreports of `cls` available to an agent, excluding the truth. CL agents
// only have drops; SP needs a lexicographic agent.
std::vector<Preference> misreports(const Preference& truth, Bundle endowment,
                                   StrategyClass cls);

// First agent and misreport in `cls` that the agent strictly prefers under
// its true preference.
AxiomReport audit_incentives(const Rule& rule, const Problem& prob,
                             StrategyClass cls);

// Bundles agent `agent` can end up with when reporting `report` while the
// others report every lexicographic profile. Sorted, without duplicates.
std::vector<Bundle> opportunity_set(const Rule& rule, const Problem& prob,
                                    int agent, const Preference& report);

// Every profitable misreport must leave the truthful best and worst
// possible bundles weakly above those of the misreport.
AxiomReport audit_nom(const Rule& rule, const Problem& prob);

}  // namespace ttclab
