#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "ttclab/problem.hpp"
#include "ttclab/rule.hpp"

namespace ttclab {

// Markets the counterexample rules are built for. Agents are "1", "2".
// Three objects a, b, c with endowment ({a,b}, {c}).
std::shared_ptr<const Instance> three_object_market();
// Four objects a..d with endowment ({a,b}, {c,d}).
std::shared_ptr<const Instance> two_pair_market();
// Five objects a..e with endowment ({a,b,d}, {c,e}).
std::shared_ptr<const Instance> five_object_market();

Rule ttc_rule();
Rule attc_rule();
Rule no_trade_rule();
// Agents in index order each take their best |endowment| remaining objects.
Rule serial_dictatorship_rule();
// TTC except at one marginal profile on the three-object market.
Rule not_tp_rule();
// TTC except at one exact lexicographic profile on the three-object market.
Rule not_bal_rule();
// TTC except at one lexicographic profile on the two-pair market.
Rule not_welb_rule();
// TTC except on a set of responsive profiles of the five-object market
// where a fixed allocation Pareto dominates the TTC outcome.
Rule not_mar_rule();

const std::vector<Rule>& registered_rules();
// Throws InputError for an unknown name.
const Rule& find_rule(std::string_view name);

// Marginal ranking from object labels, e.g. {"c","a","b"}.
MarginalPreference ranking(const Instance& instance,
                           const std::vector<std::string>& labels);

}  // namespace ttclab
