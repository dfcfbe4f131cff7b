#include "ttclab/axioms.hpp"

#include <algorithm>
#include <functional>

#include "ttclab/attc.hpp"
#include "ttclab/errors.hpp"

namespace ttclab {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kBal:
      return "BAL";
    case Axiom::kIr:
      return "IR";
    case Axiom::kWelb:
      return "WELB";
    case Axiom::kPe:
      return "PE";
    case Axiom::kIge:
      return "IGE";
    case Axiom::kMar:
      return "MAR";
    case Axiom::kTp:
      return "TP";
    case Axiom::kDsp:
      return "DSP";
    case Axiom::kSdsp:
      return "SDSP";
    case Axiom::kSp:
      return "SP";
    case Axiom::kNom:
      return "NOM";
  }
  return "?";
}

namespace {

AxiomReport fail(Axiom a, Witness w) { return {a, false, std::move(w)}; }

void require_same_agents(const Allocation& alloc, const Problem& prob) {
  if (alloc.num_agents() != prob.num_agents()) {
    throw InputError("allocation and problem have different agent counts");
  }
}

bool uses_cl(const Problem& prob) {
  return std::any_of(prob.preferences().begin(), prob.preferences().end(),
                     [](const Preference& p) {
                       return p.kind() ==
                              PreferenceKind::kConditionallyLexicographic;
                     });
}

}  // namespace

AxiomReport check_balanced(const Allocation& alloc, const Problem& prob) {
  require_same_agents(alloc, prob);
  for (int i = 0; i < prob.num_agents(); ++i) {
    if (alloc[i].size() != prob.endowment_of(i).size()) {
      return fail(Axiom::kBal, AgentWitness{i});
    }
  }
  return {Axiom::kBal};
}

AxiomReport check_ir(const Allocation& alloc, const Problem& prob) {
  require_same_agents(alloc, prob);
  for (int i = 0; i < prob.num_agents(); ++i) {
    if (prob.preference(i).prefers(prob.endowment_of(i), alloc[i])) {
      return fail(Axiom::kIr, AgentWitness{i});
    }
  }
  return {Axiom::kIr};
}

AxiomReport check_welb(const Allocation& alloc, const Problem& prob) {
  require_same_agents(alloc, prob);
  for (int i = 0; i < prob.num_agents(); ++i) {
    const Preference& p = prob.preference(i);
    const MarginalPreference ranking =
        p.kind() == PreferenceKind::kConditionallyLexicographic
            ? p.conditional_marginal(alloc[i])
            : p.marginal();
    const int floor = ranking.rank(ranking.worst_of(prob.endowment_of(i)));
    for (int o : alloc[i]) {
      if (ranking.rank(o) > floor) {
        return fail(Axiom::kWelb, AgentWitness{i, o});
      }
    }
  }
  return {Axiom::kWelb};
}

std::optional<AgentWitness> strong_endowment_violation(const Allocation& alloc,
                                                       const Problem& prob) {
  require_same_agents(alloc, prob);
  for (int i = 0; i < prob.num_agents(); ++i) {
    const MarginalPreference& m = prob.preference(i).marginal();
    const Bundle own = prob.endowment_of(i);
    if (alloc[i].size() != own.size()) return AgentWitness{i, -1};
    // Pairing the k-th best on each side is optimal.
    const std::vector<int> got = m.restricted_to(alloc[i]);
    const std::vector<int> had = m.restricted_to(own);
    for (std::size_t k = 0; k < had.size(); ++k) {
      if (m.prefers(had[k], got[k])) return AgentWitness{i, had[k]};
    }
  }
  return std::nullopt;
}

AxiomReport check_pareto_efficient(const Allocation& alloc,
                                   const Problem& prob) {
  require_same_agents(alloc, prob);
  const int n = prob.num_agents();
  std::optional<Allocation> found;
  auto dominates = [&](const Allocation& other) {
    bool strict = false;
    for (int i = 0; i < n; ++i) {
      const auto c = prob.preference(i).compare(other[i], alloc[i]);
      if (c < 0) return false;
      if (c > 0) strict = true;
    }
    return strict;
  };
  // Balanced allocations are tried first so that the witness is a
  // reallocation of the same bundle sizes when one exists.
  for (bool balanced : {true, false}) {
    for_each_allocation(prob.instance(), balanced, [&](const Allocation& a) {
      if (!balanced && is_balanced(a, prob.instance().endowment())) return true;
      if (dominates(a)) {
        found = a;
        return false;
      }
      return true;
    });
    if (found) return fail(Axiom::kPe, DominatingAllocation{*found});
  }
  return {Axiom::kPe};
}

AxiomReport find_improving_cycle(const Allocation& alloc, const Problem& prob) {
  require_same_agents(alloc, prob);
  const int m = prob.num_objects();
  std::vector<int> holder(m, -1);
  for (int i = 0; i < alloc.num_agents(); ++i) {
    for (int o : alloc[i]) holder[o] = i;
  }
  // gains[o] lists the objects the holder of o would strictly rather have
  // in its place.
  std::vector<std::vector<int>> gains(m);
  for (int o = 0; o < m; ++o) {
    const int i = holder[o];
    if (i < 0) continue;
    for (int p = 0; p < m; ++p) {
      if (holder[p] < 0 || holder[p] == i) continue;
      if (prob.preference(i).prefers(alloc[i].without(o).with(p), alloc[i])) {
        gains[o].push_back(p);
      }
    }
  }
  std::vector<int> path;
  std::vector<bool> agent_used(alloc.num_agents(), false);
  std::optional<TradingCycle> found;
  // Cycles are rooted at their smallest object to visit each one once.
  std::function<bool(int, int)> dfs = [&](int root, int o) {
    for (int p : gains[o]) {
      if (p == root && path.size() >= 2) {
        TradingCycle c;
        for (int q : path) {
          c.objects.push_back(q);
          c.agents.push_back(holder[q]);
        }
        found = canonical(std::move(c));
        return true;
      }
      if (p <= root || agent_used[holder[p]]) continue;
      agent_used[holder[p]] = true;
      path.push_back(p);
      if (dfs(root, p)) return true;
      path.pop_back();
      agent_used[holder[p]] = false;
    }
    return false;
  };
  for (int root = 0; root < m && !found; ++root) {
    if (holder[root] < 0) continue;
    path = {root};
    std::fill(agent_used.begin(), agent_used.end(), false);
    agent_used[holder[root]] = true;
    dfs(root, root);
  }
  if (found) return fail(Axiom::kIge, ImprovingCycle{*found});
  return {Axiom::kIge};
}

AxiomReport check_allocation(Axiom axiom, const Allocation& alloc,
                             const Problem& prob) {
  switch (axiom) {
    case Axiom::kBal:
      return check_balanced(alloc, prob);
    case Axiom::kIr:
      return check_ir(alloc, prob);
    case Axiom::kWelb:
      return check_welb(alloc, prob);
    case Axiom::kPe:
      return check_pareto_efficient(alloc, prob);
    case Axiom::kIge:
      return find_improving_cycle(alloc, prob);
    default:
      throw InputError(std::string(axiom_name(axiom)) +
                       " is not a property of a single allocation");
  }
}

long long size_function(const Problem& prob) {
  long long total = 0;
  for (int i = 0; i < prob.num_agents(); ++i) {
    const Preference& p = prob.preference(i);
    const Bundle endowed = prob.endowment_of(i);
    auto count = [&](const MarginalPreference& r) {
      return r.rank(r.worst_of(endowed)) + 1;
    };
    if (p.kind() == PreferenceKind::kConditionallyLexicographic) {
      if (prob.num_objects() > 20) throw CapacityError("size over 2^m bundles");
      for_each_subset(prob.instance().all_objects(), [&](Bundle y) {
        total += count(p.conditional_marginal(y));
        return true;
      });
    } else {
      total += count(p.marginal());
    }
  }
  return total;
}

namespace {

MechanismTrace reference_trace(const Problem& prob) {
  return uses_cl(prob) ? run_attc(prob) : run_ttc(prob);
}

// Step and cycle position of the first pointing `alloc` does not honour.
struct Divergence {
  int step = -1;
  const TradingCycle* cycle = nullptr;
  int position = -1;
};

std::optional<Divergence> first_divergence(const MechanismTrace& trace,
                                           const Allocation& alloc) {
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    for (const auto& c : trace.steps[t].arising) {
      for (int l = 0; l < c.length(); ++l) {
        if (!alloc[c.agents[l]].contains(c.received(l))) {
          return Divergence{static_cast<int>(t), &c, l};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SizeSimilarity divergence_and_size(const Allocation& alloc,
                                   const Problem& prob) {
  require_same_agents(alloc, prob);
  const MechanismTrace trace = reference_trace(prob);
  SizeSimilarity out;
  out.size = size_function(prob);
  if (auto d = first_divergence(trace, alloc)) out.divergence = d->step + 1;
  return out;
}

std::optional<DivergenceTruncation> divergence_truncation(
    const Allocation& alloc, const Problem& prob) {
  require_same_agents(alloc, prob);
  if (uses_cl(prob)) {
    throw DomainError("divergence truncation is defined for marginal profiles");
  }
  const MechanismTrace trace = run_ttc(prob);
  const auto d = first_divergence(trace, alloc);
  if (!d) return std::nullopt;
  const int agent = d->cycle->agents[d->position];
  const int cutoff = d->cycle->received(d->position);
  const MarginalPreference& m = prob.preference(agent).marginal();
  const Bundle endowed = prob.endowment_of(agent);
  std::vector<int> kept;
  std::vector<int> dropped;
  for (int o : m.order()) {
    if (!endowed.contains(o) && m.prefers(cutoff, o)) {
      dropped.push_back(o);
    } else {
      kept.push_back(o);
    }
  }
  kept.insert(kept.end(), dropped.begin(), dropped.end());
  MarginalPreference truncated(std::move(kept));
  Preference p =
      prob.preference(agent).kind() == PreferenceKind::kResponsive
          ? Preference::responsive_unchecked(
                truncated, ResponsiveComparator::lexicographic(truncated))
          : Preference::lexicographic(truncated);
  return DivergenceTruncation{agent, cutoff,
                              prob.with_preference(agent, std::move(p))};
}

GapWitness ige_pe_gap_witness(const BundleOrder& order,
                              const std::vector<std::string>& objects) {
  const int m = order.num_objects();
  if (static_cast<int>(objects.size()) != m) {
    throw InputError("object labels do not match the order");
  }
  if (!check_monotonic(order)) {
    throw DomainError("preference is not monotonic");
  }
  const auto violation = check_conditionally_lexicographic(order);
  if (!violation) {
    throw DomainError("preference is conditionally lexicographic");
  }
  const Bundle x = violation->x;
  const Bundle y = violation->y;
  int x_star = -1;
  for (int o : x) {
    if (x_star < 0 || order.compare(y.with(o), y.with(x_star)) > 0) x_star = o;
  }
  const Bundle all = Bundle::all(m);
  const Bundle rest = all - (x | y);
  const Bundle x_rest = x.without(x_star);
  const MarginalPreference singles = order.marginal();

  // Agent 2 ranks x* first, then the rest of X, then everything else.
  std::vector<int> second{x_star};
  for (int o : singles.restricted_to(x_rest)) second.push_back(o);
  for (int o : singles.restricted_to(all - x)) second.push_back(o);

  std::vector<std::string> agents{"1", "2"};
  Endowment mu{{y.with(x_star), x_rest}};
  Allocation dominating{{y | x_rest, Bundle::single(x_star)}};
  std::vector<Preference> prefs{
      Preference::explicit_order(order),
      Preference::lexicographic(MarginalPreference(second))};
  if (!rest.empty()) {
    // Agent 3 takes the objects outside X and Y and ranks them on top.
    std::vector<int> third = singles.restricted_to(rest);
    for (int o : singles.restricted_to(x | y)) third.push_back(o);
    agents.push_back("3");
    mu.parts.push_back(rest);
    dominating.parts.push_back(rest);
    prefs.push_back(Preference::lexicographic(MarginalPreference(third)));
  }
  auto instance = Instance::create(agents, objects, mu);
  return GapWitness{x,      y,
                    x_star, Problem(std::move(instance), std::move(prefs)),
                    mu,     dominating};
}

}  // namespace ttclab
