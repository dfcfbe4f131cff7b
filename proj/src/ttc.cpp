#include "ttclab/ttc.hpp"

#include <algorithm>

#include "ttclab/errors.hpp"

namespace ttclab {

Bundle TradingCycle::object_set() const {
  Bundle b;
  for (int o : objects) b = b.with(o);
  return b;
}

bool TradingCycle::involves(int agent) const {
  return std::find(agents.begin(), agents.end(), agent) != agents.end();
}

TradingCycle canonical(TradingCycle c) {
  if (c.agents.empty()) return c;
  const auto min_it = std::min_element(c.agents.begin(), c.agents.end());
  const std::size_t start =
      (static_cast<std::size_t>(min_it - c.agents.begin()) + 1) %
      c.agents.size();
  std::rotate(c.agents.begin(), c.agents.begin() + start, c.agents.end());
  std::rotate(c.objects.begin(), c.objects.begin() + start, c.objects.end());
  return c;
}

bool same_cycle(const TradingCycle& a, const TradingCycle& b) {
  return canonical(a) == canonical(b);
}

std::vector<TradingCycle> pointing_cycles(std::span<const int> agent_targets,
                                          std::span<const int> object_owners,
                                          Bundle live) {
  const int n = static_cast<int>(agent_targets.size());
  const int m = static_cast<int>(object_owners.size());
  for (int i = 0; i < n; ++i) {
    const int t = agent_targets[i];
    if (t < 0 || t >= m || !live.contains(t)) {
      throw InputError("agent points to an object that is not on the market");
    }
  }
  for (int o : live) {
    if (o >= m || object_owners[o] < 0 || object_owners[o] >= n) {
      throw InputError("live object without an owner");
    }
  }
  // Walk the agent -> object -> owner map; each agent is visited once.
  std::vector<int> state(n, 0);  // 0 new, 1 on current walk, 2 finished
  std::vector<TradingCycle> out;
  for (int start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<int> walk;
    int a = start;
    while (state[a] == 0) {
      state[a] = 1;
      walk.push_back(a);
      a = object_owners[agent_targets[a]];
    }
    if (state[a] == 1) {
      // The walk closed on itself at agent `a`.
      TradingCycle c;
      auto it = std::find(walk.begin(), walk.end(), a);
      for (; it != walk.end(); ++it) {
        const int target = agent_targets[*it];
        c.objects.push_back(target);
        c.agents.push_back(object_owners[target]);
      }
      out.push_back(canonical(std::move(c)));
    }
    for (int v : walk) state[v] = 2;
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.agents.back() < y.agents.back();
  });
  return out;
}

MechanismTrace run_trading_cycles(const Problem& prob,
                                  const TargetFunction& target,
                                  std::optional<int> deferred_agent) {
  const Instance& inst = prob.instance();
  const int n = inst.num_agents();
  const int m = inst.num_objects();
  MechanismTrace trace;
  Allocation held;
  held.parts.assign(n, Bundle());
  Bundle remaining = inst.all_objects();
  std::vector<int> targets(n);
  std::vector<int> owners(m);
  while (!remaining.empty()) {
    for (int o = 0; o < m; ++o) {
      owners[o] = remaining.contains(o) ? inst.owner(o) : -1;
    }
    for (int i = 0; i < n; ++i) targets[i] = target(i, remaining, held[i]);
    TraceStep step;
    step.remaining = remaining;
    step.agent_targets = targets;
    step.object_owners = owners;
    step.arising = pointing_cycles(targets, owners, remaining);
    if (deferred_agent && step.arising.size() >= 2) {
      for (const auto& c : step.arising) {
        if (!c.involves(*deferred_agent)) step.executed.push_back(c);
      }
    } else {
      step.executed = step.arising;
    }
    for (const auto& c : step.executed) {
      for (int l = 0; l < c.length(); ++l) {
        held[c.agents[l]] = held[c.agents[l]].with(c.received(l));
      }
      remaining -= c.object_set();
    }
    step.partial = held;
    trace.steps.push_back(std::move(step));
  }
  trace.outcome = held;
  return trace;
}

MechanismTrace run_ttc(const Problem& prob) {
  return run_trading_cycles(prob, [&](int agent, Bundle remaining, Bundle) {
    return prob.preference(agent).marginal().best_of(remaining);
  });
}

Allocation trading_cycles_outcome(const Problem& prob,
                                  const TargetFunction& target) {
  const Instance& inst = prob.instance();
  const int n = inst.num_agents();
  Allocation held;
  held.parts.assign(n, Bundle());
  Bundle remaining = inst.all_objects();
  std::vector<int> targets(n);
  std::vector<int> mark(n);
  while (!remaining.empty()) {
    for (int i = 0; i < n; ++i) targets[i] = target(i, remaining, held[i]);
    std::fill(mark.begin(), mark.end(), 0);
    Bundle traded;
    for (int start = 0; start < n; ++start) {
      if (mark[start] != 0) continue;
      int a = start;
      while (mark[a] == 0) {
        mark[a] = start + 1;
        a = inst.owner(targets[a]);
      }
      if (mark[a] != start + 1) continue;
      int b = a;
      do {
        held[b] = held[b].with(targets[b]);
        traded = traded.with(targets[b]);
        b = inst.owner(targets[b]);
      } while (b != a);
    }
    remaining -= traded;
  }
  return held;
}

Allocation ttc(const Problem& prob) {
  return trading_cycles_outcome(prob, [&](int agent, Bundle remaining, Bundle) {
    return prob.preference(agent).marginal().best_of(remaining);
  });
}

}  // namespace ttclab
