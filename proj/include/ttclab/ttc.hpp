#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ttclab/bundle.hpp"
#include "ttclab/problem.hpp"

namespace ttclab {

// (o_1, i_1, o_2, i_2, ..., o_k, i_k, o_1): agent i_l holds o_l and
// receives o_{l+1}. Canonical form closes the cycle at its smallest agent
// index, so o_1 is the object that agent points to.
struct TradingCycle {
  std::vector<int> objects;
  std::vector<int> agents;

  int length() const { return static_cast<int>(objects.size()); }
  // Object received by agents[l].
  int received(int l) const { return objects[(l + 1) % length()]; }
  Bundle object_set() const;
  bool involves(int agent) const;

  friend bool operator==(const TradingCycle&, const TradingCycle&) = default;
};

TradingCycle canonical(TradingCycle c);
// Equality up to rotation.
bool same_cycle(const TradingCycle& a, const TradingCycle& b);

struct TraceStep {
  Bundle remaining;                // objects still on the market
  std::vector<int> agent_targets;  // object each agent points to
  std::vector<int> object_owners;  // owner of each live object, -1 if gone
  std::vector<TradingCycle> arising;
  std::vector<TradingCycle> executed;
  Allocation partial;  // cumulative assignment after this step
};

struct MechanismTrace {
  std::vector<TraceStep> steps;
  Allocation outcome;
};

// Cycles of the pointing graph in which every agent points to an object and
// every live object points to its owner. Throws InputError on a target
// outside `live` or a live object without an owner.
std::vector<TradingCycle> pointing_cycles(std::span<const int> agent_targets,
                                          std::span<const int> object_owners,
                                          Bundle live);

// Object agent `i` points to given the objects still available and what it
// has received so far.
using TargetFunction =
    std::function<int(int agent, Bundle remaining, Bundle received)>;

// Generic trading-cycles loop. With `deferred_agent` set, cycles through that
// agent are held back whenever another cycle can execute instead.
MechanismTrace run_trading_cycles(const Problem& prob,
                                  const TargetFunction& target,
                                  std::optional<int> deferred_agent = {});

// Final allocation of run_trading_cycles without the trace.
Allocation trading_cycles_outcome(const Problem& prob,
                                  const TargetFunction& target);

// Agents point to their best remaining object under the marginal ranking.
MechanismTrace run_ttc(const Problem& prob);
Allocation ttc(const Problem& prob);

}  // namespace ttclab
