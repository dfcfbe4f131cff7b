#pragma once

#include <limits>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "ttclab/problem.hpp"
#include "ttclab/ttc.hpp"

namespace ttclab {

enum class Axiom {
  kBal,   // balancedness
  kIr,    // individual rationality
  kWelb,  // worst-endowment lower bound
  kPe,    // Pareto efficiency
  kIge,   // no improving trading cycle
  kMar,   // marginality
  kTp,    // truncation-proofness
  kDsp,   // drop-strategy-proofness
  kSdsp,  // subset-drop-strategy-proofness
  kSp,    // strategy-proofness
  kNom,   // not obviously manipulable
};

std::string_view axiom_name(Axiom a);

// An agent, and where relevant the object that shows the failure.
struct AgentWitness {
  int agent = -1;
  int object = -1;
};

struct DominatingAllocation {
  Allocation allocation;
};

struct ImprovingCycle {
  TradingCycle cycle;
};

struct ManipulationWitness {
  int agent = -1;
  Problem truthful;
  Preference misreport;
  Bundle truthful_bundle;
  Bundle manipulated_bundle;
};

// Two profiles with identical marginals that a rule treats differently.
struct MarginalityWitness {
  Problem first;
  Problem second;
  Allocation first_outcome;
  Allocation second_outcome;
};

// A profitable misreport whose opportunity set is not dominated by the
// truthful one.
struct NomWitness {
  int agent = -1;
  Problem truthful;
  Preference misreport;
  Bundle truthful_best, truthful_worst;
  Bundle misreport_best, misreport_worst;
};

using Witness =
    std::variant<AgentWitness, DominatingAllocation, ImprovingCycle,
                 ManipulationWitness, MarginalityWitness, NomWitness>;

struct AxiomReport {
  Axiom axiom;
  bool holds = true;
  std::optional<Witness> witness;
};

AxiomReport check_balanced(const Allocation& alloc, const Problem& prob);
AxiomReport check_ir(const Allocation& alloc, const Problem& prob);
// Marginal form, or the conditional form for CL preferences.
AxiomReport check_welb(const Allocation& alloc, const Problem& prob);
// Brute force over every allocation with nonempty parts.
AxiomReport check_pareto_efficient(const Allocation& alloc,
                                   const Problem& prob);
// Searches for a trading cycle with distinct agents and objects in which
// every participant strictly gains from its single swap. The witness is the
// first such cycle in canonical form; `holds` means none exists.
AxiomReport find_improving_cycle(const Allocation& alloc, const Problem& prob);
// Each agent's bundle can be matched one-to-one onto its endowment with every
// assigned object weakly above its partner under the marginal ranking. Not
// part of the audited axiom set. Returns the first failing agent; `object` is
// the endowed object left without a partner, or -1 when sizes differ.
std::optional<AgentWitness> strong_endowment_violation(const Allocation& alloc,
                                                       const Problem& prob);
AxiomReport check_allocation(Axiom axiom, const Allocation& alloc,
                             const Problem& prob);

// Number of objects each agent ranks at least as high as its worst endowed
// object, summed over agents. For CL preferences the count is taken under
// every conditional ranking and summed over all conditioning bundles.
long long size_function(const Problem& prob);

inline constexpr int kNoDivergence = std::numeric_limits<int>::max();

struct SizeSimilarity {
  int divergence = kNoDivergence;  // 1-based step, or kNoDivergence
  long long size = 0;
};

// First TTC (ATTC for CL profiles) step with a cycle that `alloc` does not
// carry out, and the size of the profile.
SizeSimilarity divergence_and_size(const Allocation& alloc,
                                   const Problem& prob);

// Truncation used to shrink a profile when `alloc` diverges from TTC: the
// agent whose pointing is not honoured at the first divergent step drops
// every outside object below the one it points to. Returns nullopt when
// `alloc` equals the TTC outcome.
struct DivergenceTruncation {
  int agent = -1;
  int cutoff = -1;
  Problem truncated;
};
std::optional<DivergenceTruncation> divergence_truncation(
    const Allocation& alloc, const Problem& prob);

// Builds a problem where an allocation passes IGE but fails PE, starting
// from a monotonic preference that is not conditionally lexicographic.
struct GapWitness {
  Bundle x;
  Bundle y;
  int x_star = -1;
  Problem problem;  // agent 0 holds the given preference; endowment is mu
  Allocation mu;
  Allocation dominating;
};
// Throws DomainError if the order is CL or not monotonic.
GapWitness ige_pe_gap_witness(const BundleOrder& order,
                              const std::vector<std::string>& objects);

}  // namespace ttclab
