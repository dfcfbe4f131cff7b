#pragma once

#include "ttclab/problem.hpp"
#include "ttclab/ttc.hpp"

namespace ttclab {

// Augmented TTC: each agent points to its best remaining object under its
// ranking conditional on what it has already received. Accepts CL and
// lexicographic preferences; throws DomainError otherwise.
MechanismTrace run_attc(const Problem& prob);
Allocation attc(const Problem& prob);

// Same procedure, but while other cycles are available the cycle through
// `agent` is held back. The final allocation equals run_attc's.
MechanismTrace run_attc_deferred(const Problem& prob, int agent);

}  // namespace ttclab
