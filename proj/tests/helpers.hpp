#pragma once

#include <string>
#include <vector>

#include "ttclab/problem.hpp"
#include "ttclab/rules.hpp"

namespace ttclab::testing {

using Labels = std::vector<std::string>;

inline Bundle bundle(const Instance& inst, const Labels& labels) {
  return inst.bundle_of(labels);
}

inline Preference lex(const Instance& inst, const Labels& order) {
  return Preference::lexicographic(ranking(inst, order));
}

inline Allocation alloc(const Instance& inst,
                        const std::vector<Labels>& parts) {
  return inst.allocation_of(parts);
}

inline std::shared_ptr<const Instance> market(
    const Labels& agents, const Labels& objects,
    const std::vector<Labels>& endowment) {
  return Instance::create(agents, objects, endowment);
}

inline std::string data_path(const std::string& name) {
  return std::string(TTCLAB_TEST_DATA) + "/" + name;
}

}  // namespace ttclab::testing
