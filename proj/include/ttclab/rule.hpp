#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ttclab/preference.hpp"
#include "ttclab/problem.hpp"

namespace ttclab {

// An allocation rule with the domains it is defined on. Rules built for one
// fixed market carry that market and reject any other.
class Rule {
 public:
  using Function = std::function<Allocation(const Problem&)>;

  Rule(std::string name, std::vector<Domain> domains, Function fn,
       std::shared_ptr<const Instance> pinned = nullptr);

  const std::string& name() const { return name_; }
  const std::vector<Domain>& domains() const { return domains_; }
  const std::shared_ptr<const Instance>& pinned() const { return pinned_; }

  // Whether every preference lies in one of the rule's domains and the
  // market matches the pinned one, if any.
  bool accepts(const Problem& prob) const;
  // Throws DomainError when !accepts(prob).
  Allocation operator()(const Problem& prob) const;

 private:
  std::string name_;
  std::vector<Domain> domains_;
  Function fn_;
  std::shared_ptr<const Instance> pinned_;
};

}  // namespace ttclab
