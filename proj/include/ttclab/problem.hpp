#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ttclab/bundle.hpp"
#include "ttclab/preference.hpp"

namespace ttclab {

// One bundle per agent, indexed by agent. Parts may be empty while a
// mechanism is still running; validate_allocation checks the full
// invariants.
struct Allocation {
  std::vector<Bundle> parts;

  int num_agents() const { return static_cast<int>(parts.size()); }
  const Bundle& operator[](int agent) const { return parts[agent]; }
  Bundle& operator[](int agent) { return parts[agent]; }
  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation&, const Allocation&) = default;
};

using Endowment = Allocation;

// Agents, objects and the endowment. Labels are kept for I/O; everything
// else works with dense indices in label order as given.
class Instance {
 public:
  // endowment[i] lists the labels owned by agents[i]. Throws InputError.
  static std::shared_ptr<const Instance> create(
      std::vector<std::string> agents, std::vector<std::string> objects,
      const std::vector<std::vector<std::string>>& endowment);
  // Index-based variant.
  static std::shared_ptr<const Instance> create(
      std::vector<std::string> agents, std::vector<std::string> objects,
      Endowment endowment);

  int num_agents() const { return static_cast<int>(agents_.size()); }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& agent_label(int i) const { return agents_[i]; }
  const std::string& object_label(int o) const { return objects_[o]; }
  const Endowment& endowment() const { return endowment_; }
  Bundle endowment_of(int agent) const { return endowment_.parts[agent]; }
  int owner(int object) const { return owner_[object]; }
  Bundle all_objects() const { return Bundle::all(num_objects()); }

  std::optional<int> find_agent(std::string_view label) const;
  std::optional<int> find_object(std::string_view label) const;
  // Throws InputError on unknown labels.
  int agent_index(std::string_view label) const;
  int object_index(std::string_view label) const;
  Bundle bundle_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Bundle b) const;  // sorted
  Allocation allocation_of(
      const std::vector<std::vector<std::string>>& parts) const;

  // Same agents, objects (as label sets) and endowment.
  bool same_market(const Instance& other) const;

 private:
  Instance() = default;

  std::vector<std::string> agents_;
  std::vector<std::string> objects_;
  Endowment endowment_;
  std::vector<int> owner_;
};

// An instance together with a preference profile.
class Problem {
 public:
  Problem(std::shared_ptr<const Instance> instance,
          std::vector<Preference> preferences);

  const Instance& instance() const { return *instance_; }
  const std::shared_ptr<const Instance>& instance_ptr() const {
    return instance_;
  }
  int num_agents() const { return instance_->num_agents(); }
  int num_objects() const { return instance_->num_objects(); }
  Bundle endowment_of(int agent) const {
    return instance_->endowment_of(agent);
  }
  const std::vector<Preference>& preferences() const { return preferences_; }
  const Preference& preference(int agent) const { return preferences_[agent]; }

  Problem with_preference(int agent, Preference p) const;
  bool all_in(Domain domain) const;

  friend bool operator==(const Problem& a, const Problem& b) {
    return a.instance_->same_market(*b.instance_) &&
           a.preferences_ == b.preferences_;
  }

 private:
  std::shared_ptr<const Instance> instance_;
  std::vector<Preference> preferences_;
};

struct Violation {
  enum class Kind {
    kAgentCount,
    kEmptyPart,
    kOverlap,
    kUncovered,
    kForeignObject,
  };
  Kind kind;
  int agent = -1;
  int other_agent = -1;
  int object = -1;
};

std::string describe(const Violation& v, const Instance& instance);

// Every way `alloc` fails to be an allocation of the instance's objects.
std::vector<Violation> validate_allocation(const Allocation& alloc,
                                           const Instance& instance);
// Throws InputError when the agent counts differ.
bool is_balanced(const Allocation& alloc, const Endowment& endowment);

// Object-count cap for exhaustive enumeration. Defaults to 8; the
// TTCLAB_CAP environment variable overrides it.
int enumeration_cap();

// Visits every allocation (nonempty parts) in a fixed order: the owner
// vector of objects 0..m-1 read as a base-n counter. Stops when fn returns
// false. Throws CapacityError above the cap.
void for_each_allocation(const Instance& instance, bool balanced_only,
                         const std::function<bool(const Allocation&)>& fn);
std::vector<Allocation> enumerate_allocations(const Instance& instance,
                                              bool balanced_only);

}  // namespace ttclab
