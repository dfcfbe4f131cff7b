#include "ttclab/problem.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>

#include "ttclab/errors.hpp"

namespace ttclab {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InputError(std::string("empty ") + what + " label");
    if (!seen.insert(l).second) {
      throw InputError(std::string("duplicate ") + what + " label '" + l + "'");
    }
  }
}

}  // namespace

std::shared_ptr<const Instance> Instance::create(
    std::vector<std::string> agents, std::vector<std::string> objects,
    const std::vector<std::vector<std::string>>& endowment) {
  if (objects.size() > static_cast<std::size_t>(kMaxObjects)) {
    throw InputError("at most 64 objects are supported");
  }
  std::vector<std::string> object_copy = objects;
  Endowment e;
  for (const auto& part : endowment) {
    Bundle b;
    for (const auto& label : part) {
      auto it = std::find(object_copy.begin(), object_copy.end(), label);
      if (it == object_copy.end()) {
        throw InputError("endowment names unknown object '" + label + "'");
      }
      b = b.with(static_cast<int>(it - object_copy.begin()));
    }
    e.parts.push_back(b);
  }
  return create(std::move(agents), std::move(objects), std::move(e));
}

std::shared_ptr<const Instance> Instance::create(
    std::vector<std::string> agents, std::vector<std::string> objects,
    Endowment endowment) {
  check_labels(agents, "agent");
  check_labels(objects, "object");
  if (agents.size() < 2) throw InputError("need at least two agents");
  if (objects.size() > static_cast<std::size_t>(kMaxObjects)) {
    throw InputError("at most 64 objects are supported");
  }
  if (objects.size() < agents.size()) {
    throw InputError("need at least as many objects as agents");
  }
  std::shared_ptr<Instance> inst(new Instance());
  inst->agents_ = std::move(agents);
  inst->objects_ = std::move(objects);
  inst->endowment_ = std::move(endowment);
  const auto violations = validate_allocation(inst->endowment_, *inst);
  if (!violations.empty()) {
    throw InputError("endowment: " + describe(violations.front(), *inst));
  }
  inst->owner_.assign(inst->objects_.size(), -1);
  for (int i = 0; i < inst->num_agents(); ++i) {
    for (int o : inst->endowment_.parts[i]) inst->owner_[o] = i;
  }
  return inst;
}

std::optional<int> Instance::find_agent(std::string_view label) const {
  auto it = std::find(agents_.begin(), agents_.end(), label);
  if (it == agents_.end()) return std::nullopt;
  return static_cast<int>(it - agents_.begin());
}

std::optional<int> Instance::find_object(std::string_view label) const {
  auto it = std::find(objects_.begin(), objects_.end(), label);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<int>(it - objects_.begin());
}

int Instance::agent_index(std::string_view label) const {
  if (auto i = find_agent(label)) return *i;
  throw InputError("unknown agent '" + std::string(label) + "'");
}

int Instance::object_index(std::string_view label) const {
  if (auto o = find_object(label)) return *o;
  throw InputError("unknown object '" + std::string(label) + "'");
}

Bundle Instance::bundle_of(const std::vector<std::string>& labels) const {
  Bundle b;
  for (const auto& l : labels) {
    const int o = object_index(l);
    if (b.contains(o)) throw InputError("object '" + l + "' listed twice");
    b = b.with(o);
  }
  return b;
}

std::vector<std::string> Instance::labels_of(Bundle b) const {
  std::vector<std::string> out;
  for (int o : b) out.push_back(objects_[o]);
  std::sort(out.begin(), out.end());
  return out;
}

Allocation Instance::allocation_of(
    const std::vector<std::vector<std::string>>& parts) const {
  Allocation a;
  for (const auto& p : parts) a.parts.push_back(bundle_of(p));
  return a;
}

bool Instance::same_market(const Instance& other) const {
  if (agents_ != other.agents_) return false;
  if (std::set<std::string>(objects_.begin(), objects_.end()) !=
      std::set<std::string>(other.objects_.begin(), other.objects_.end())) {
    return false;
  }
  for (int i = 0; i < num_agents(); ++i) {
    if (labels_of(endowment_.parts[i]) !=
        other.labels_of(other.endowment_.parts[i])) {
      return false;
    }
  }
  return true;
}

Problem::Problem(std::shared_ptr<const Instance> instance,
                 std::vector<Preference> preferences)
    : instance_(std::move(instance)), preferences_(std::move(preferences)) {
  if (!instance_) throw InputError("problem without an instance");
  if (static_cast<int>(preferences_.size()) != instance_->num_agents()) {
    throw InputError("need exactly one preference per agent");
  }
  for (const auto& p : preferences_) {
    if (p.num_objects() != instance_->num_objects()) {
      throw InputError("preference ranks a different number of objects");
    }
  }
}

Problem Problem::with_preference(int agent, Preference p) const {
  std::vector<Preference> prefs = preferences_;
  prefs[agent] = std::move(p);
  return Problem(instance_, std::move(prefs));
}

bool Problem::all_in(Domain domain) const {
  return std::all_of(preferences_.begin(), preferences_.end(),
                     [&](const Preference& p) { return in_domain(p, domain); });
}

std::string describe(const Violation& v, const Instance& instance) {
  auto agent = [&](int i) {
    return i >= 0 && i < instance.num_agents() ? instance.agent_label(i)
                                               : std::to_string(i);
  };
  auto object = [&](int o) {
    return o >= 0 && o < instance.num_objects() ? instance.object_label(o)
                                                : "#" + std::to_string(o);
  };
  switch (v.kind) {
    case Violation::Kind::kAgentCount:
      return "allocation has the wrong number of agents";
    case Violation::Kind::kEmptyPart:
      return "agent " + agent(v.agent) + " receives nothing";
    case Violation::Kind::kOverlap:
      return "object " + object(v.object) + " given to agents " +
             agent(v.agent) + " and " + agent(v.other_agent);
    case Violation::Kind::kUncovered:
      return "object " + object(v.object) + " is not allocated";
    case Violation::Kind::kForeignObject:
      return "agent " + agent(v.agent) + " receives unknown object " +
             object(v.object);
  }
  return "?";
}

std::vector<Violation> validate_allocation(const Allocation& alloc,
                                           const Instance& instance) {
  std::vector<Violation> out;
  if (alloc.num_agents() != instance.num_agents()) {
    out.push_back({Violation::Kind::kAgentCount});
    return out;
  }
  const Bundle all = instance.all_objects();
  std::vector<int> holder(kMaxObjects, -1);
  for (int i = 0; i < alloc.num_agents(); ++i) {
    const Bundle part = alloc.parts[i];
    if (part.empty()) out.push_back({Violation::Kind::kEmptyPart, i});
    for (int o : part) {
      if (!all.contains(o)) {
        out.push_back({Violation::Kind::kForeignObject, i, -1, o});
        continue;
      }
      if (holder[o] >= 0) {
        out.push_back({Violation::Kind::kOverlap, holder[o], i, o});
      } else {
        holder[o] = i;
      }
    }
  }
  for (int o = 0; o < instance.num_objects(); ++o) {
    if (holder[o] < 0) out.push_back({Violation::Kind::kUncovered, -1, -1, o});
  }
  return out;
}

bool is_balanced(const Allocation& alloc, const Endowment& endowment) {
  if (alloc.num_agents() != endowment.num_agents()) {
    throw InputError("allocation and endowment have different agent counts");
  }
  for (int i = 0; i < alloc.num_agents(); ++i) {
    if (alloc.parts[i].size() != endowment.parts[i].size()) return false;
  }
  return true;
}

int enumeration_cap() {
  const char* env = std::getenv("TTCLAB_CAP");
  if (env == nullptr) return 8;
  const std::string_view s(env);
  int parsed = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), parsed);
  if (ec == std::errc() && p == s.data() + s.size() && parsed > 0) {
    return parsed;
  }
  return 8;
}

void for_each_allocation(const Instance& instance, bool balanced_only,
                         const std::function<bool(const Allocation&)>& fn) {
  const int n = instance.num_agents();
  const int m = instance.num_objects();
  if (m > enumeration_cap()) {
    throw CapacityError("enumeration over " + std::to_string(m) +
                        " objects exceeds the cap of " +
                        std::to_string(enumeration_cap()) +
                        " (set TTCLAB_CAP to raise it)");
  }
  std::vector<int> owner(m, 0);
  Allocation a;
  a.parts.assign(n, Bundle());
  while (true) {
    for (auto& p : a.parts) p = Bundle();
    for (int o = 0; o < m; ++o) a.parts[owner[o]] = a.parts[owner[o]].with(o);
    bool ok = std::none_of(a.parts.begin(), a.parts.end(),
                           [](Bundle b) { return b.empty(); });
    if (ok && balanced_only) ok = is_balanced(a, instance.endowment());
    if (ok && !fn(a)) return;
    // The last object is the most significant digit.
    int o = 0;
    while (o < m && ++owner[o] == n) owner[o++] = 0;
    if (o == m) return;
  }
}

std::vector<Allocation> enumerate_allocations(const Instance& instance,
                                              bool balanced_only) {
  std::vector<Allocation> out;
  for_each_allocation(instance, balanced_only, [&](const Allocation& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace ttclab
