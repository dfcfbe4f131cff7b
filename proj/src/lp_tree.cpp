#include "ttclab/lp_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace ttclab {

namespace {

std::string describe(const ClViolation& w) {
  return "order is not conditionally lexicographic (X mask " +
         std::to_string(w.x.bits()) + ", Y mask " + std::to_string(w.y.bits()) +
         ")";
}

// Appends a copy of the subtree of `src` rooted at `v` to `out`; returns the
// index of the copied root.
int copy_subtree(const std::vector<LPTree::Node>& src, int v,
                 std::vector<LPTree::Node>& out) {
  const int at = static_cast<int>(out.size());
  out.push_back({src[v].object, -1, -1});
  if (!src[v].leaf()) {
    const int in = copy_subtree(src, src[v].in_child, out);
    const int not_in = copy_subtree(src, src[v].out_child, out);
    out[at].in_child = in;
    out[at].out_child = not_in;
  }
  return at;
}

bool same_subtree(const LPTree& a, int u, const LPTree& b, int v) {
  const auto& x = a.node(u);
  const auto& y = b.node(v);
  if (x.object != y.object || x.leaf() != y.leaf()) return false;
  if (x.leaf()) return true;
  return same_subtree(a, x.in_child, b, y.in_child) &&
         same_subtree(a, x.out_child, b, y.out_child);
}

}  // namespace

NotConditionallyLexicographic::NotConditionallyLexicographic(
    ClViolation witness)
    : DomainError(describe(witness)), witness_(witness) {}

LPTree::LPTree(int num_objects, std::vector<Node> nodes)
    : num_objects_(num_objects), nodes_(std::move(nodes)) {
  if (num_objects < 1 || num_objects > kMaxObjects) {
    throw InputError("LP tree needs between 1 and 64 objects");
  }
  if (nodes_.empty()) throw InputError("LP tree has no vertices");
  const Bundle all = Bundle::all(num_objects);
  std::vector<int> visits(nodes_.size(), 0);
  std::function<void(int, Bundle)> check = [&](int v, Bundle seen) {
    if (v < 0 || v >= static_cast<int>(nodes_.size())) {
      throw InputError("LP tree child index out of range");
    }
    if (++visits[v] > 1) throw InputError("LP tree vertex has two parents");
    const Node& n = nodes_[v];
    if (n.object < 0 || n.object >= num_objects || seen.contains(n.object)) {
      throw InputError("LP tree path repeats an object or uses an unknown one");
    }
    seen = seen.with(n.object);
    if ((n.in_child < 0) != (n.out_child < 0)) {
      throw InputError("LP tree vertex has exactly one child");
    }
    if (n.leaf()) {
      if (seen != all) throw InputError("LP tree path misses an object");
      return;
    }
    check(n.in_child, seen);
    check(n.out_child, seen);
  };
  check(0, Bundle());
  if (std::count(visits.begin(), visits.end(), 0) != 0) {
    throw InputError("LP tree has unreachable vertices");
  }
}

LPTree LPTree::lexicographic(const MarginalPreference& order) {
  std::vector<Node> nodes;
  std::function<int(int)> build = [&](int depth) {
    const int at = static_cast<int>(nodes.size());
    nodes.push_back({order.order()[depth], -1, -1});
    if (depth + 1 < order.size()) {
      const int in = build(depth + 1);
      const int out = build(depth + 1);
      nodes[at].in_child = in;
      nodes[at].out_child = out;
    }
    return at;
  };
  build(0);
  return LPTree(order.size(), std::move(nodes));
}

LPTree LPTree::from_order(const BundleOrder& order) {
  if (auto w = check_conditionally_lexicographic(order)) {
    throw NotConditionallyLexicographic(*w);
  }
  const int m = order.num_objects();
  const Bundle all = Bundle::all(m);
  std::vector<Node> nodes;
  std::function<int(Bundle, Bundle)> build = [&](Bundle given, Bundle decided) {
    const Bundle rest = all - decided;
    int best = -1;
    for (int o : rest) {
      if (best < 0 || order.compare(given.with(o), given.with(best)) > 0) {
        best = o;
      }
    }
    const int at = static_cast<int>(nodes.size());
    nodes.push_back({best, -1, -1});
    if (rest.size() > 1) {
      const int in = build(given.with(best), decided.with(best));
      const int out = build(given, decided.with(best));
      nodes[at].in_child = in;
      nodes[at].out_child = out;
    }
    return at;
  };
  build(Bundle(), Bundle());
  return LPTree(m, std::move(nodes));
}

std::vector<int> LPTree::path(Bundle x) const {
  std::vector<int> out;
  out.reserve(num_objects_);
  int v = 0;
  while (true) {
    out.push_back(v);
    const Node& n = nodes_[v];
    if (n.leaf()) return out;
    v = x.contains(n.object) ? n.in_child : n.out_child;
  }
}

MarginalPreference LPTree::path_order(Bundle x) const {
  std::vector<int> labels;
  labels.reserve(num_objects_);
  int v = 0;
  while (true) {
    const Node& n = nodes_[v];
    labels.push_back(n.object);
    if (n.leaf()) break;
    v = x.contains(n.object) ? n.in_child : n.out_child;
  }
  return MarginalPreference(std::move(labels));
}

int LPTree::last_common_vertex(Bundle a, Bundle b) const {
  const Bundle diff = a ^ b;
  int v = 0;
  while (true) {
    const Node& n = nodes_[v];
    if (diff.contains(n.object) || n.leaf()) return v;
    v = a.contains(n.object) ? n.in_child : n.out_child;
  }
}

std::strong_ordering LPTree::compare(Bundle a, Bundle b) const {
  if (a == b) return std::strong_ordering::equal;
  const int v = last_common_vertex(a, b);
  return a.contains(nodes_[v].object) ? std::strong_ordering::greater
                                      : std::strong_ordering::less;
}

int LPTree::welb_vertex(Bundle endowment, Bundle x) const {
  int found = -1;
  for (int v : path(x)) {
    if (endowment.contains(nodes_[v].object)) found = v;
  }
  if (found < 0) throw InputError("WELB vertex of an empty endowment");
  return found;
}

Bundle LPTree::labels_through(Bundle x, int vertex) const {
  Bundle out;
  for (int v : path(x)) {
    out = out.with(nodes_[v].object);
    if (v == vertex) return out;
  }
  throw InputError("vertex is not on the path of the bundle");
}

BundleOrder LPTree::to_order() const {
  if (num_objects_ > kMaxTabulatedObjects) {
    throw InputError("tree too large to tabulate");
  }
  std::vector<Bundle> all(std::size_t{1} << num_objects_);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = Bundle(i);
  std::sort(all.begin(), all.end(),
            [&](Bundle a, Bundle b) { return compare(a, b) > 0; });
  return BundleOrder(num_objects_, std::move(all));
}

bool LPTree::is_lexicographic() const {
  std::vector<int> label_at_depth(num_objects_, -1);
  std::function<bool(int, int)> walk = [&](int v, int depth) {
    const Node& n = nodes_[v];
    if (label_at_depth[depth] < 0) label_at_depth[depth] = n.object;
    if (label_at_depth[depth] != n.object) return false;
    return n.leaf() ||
           (walk(n.in_child, depth + 1) && walk(n.out_child, depth + 1));
  };
  return walk(0, 0);
}

LPTree LPTree::drop(int object) const {
  if (object < 0 || object >= num_objects_) {
    throw InputError("drop of an unknown object");
  }
  if (num_objects_ == 1) return *this;
  std::vector<Node> out;
  // Returns -1 when the subtree vanishes (a lone leaf labelled `object`).
  std::function<int(int)> rebuild = [&](int v) -> int {
    const Node& n = nodes_[v];
    if (n.object == object) return n.leaf() ? -1 : rebuild(n.out_child);
    const int at = static_cast<int>(out.size());
    out.push_back({n.object, -1, -1});
    int in = -1;
    int not_in = -1;
    if (!n.leaf()) {
      in = rebuild(n.in_child);
      not_in = rebuild(n.out_child);
    }
    if (in < 0) {
      // A leaf of the spliced tree: hang the dropped object below it.
      in = static_cast<int>(out.size());
      out.push_back({object, -1, -1});
      not_in = static_cast<int>(out.size());
      out.push_back({object, -1, -1});
    }
    out[at].in_child = in;
    out[at].out_child = not_in;
    return at;
  };
  rebuild(0);
  return LPTree(num_objects_, std::move(out));
}

bool operator==(const LPTree& a, const LPTree& b) {
  return a.num_objects_ == b.num_objects_ && same_subtree(a, 0, b, 0);
}

std::vector<LPTree> all_lp_trees(int num_objects) {
  if (num_objects < 1 || num_objects > 4) {
    throw CapacityError("all_lp_trees is limited to four objects");
  }
  using Fragment = std::vector<LPTree::Node>;
  std::map<std::uint64_t, std::vector<Fragment>> memo;
  std::function<const std::vector<Fragment>&(Bundle)> trees_over =
      [&](Bundle set) -> const std::vector<Fragment>& {
    auto it = memo.find(set.bits());
    if (it != memo.end()) return it->second;
    std::vector<Fragment> result;
    for (int label : set) {
      const Bundle rest = set.without(label);
      if (rest.empty()) {
        result.push_back({{label, -1, -1}});
        continue;
      }
      const std::vector<Fragment> subs = trees_over(rest);
      for (const Fragment& in : subs) {
        for (const Fragment& out : subs) {
          Fragment f;
          f.reserve(1 + in.size() + out.size());
          const int in_at = 1;
          const int out_at = 1 + static_cast<int>(in.size());
          f.push_back({label, in_at, out_at});
          for (auto n : in) {
            if (!n.leaf()) {
              n.in_child += in_at;
              n.out_child += in_at;
            }
            f.push_back(n);
          }
          for (auto n : out) {
            if (!n.leaf()) {
              n.in_child += out_at;
              n.out_child += out_at;
            }
            f.push_back(n);
          }
          result.push_back(std::move(f));
        }
      }
    }
    return memo.emplace(set.bits(), std::move(result)).first->second;
  };
  std::vector<LPTree> out;
  for (const Fragment& f : trees_over(Bundle::all(num_objects))) {
    out.emplace_back(num_objects, f);
  }
  return out;
}

LPTree random_lp_tree(int num_objects, std::mt19937_64& rng) {
  std::vector<LPTree::Node> nodes;
  std::function<int(Bundle)> build = [&](Bundle rest) {
    std::vector<int> choices(rest.begin(), rest.end());
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    const int label = choices[pick(rng)];
    const int at = static_cast<int>(nodes.size());
    nodes.push_back({label, -1, -1});
    if (rest.size() > 1) {
      const int in = build(rest.without(label));
      const int out = build(rest.without(label));
      nodes[at].in_child = in;
      nodes[at].out_child = out;
    }
    return at;
  };
  build(Bundle::all(num_objects));
  return LPTree(num_objects, std::move(nodes));
}

}  // namespace ttclab
