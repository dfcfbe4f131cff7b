#pragma once

#include <compare>
#include <random>
#include <vector>

#include "ttclab/bundle.hpp"
#include "ttclab/errors.hpp"
#include "ttclab/prefs.hpp"

namespace ttclab {

// Raised by LPTree::from_order on an order that is not conditionally
// lexicographic.
class NotConditionallyLexicographic : public DomainError {
 public:
  explicit NotConditionallyLexicographic(ClViolation witness);
  const ClViolation& witness() const { return witness_; }

 private:
  ClViolation witness_;
};

// Lexicographic preference tree. Every root-to-leaf path lists each object
// exactly once; at an internal vertex the `in` edge is followed by bundles
// containing the vertex's object.
class LPTree {
 public:
  struct Node {
    int object = -1;
    int in_child = -1;
    int out_child = -1;
    bool leaf() const { return in_child < 0; }
  };

  LPTree() = default;
  // nodes[0] is the root. Throws InputError on a malformed tree.
  LPTree(int num_objects, std::vector<Node> nodes);

  static LPTree lexicographic(const MarginalPreference& order);
  // Throws NotConditionallyLexicographic if `order` has no tree.
  static LPTree from_order(const BundleOrder& order);

  int num_objects() const { return num_objects_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int v) const { return nodes_[v]; }

  // Vertices on the path selected by `x`, root first.
  std::vector<int> path(Bundle x) const;
  // Objects in the order they appear on path(x). This is the conditional
  // marginal ranking given x.
  MarginalPreference path_order(Bundle x) const;
  std::strong_ordering compare(Bundle a, Bundle b) const;
  // First vertex whose object separates a and b; the leaf of path(a) if
  // a == b.
  int last_common_vertex(Bundle a, Bundle b) const;
  // Last vertex on path(x) labelled with an object of `endowment`.
  int welb_vertex(Bundle endowment, Bundle x) const;
  // Objects on path(x) from the root down to `vertex` inclusive.
  Bundle labels_through(Bundle x, int vertex) const;

  BundleOrder to_order() const;
  bool is_lexicographic() const;

  // Removes every vertex labelled `object` (keeping its out subtree) and
  // hangs a fresh `object` split under each remaining leaf.
  LPTree drop(int object) const;

  friend bool operator==(const LPTree& a, const LPTree& b);

 private:
  int num_objects_ = 0;
  std::vector<Node> nodes_;
};

// Every LP tree over `num_objects` objects (576 at four objects).
std::vector<LPTree> all_lp_trees(int num_objects);
LPTree random_lp_tree(int num_objects, std::mt19937_64& rng);

}  // namespace ttclab
