#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ttclab/bundle.hpp"

namespace ttclab {

// Comparisons in this library use std::strong_ordering with the convention
// that `greater` means the first bundle is preferred.

// Largest object count for which bundle orders are tabulated explicitly.
inline constexpr int kMaxTabulatedObjects = 6;
// Responsive comparators given as an explicit table.
inline constexpr int kMaxTableComparatorObjects = 4;

// Strict ranking of single objects, best first.
class MarginalPreference {
 public:
  MarginalPreference() = default;
  explicit MarginalPreference(std::vector<int> order);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int rank(int object) const { return rank_[object]; }
  bool prefers(int x, int y) const { return rank_[x] < rank_[y]; }

  int best_of(Bundle set) const;
  int worst_of(Bundle set) const;
  // The k best objects of `set`.
  Bundle top_of(Bundle set, int k) const;
  // Objects ranked at least as high as `object`.
  Bundle weakly_above(int object) const;
  // The objects of `set` in preference order.
  std::vector<int> restricted_to(Bundle set) const;

  friend bool operator==(const MarginalPreference&,
                         const MarginalPreference&) = default;

 private:
  std::vector<int> order_;
  std::vector<int> rank_;
};

// Lexicographic extension of `m`.
std::strong_ordering lex_compare(const MarginalPreference& m, Bundle x,
                                 Bundle y);

// Explicit strict order on all 2^m bundles, best first.
class BundleOrder {
 public:
  BundleOrder() = default;
  BundleOrder(int num_objects, std::vector<Bundle> order);

  // Tabulates a comparator. Throws InputError unless it is a strict total
  // order on the power set.
  static BundleOrder from_comparator(
      int num_objects,
      const std::function<std::strong_ordering(Bundle, Bundle)>& cmp);

  int num_objects() const { return num_objects_; }
  const std::vector<Bundle>& order() const { return order_; }
  int rank(Bundle b) const { return rank_[b.bits()]; }
  std::strong_ordering compare(Bundle x, Bundle y) const {
    return rank_[y.bits()] <=> rank_[x.bits()];
  }
  MarginalPreference marginal() const;

  friend bool operator==(const BundleOrder& a, const BundleOrder& b) {
    return a.order_ == b.order_;
  }

 private:
  int num_objects_ = 0;
  std::vector<Bundle> order_;
  std::vector<int> rank_;
};

// (X ∪ {y}) and (X ∪ {z}) are ranked against the singleton order of y, z.
struct ResponsiveViolation {
  Bundle base;
  int y;
  int z;
};

// No x* in X beats every Y ∪ Z for Z ⊆ X \ {x*}.
struct ClViolation {
  Bundle x;
  Bundle y;
};

std::optional<ResponsiveViolation> check_responsive(const BundleOrder& order);
bool check_monotonic(const BundleOrder& order);
std::optional<ClViolation> check_conditionally_lexicographic(
    const BundleOrder& order);

// Comparator for a responsive preference. A base scheme plus optional
// explicit overrides that are consulted first.
class ResponsiveComparator {
 public:
  enum class Scheme { kLexicographic, kCardinalityFirst, kAdditive, kTable };

  static ResponsiveComparator lexicographic(MarginalPreference marginal);
  // Smaller bundles first, ties broken lexicographically.
  static ResponsiveComparator cardinality_first(MarginalPreference marginal);
  static ResponsiveComparator additive(std::vector<double> utilities);
  static ResponsiveComparator table(BundleOrder order);

  // Each pair (a, b) states a is strictly above b.
  ResponsiveComparator with_overrides(
      std::vector<std::pair<Bundle, Bundle>> overrides) const;

  Scheme scheme() const { return scheme_; }
  const std::vector<double>& utilities() const { return utilities_; }
  const MarginalPreference& base_marginal() const { return marginal_; }
  const BundleOrder& table_order() const { return *table_; }
  const std::vector<std::pair<Bundle, Bundle>>& overrides() const {
    return overrides_;
  }

  std::strong_ordering compare(Bundle x, Bundle y) const;

  friend bool operator==(const ResponsiveComparator& a,
                         const ResponsiveComparator& b);

 private:
  Scheme scheme_ = Scheme::kLexicographic;
  MarginalPreference marginal_;
  std::vector<double> utilities_;
  std::shared_ptr<const BundleOrder> table_;
  std::vector<std::pair<Bundle, Bundle>> overrides_;
};

enum class ExtensionScheme { kCardinalityFirst, kAdditive, kLexicographic };

// Additive utilities consistent with `marginal`, drawn from `seed`, with all
// subset sums distinct.
std::vector<double> random_additive_utilities(
    const MarginalPreference& marginal, std::uint64_t seed);
// Additive utilities that favour middle-ranked pairs over extreme ones.
std::vector<double> concave_utilities(const MarginalPreference& marginal);

ResponsiveComparator make_extension(const MarginalPreference& marginal,
                                    ExtensionScheme scheme,
                                    std::uint64_t seed = 0);
BundleOrder responsive_extension(const MarginalPreference& marginal,
                                 ExtensionScheme scheme,
                                 std::uint64_t seed = 0);

}  // namespace ttclab
