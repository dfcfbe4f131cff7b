#include "ttclab/prefs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

#include "ttclab/errors.hpp"

namespace ttclab {

MarginalPreference::MarginalPreference(std::vector<int> order)
    : order_(std::move(order)), rank_(order_.size(), -1) {
  const int n = size();
  if (n > kMaxObjects) throw InputError("too many objects in ranking");
  for (int r = 0; r < n; ++r) {
    const int o = order_[r];
    if (o < 0 || o >= n || rank_[o] != -1) {
      throw InputError("ranking is not a permutation of the objects");
    }
    rank_[o] = r;
  }
}

int MarginalPreference::best_of(Bundle set) const {
  for (int o : order_) {
    if (set.contains(o)) return o;
  }
  throw InputError("best_of on an empty set");
}

int MarginalPreference::worst_of(Bundle set) const {
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    if (set.contains(*it)) return *it;
  }
  throw InputError("worst_of on an empty set");
}

Bundle MarginalPreference::top_of(Bundle set, int k) const {
  Bundle out;
  for (int o : order_) {
    if (k == 0) break;
    if (set.contains(o)) {
      out = out.with(o);
      --k;
    }
  }
  return out;
}

Bundle MarginalPreference::weakly_above(int object) const {
  Bundle out;
  for (int r = 0; r <= rank_[object]; ++r) out = out.with(order_[r]);
  return out;
}

std::vector<int> MarginalPreference::restricted_to(Bundle set) const {
  std::vector<int> out;
  for (int o : order_) {
    if (set.contains(o)) out.push_back(o);
  }
  return out;
}

std::strong_ordering lex_compare(const MarginalPreference& m, Bundle x,
                                 Bundle y) {
  if (!(x | y).subset_of(Bundle::all(m.size()))) {
    throw InputError("bundle contains an object outside the ranking");
  }
  const Bundle diff = x ^ y;
  if (diff.empty()) return std::strong_ordering::equal;
  return x.contains(m.best_of(diff)) ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
}

BundleOrder::BundleOrder(int num_objects, std::vector<Bundle> order)
    : num_objects_(num_objects), order_(std::move(order)) {
  if (num_objects < 0 || num_objects > kMaxTabulatedObjects) {
    throw InputError("bundle orders are limited to " +
                     std::to_string(kMaxTabulatedObjects) + " objects");
  }
  const std::size_t count = std::size_t{1} << num_objects;
  if (order_.size() != count) {
    throw InputError("bundle order must list every subset exactly once");
  }
  rank_.assign(count, -1);
  for (std::size_t r = 0; r < count; ++r) {
    const std::uint64_t bits = order_[r].bits();
    if (bits >= count || rank_[bits] != -1) {
      throw InputError("bundle order must list every subset exactly once");
    }
    rank_[bits] = static_cast<int>(r);
  }
}

BundleOrder BundleOrder::from_comparator(
    int num_objects,
    const std::function<std::strong_ordering(Bundle, Bundle)>& cmp) {
  if (num_objects < 0 || num_objects > kMaxTabulatedObjects) {
    throw InputError("bundle orders are limited to " +
                     std::to_string(kMaxTabulatedObjects) + " objects");
  }
  const std::uint64_t count = std::uint64_t{1} << num_objects;
  // A tournament is a strict total order iff its score sequence is a
  // permutation of 0..count-1.
  std::vector<int> wins(count, 0);
  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t b = a + 1; b < count; ++b) {
      const auto c = cmp(Bundle(a), Bundle(b));
      if (c == std::strong_ordering::equal) {
        throw InputError("comparator ties two distinct bundles");
      }
      ++wins[c == std::strong_ordering::greater ? a : b];
    }
  }
  std::vector<Bundle> order(count);
  std::vector<bool> seen(count, false);
  for (std::uint64_t b = 0; b < count; ++b) {
    const std::uint64_t pos = count - 1 - wins[b];
    if (seen[pos]) throw InputError("comparator is not transitive");
    seen[pos] = true;
    order[pos] = Bundle(b);
  }
  return BundleOrder(num_objects, std::move(order));
}

MarginalPreference BundleOrder::marginal() const {
  std::vector<int> objects;
  for (Bundle b : order_) {
    if (b.size() == 1) objects.push_back(b.lowest());
  }
  return MarginalPreference(std::move(objects));
}

std::optional<ResponsiveViolation> check_responsive(const BundleOrder& order) {
  const int m = order.num_objects();
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t xb = 0; xb < count; ++xb) {
    const Bundle x(xb);
    for (int y = 0; y < m; ++y) {
      if (x.contains(y)) continue;
      for (int z = y + 1; z < m; ++z) {
        if (x.contains(z)) continue;
        const bool with_y = order.compare(x.with(y), x.with(z)) > 0;
        const bool single_y =
            order.compare(Bundle::single(y), Bundle::single(z)) > 0;
        if (with_y != single_y) return ResponsiveViolation{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool check_monotonic(const BundleOrder& order) {
  const int m = order.num_objects();
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t xb = 0; xb < count; ++xb) {
    const Bundle x(xb);
    for (int o = 0; o < m; ++o) {
      if (!x.contains(o) && order.compare(x.with(o), x) < 0) return false;
    }
  }
  return true;
}

std::optional<ClViolation> check_conditionally_lexicographic(
    const BundleOrder& order) {
  const int m = order.num_objects();
  const Bundle all = Bundle::all(m);
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t yb = 0; yb < count; ++yb) {
    const Bundle y(yb);
    const Bundle free = all - y;
    std::optional<ClViolation> found;
    for_each_subset(free, [&](Bundle x) {
      if (x.empty()) return true;
      // The only candidate is the x whose addition to Y ranks highest.
      int best = -1;
      for (int o : x) {
        if (best < 0 || order.compare(y.with(o), y.with(best)) > 0) best = o;
      }
      const Bundle top = y.with(best);
      const bool ok = for_each_subset(x.without(best), [&](Bundle z) {
        return order.compare(top, y | z) > 0;
      });
      if (!ok) {
        found = ClViolation{x, y};
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

ResponsiveComparator ResponsiveComparator::lexicographic(
    MarginalPreference marginal) {
  ResponsiveComparator c;
  c.scheme_ = Scheme::kLexicographic;
  c.marginal_ = std::move(marginal);
  return c;
}

ResponsiveComparator ResponsiveComparator::cardinality_first(
    MarginalPreference marginal) {
  ResponsiveComparator c;
  c.scheme_ = Scheme::kCardinalityFirst;
  c.marginal_ = std::move(marginal);
  return c;
}

namespace {

bool subset_sums_distinct(const std::vector<double>& u) {
  const int m = static_cast<int>(u.size());
  if (m > 20) return true;
  std::vector<double> sums(std::size_t{1} << m, 0.0);
  for (std::size_t s = 1; s < sums.size(); ++s) {
    const int low = std::countr_zero(s);
    sums[s] = sums[s & (s - 1)] + u[low];
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

}  // namespace

ResponsiveComparator ResponsiveComparator::additive(
    std::vector<double> utilities) {
  std::vector<int> order(utilities.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return utilities[a] > utilities[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (utilities[order[i]] == utilities[order[i - 1]]) {
      throw InputError("additive utilities must be pairwise distinct");
    }
  }
  if (!subset_sums_distinct(utilities)) {
    throw InputError("additive utilities tie on two bundles");
  }
  ResponsiveComparator c;
  c.scheme_ = Scheme::kAdditive;
  c.marginal_ = MarginalPreference(std::move(order));
  c.utilities_ = std::move(utilities);
  return c;
}

ResponsiveComparator ResponsiveComparator::table(BundleOrder order) {
  if (order.num_objects() > kMaxTableComparatorObjects) {
    throw InputError("table comparators are limited to " +
                     std::to_string(kMaxTableComparatorObjects) + " objects");
  }
  ResponsiveComparator c;
  c.scheme_ = Scheme::kTable;
  c.marginal_ = order.marginal();
  c.table_ = std::make_shared<const BundleOrder>(std::move(order));
  return c;
}

ResponsiveComparator ResponsiveComparator::with_overrides(
    std::vector<std::pair<Bundle, Bundle>> overrides) const {
  for (const auto& [a, b] : overrides) {
    if (a == b) throw InputError("override compares a bundle with itself");
  }
  ResponsiveComparator c = *this;
  c.overrides_ = std::move(overrides);
  return c;
}

std::strong_ordering ResponsiveComparator::compare(Bundle x, Bundle y) const {
  if (x == y) return std::strong_ordering::equal;
  for (const auto& [a, b] : overrides_) {
    if (a == x && b == y) return std::strong_ordering::greater;
    if (a == y && b == x) return std::strong_ordering::less;
  }
  switch (scheme_) {
    case Scheme::kLexicographic:
      return lex_compare(marginal_, x, y);
    case Scheme::kCardinalityFirst:
      if (x.size() != y.size()) return x.size() <=> y.size();
      return lex_compare(marginal_, x, y);
    case Scheme::kAdditive: {
      double sx = 0, sy = 0;
      for (int o : x) sx += utilities_[o];
      for (int o : y) sy += utilities_[o];
      if (sx > sy) return std::strong_ordering::greater;
      if (sx < sy) return std::strong_ordering::less;
      // Only reachable with non-generic utilities.
      return lex_compare(marginal_, x, y);
    }
    case Scheme::kTable:
      return table_->compare(x, y);
  }
  return std::strong_ordering::equal;
}

bool operator==(const ResponsiveComparator& a, const ResponsiveComparator& b) {
  if (a.scheme_ != b.scheme_ || a.overrides_ != b.overrides_) return false;
  switch (a.scheme_) {
    case ResponsiveComparator::Scheme::kLexicographic:
    case ResponsiveComparator::Scheme::kCardinalityFirst:
      return a.marginal_ == b.marginal_;
    case ResponsiveComparator::Scheme::kAdditive:
      return a.utilities_ == b.utilities_;
    case ResponsiveComparator::Scheme::kTable:
      return *a.table_ == *b.table_;
  }
  return false;
}

std::vector<double> random_additive_utilities(
    const MarginalPreference& marginal, std::uint64_t seed) {
  const int m = marginal.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(1, 1000000);
  while (true) {
    std::vector<double> values;
    std::unordered_set<int> used;
    while (static_cast<int>(values.size()) < m) {
      const int v = draw(rng);
      if (used.insert(v).second) values.push_back(v);
    }
    std::sort(values.rbegin(), values.rend());
    std::vector<double> u(m);
    for (int r = 0; r < m; ++r) u[marginal.order()[r]] = values[r];
    if (subset_sums_distinct(u)) return u;
  }
}

std::vector<double> concave_utilities(const MarginalPreference& marginal) {
  const int m = marginal.size();
  const double base = static_cast<double>(m) * m + 1;
  std::vector<double> u(m);
  for (int r = 0; r < m; ++r) {
    // The binary fraction keeps all subset sums distinct.
    u[marginal.order()[r]] =
        base - static_cast<double>(r) * r + std::ldexp(1.0, -(r + 1));
  }
  return u;
}

ResponsiveComparator make_extension(const MarginalPreference& marginal,
                                    ExtensionScheme scheme,
                                    std::uint64_t seed) {
  switch (scheme) {
    case ExtensionScheme::kCardinalityFirst:
      return ResponsiveComparator::cardinality_first(marginal);
    case ExtensionScheme::kAdditive:
      return ResponsiveComparator::additive(
          random_additive_utilities(marginal, seed));
    case ExtensionScheme::kLexicographic:
      break;
  }
  return ResponsiveComparator::lexicographic(marginal);
}

BundleOrder responsive_extension(const MarginalPreference& marginal,
                                 ExtensionScheme scheme, std::uint64_t seed) {
  const ResponsiveComparator c = make_extension(marginal, scheme, seed);
  return BundleOrder::from_comparator(
      marginal.size(), [&](Bundle x, Bundle y) { return c.compare(x, y); });
}

}  // namespace ttclab
