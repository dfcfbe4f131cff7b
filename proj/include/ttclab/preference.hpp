#pragma once

#include <compare>
#include <string_view>
#include <variant>

#include "ttclab/bundle.hpp"
#include "ttclab/lp_tree.hpp"
#include "ttclab/prefs.hpp"

namespace ttclab {

enum class PreferenceKind {
  kLexicographic,
  kResponsive,
  kConditionallyLexicographic,
  // Arbitrary strict order given as a table; only the axiom checkers use it.
  kExplicit,
};

std::string_view kind_name(PreferenceKind kind);

// A strict preference over bundles. Copies are cheap enough to pass by value
// in exhaustive sweeps.
class Preference {
 public:
  static Preference lexicographic(MarginalPreference order);
  // Throws InputError if the comparator disagrees with `marginal` or is not
  // a responsive strict order (checked exhaustively up to six objects).
  static Preference responsive(MarginalPreference marginal,
                               ResponsiveComparator comparator);
  // Generated extensions that are responsive by construction.
  static Preference responsive_unchecked(MarginalPreference marginal,
                                         ResponsiveComparator comparator);
  static Preference conditionally_lexicographic(LPTree tree);
  static Preference explicit_order(BundleOrder order);

  PreferenceKind kind() const { return kind_; }
  int num_objects() const { return marginal_.size(); }
  // Ranking of single objects.
  const MarginalPreference& marginal() const { return marginal_; }

  std::strong_ordering compare(Bundle a, Bundle b) const;
  bool prefers(Bundle a, Bundle b) const { return compare(a, b) > 0; }
  bool weakly_prefers(Bundle a, Bundle b) const { return compare(a, b) >= 0; }

  // Ranking of objects conditional on holding `given`. Defined for
  // lexicographic and CL preferences; throws DomainError otherwise.
  MarginalPreference conditional_marginal(Bundle given) const;

  // Variant accessors; each throws DomainError on the wrong kind.
  const ResponsiveComparator& comparator() const;
  const LPTree& tree() const;
  const BundleOrder& table() const;

  friend bool operator==(const Preference& a, const Preference& b);

 private:
  Preference() = default;

  PreferenceKind kind_ = PreferenceKind::kLexicographic;
  MarginalPreference marginal_;
  std::variant<std::monostate, ResponsiveComparator, LPTree, BundleOrder>
      detail_;
};

// Preference domains a rule can be defined on. Lexicographic preferences
// belong to all three.
enum class Domain { kLexicographic, kResponsive, kConditionallyLexicographic };

std::string_view domain_name(Domain domain);
bool in_domain(const Preference& p, Domain domain);

}  // namespace ttclab
