#include "ttclab/preference.hpp"

#include "ttclab/errors.hpp"

namespace ttclab {

std::string_view kind_name(PreferenceKind kind) {
  switch (kind) {
    case PreferenceKind::kLexicographic:
      return "lex";
    case PreferenceKind::kResponsive:
      return "responsive";
    case PreferenceKind::kConditionallyLexicographic:
      return "cl";
    case PreferenceKind::kExplicit:
      return "order";
  }
  return "?";
}

std::string_view domain_name(Domain domain) {
  switch (domain) {
    case Domain::kLexicographic:
      return "lexicographic";
    case Domain::kResponsive:
      return "responsive";
    case Domain::kConditionallyLexicographic:
      return "conditionally lexicographic";
  }
  return "?";
}

bool in_domain(const Preference& p, Domain domain) {
  switch (p.kind()) {
    case PreferenceKind::kLexicographic:
      return true;
    case PreferenceKind::kResponsive:
      return domain == Domain::kResponsive;
    case PreferenceKind::kConditionallyLexicographic:
      return domain == Domain::kConditionallyLexicographic;
    case PreferenceKind::kExplicit:
      return false;
  }
  return false;
}

Preference Preference::lexicographic(MarginalPreference order) {
  Preference p;
  p.kind_ = PreferenceKind::kLexicographic;
  p.marginal_ = std::move(order);
  return p;
}

Preference Preference::responsive(MarginalPreference marginal,
                                  ResponsiveComparator comparator) {
  const int m = marginal.size();
  if (comparator.base_marginal().size() != m) {
    throw InputError("comparator and marginal rank different object sets");
  }
  if (m <= kMaxTabulatedObjects) {
    const BundleOrder order = BundleOrder::from_comparator(
        m, [&](Bundle x, Bundle y) { return comparator.compare(x, y); });
    if (!(order.marginal() == marginal)) {
      throw InputError("comparator disagrees with the declared marginal");
    }
    if (check_responsive(order)) {
      throw InputError("comparator is not responsive");
    }
  } else {
    if (comparator.scheme() == ResponsiveComparator::Scheme::kTable ||
        !comparator.overrides().empty()) {
      throw InputError(
          "tables and overrides need at most six objects to be validated");
    }
    if (!(comparator.base_marginal() == marginal)) {
      throw InputError("comparator disagrees with the declared marginal");
    }
  }
  return responsive_unchecked(std::move(marginal), std::move(comparator));
}

Preference Preference::responsive_unchecked(MarginalPreference marginal,
                                            ResponsiveComparator comparator) {
  Preference p;
  p.kind_ = PreferenceKind::kResponsive;
  p.marginal_ = std::move(marginal);
  p.detail_ = std::move(comparator);
  return p;
}

Preference Preference::conditionally_lexicographic(LPTree tree) {
  Preference p;
  p.kind_ = PreferenceKind::kConditionallyLexicographic;
  p.marginal_ = tree.path_order(Bundle());
  p.detail_ = std::move(tree);
  return p;
}

Preference Preference::explicit_order(BundleOrder order) {
  Preference p;
  p.kind_ = PreferenceKind::kExplicit;
  p.marginal_ = order.marginal();
  p.detail_ = std::move(order);
  return p;
}

std::strong_ordering Preference::compare(Bundle a, Bundle b) const {
  switch (kind_) {
    case PreferenceKind::kLexicographic:
      return lex_compare(marginal_, a, b);
    case PreferenceKind::kResponsive:
      return std::get<ResponsiveComparator>(detail_).compare(a, b);
    case PreferenceKind::kConditionallyLexicographic:
      return std::get<LPTree>(detail_).compare(a, b);
    case PreferenceKind::kExplicit:
      return std::get<BundleOrder>(detail_).compare(a, b);
  }
  return std::strong_ordering::equal;
}

MarginalPreference Preference::conditional_marginal(Bundle given) const {
  switch (kind_) {
    case PreferenceKind::kLexicographic:
      return marginal_;
    case PreferenceKind::kConditionallyLexicographic:
      return std::get<LPTree>(detail_).path_order(given);
    default:
      throw DomainError("conditional marginal needs a CL preference");
  }
}

const ResponsiveComparator& Preference::comparator() const {
  if (kind_ != PreferenceKind::kResponsive) {
    throw DomainError("preference is not responsive");
  }
  return std::get<ResponsiveComparator>(detail_);
}

const LPTree& Preference::tree() const {
  if (kind_ != PreferenceKind::kConditionallyLexicographic) {
    throw DomainError("preference has no LP tree");
  }
  return std::get<LPTree>(detail_);
}

const BundleOrder& Preference::table() const {
  if (kind_ != PreferenceKind::kExplicit) {
    throw DomainError("preference is not an explicit order");
  }
  return std::get<BundleOrder>(detail_);
}

bool operator==(const Preference& a, const Preference& b) {
  return a.kind_ == b.kind_ && a.marginal_ == b.marginal_ &&
         a.detail_ == b.detail_;
}

}  // namespace ttclab
