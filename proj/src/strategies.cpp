#include "ttclab/strategies.hpp"

#include <algorithm>
#include <numeric>

#include "ttclab/errors.hpp"

namespace ttclab {

std::string_view strategy_class_name(StrategyClass cls) {
  switch (cls) {
    case StrategyClass::kTruncation:
      return "truncation";
    case StrategyClass::kDrop:
      return "drop";
    case StrategyClass::kSubsetDrop:
      return "subset-drop";
    case StrategyClass::kAny:
      return "any";
  }
  return "?";
}

Axiom incentive_axiom(StrategyClass cls) {
  switch (cls) {
    case StrategyClass::kTruncation:
      return Axiom::kTp;
    case StrategyClass::kDrop:
      return Axiom::kDsp;
    case StrategyClass::kSubsetDrop:
      return Axiom::kSdsp;
    case StrategyClass::kAny:
      return Axiom::kSp;
  }
  return Axiom::kSp;
}

MarginalPreference drop_objects(const MarginalPreference& m, Bundle dropped) {
  std::vector<int> kept;
  std::vector<int> tail;
  for (int o : m.order()) (dropped.contains(o) ? tail : kept).push_back(o);
  kept.insert(kept.end(), tail.begin(), tail.end());
  return MarginalPreference(std::move(kept));
}

std::vector<MarginalPreference> gen_subset_drops(const MarginalPreference& m,
                                                 Bundle endowment) {
  const std::vector<int> outside =
      m.restricted_to(Bundle::all(m.size()) - endowment);
  if (outside.size() > 20) throw CapacityError("too many subset drops");
  std::vector<MarginalPreference> out;
  const std::uint64_t count = std::uint64_t{1} << outside.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Bundle dropped;
    for (std::size_t k = 0; k < outside.size(); ++k) {
      if ((mask >> k) & 1u) dropped = dropped.with(outside[k]);
    }
    out.push_back(drop_objects(m, dropped));
  }
  return out;
}

std::vector<MarginalPreference> gen_drops(const MarginalPreference& m,
                                          Bundle endowment) {
  std::vector<MarginalPreference> out{m};
  for (int o : m.restricted_to(Bundle::all(m.size()) - endowment)) {
    out.push_back(drop_objects(m, Bundle::single(o)));
  }
  return out;
}

std::vector<MarginalPreference> gen_truncations(const MarginalPreference& m,
                                                Bundle endowment) {
  const Bundle outside = Bundle::all(m.size()) - endowment;
  std::vector<MarginalPreference> out;
  // Walking cutoffs from the bottom puts the identity first.
  for (auto it = m.order().rbegin(); it != m.order().rend(); ++it) {
    Bundle dropped;
    for (int o : outside) {
      if (m.prefers(*it, o)) dropped = dropped.with(o);
    }
    MarginalPreference t = drop_objects(m, dropped);
    if (std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool dominates_pointwise(const MarginalPreference& m, Bundle upper,
                         Bundle lower) {
  if (upper.size() != lower.size()) return false;
  // Pair the k-th best of each side; this greedy match is optimal.
  const std::vector<int> u = m.restricted_to(upper);
  const std::vector<int> l = m.restricted_to(lower);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (m.prefers(l[k], u[k])) return false;
  }
  return true;
}

LPTree drop_cl(const LPTree& tree, int object, Bundle endowment) {
  if (endowment.contains(object)) {
    throw DomainError("an agent cannot drop an object it owns");
  }
  return tree.drop(object);
}

Preference report_with_marginal(const Preference& truth,
                                const MarginalPreference& m) {
  switch (truth.kind()) {
    case PreferenceKind::kLexicographic:
      return Preference::lexicographic(m);
    case PreferenceKind::kResponsive: {
      const ResponsiveComparator& c = truth.comparator();
      if (c.scheme() == ResponsiveComparator::Scheme::kAdditive &&
          c.overrides().empty()) {
        std::vector<double> sorted = c.utilities();
        std::sort(sorted.rbegin(), sorted.rend());
        std::vector<double> u(m.size());
        for (int r = 0; r < m.size(); ++r) u[m.order()[r]] = sorted[r];
        return Preference::responsive_unchecked(
            m, ResponsiveComparator::additive(std::move(u)));
      }
      if (c.scheme() == ResponsiveComparator::Scheme::kCardinalityFirst &&
          c.overrides().empty()) {
        return Preference::responsive_unchecked(
            m, ResponsiveComparator::cardinality_first(m));
      }
      return Preference::responsive_unchecked(
          m, ResponsiveComparator::lexicographic(m));
    }
    default:
      throw DomainError(
          "marginal misreports need a lexicographic or "
          "responsive preference");
  }
}

std::vector<Preference> misreports(const Preference& truth, Bundle endowment,
                                   StrategyClass cls) {
  std::vector<Preference> out;
  if (truth.kind() == PreferenceKind::kConditionallyLexicographic) {
    if (cls != StrategyClass::kDrop) {
      throw DomainError("CL preferences only have drop strategies here");
    }
    for (int o = 0; o < truth.num_objects(); ++o) {
      if (endowment.contains(o)) continue;
      LPTree t = drop_cl(truth.tree(), o, endowment);
      if (!(t == truth.tree())) {
        out.push_back(Preference::conditionally_lexicographic(std::move(t)));
      }
    }
    return out;
  }
  const MarginalPreference& m = truth.marginal();
  std::vector<MarginalPreference> marginals;
  switch (cls) {
    case StrategyClass::kTruncation:
      marginals = gen_truncations(m, endowment);
      break;
    case StrategyClass::kDrop:
      marginals = gen_drops(m, endowment);
      break;
    case StrategyClass::kSubsetDrop:
      marginals = gen_subset_drops(m, endowment);
      break;
    case StrategyClass::kAny: {
      if (truth.kind() != PreferenceKind::kLexicographic) {
        throw DomainError("SP audits need lexicographic preferences");
      }
      std::vector<int> perm(m.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        marginals.emplace_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
  }
  std::vector<MarginalPreference> seen;
  for (const auto& r : marginals) {
    if (r == m || std::find(seen.begin(), seen.end(), r) != seen.end()) {
      continue;
    }
    seen.push_back(r);
    out.push_back(report_with_marginal(truth, r));
  }
  return out;
}

AxiomReport audit_incentives(const Rule& rule, const Problem& prob,
                             StrategyClass cls) {
  const Axiom axiom = incentive_axiom(cls);
  const Allocation truthful = rule(prob);
  for (int i = 0; i < prob.num_agents(); ++i) {
    const Preference& truth = prob.preference(i);
    for (Preference& report : misreports(truth, prob.endowment_of(i), cls)) {
      const Problem lied = prob.with_preference(i, report);
      const Bundle got = rule(lied)[i];
      if (truth.prefers(got, truthful[i])) {
        return {
            axiom, false,
            ManipulationWitness{i, prob, std::move(report), truthful[i], got}};
      }
    }
  }
  return {axiom};
}

std::vector<Bundle> opportunity_set(const Rule& rule, const Problem& prob,
                                    int agent, const Preference& report) {
  const int n = prob.num_agents();
  const int m = prob.num_objects();
  if (m > enumeration_cap()) {
    throw CapacityError("opportunity sets enumerate every profile");
  }
  std::vector<MarginalPreference> rankings;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    rankings.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  double profiles = 1;
  for (int j = 1; j < n; ++j) profiles *= static_cast<double>(rankings.size());
  if (profiles > 2e6) throw CapacityError("too many profiles to enumerate");

  std::vector<Preference> prefs = prob.preferences();
  prefs[agent] = report;
  std::vector<int> digit(n, 0);
  std::vector<Bundle> out;
  while (true) {
    for (int j = 0; j < n; ++j) {
      if (j != agent) prefs[j] = Preference::lexicographic(rankings[digit[j]]);
    }
    out.push_back(rule(Problem(prob.instance_ptr(), prefs))[agent]);
    int j = 0;
    for (; j < n; ++j) {
      if (j == agent) continue;
      if (++digit[j] < static_cast<int>(rankings.size())) break;
      digit[j] = 0;
    }
    if (j == n) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

Bundle best_of(const Preference& p, const std::vector<Bundle>& set) {
  return *std::max_element(set.begin(), set.end(), [&](Bundle a, Bundle b) {
    return p.compare(a, b) < 0;
  });
}

Bundle worst_of(const Preference& p, const std::vector<Bundle>& set) {
  return *std::min_element(set.begin(), set.end(), [&](Bundle a, Bundle b) {
    return p.compare(a, b) < 0;
  });
}

}  // namespace

AxiomReport audit_nom(const Rule& rule, const Problem& prob) {
  const Allocation truthful = rule(prob);
  for (int i = 0; i < prob.num_agents(); ++i) {
    const Preference& truth = prob.preference(i);
    std::optional<std::vector<Bundle>> honest;
    std::vector<Preference> reports;
    if (truth.kind() == PreferenceKind::kConditionallyLexicographic) {
      reports = misreports(truth, prob.endowment_of(i), StrategyClass::kDrop);
    } else {
      // Every ranking, reported with a same-kind extension.
      std::vector<int> perm(truth.num_objects());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        MarginalPreference r(perm);
        if (!(r == truth.marginal())) {
          reports.push_back(report_with_marginal(truth, r));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (const Preference& report : reports) {
      const Bundle got = rule(prob.with_preference(i, report))[i];
      if (!truth.prefers(got, truthful[i])) continue;
      if (!honest) honest = opportunity_set(rule, prob, i, truth);
      const auto lied = opportunity_set(rule, prob, i, report);
      const Bundle hb = best_of(truth, *honest);
      const Bundle hw = worst_of(truth, *honest);
      const Bundle lb = best_of(truth, lied);
      const Bundle lw = worst_of(truth, lied);
      if (truth.prefers(lb, hb) || truth.prefers(lw, hw)) {
        return {Axiom::kNom, false,
                NomWitness{i, prob, report, hb, hw, lb, lw}};
      }
    }
  }
  return {Axiom::kNom};
}

}  // namespace ttclab
