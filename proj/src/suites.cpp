#include "ttclab/suites.hpp"

#include <algorithm>
#include <numeric>

#include "ttclab/errors.hpp"
#include "ttclab/strategies.hpp"

namespace ttclab {

Suite::Suite(std::string name, Generator generator) : name_(std::move(name)) {
  parts_.push_back(std::move(generator));
}

bool Suite::for_each(const ProblemVisitor& visit) const {
  for (const auto& part : parts_) {
    if (!part(visit)) return false;
  }
  return true;
}

long long Suite::count() const {
  long long n = 0;
  for_each([&](const Problem&) {
    ++n;
    return true;
  });
  return n;
}

Suite Suite::operator+(const Suite& other) const {
  Suite out = *this;
  if (out.name_.empty()) {
    out.name_ = other.name_;
  } else if (!other.name_.empty()) {
    out.name_ += " + " + other.name_;
  }
  out.parts_.insert(out.parts_.end(), other.parts_.begin(), other.parts_.end());
  return out;
}

std::vector<std::shared_ptr<const Instance>> endowment_shapes(int num_agents,
                                                              int num_objects) {
  std::vector<std::string> agents;
  for (int i = 1; i <= num_agents; ++i) agents.push_back(std::to_string(i));
  std::vector<std::string> objects;
  for (int o = 0; o < num_objects; ++o) {
    objects.push_back(std::string(1, static_cast<char>('a' + o)));
  }
  std::vector<std::shared_ptr<const Instance>> out;
  std::vector<int> sizes(num_agents, 1);
  std::function<void(int, int)> fill = [&](int agent, int left) {
    if (agent == num_agents - 1) {
      if (left < 1) return;
      sizes[agent] = left;
      Endowment e;
      int next = 0;
      for (int s : sizes) {
        Bundle b;
        for (int k = 0; k < s; ++k) b = b.with(next++);
        e.parts.push_back(b);
      }
      out.push_back(Instance::create(agents, objects, e));
      return;
    }
    for (int s = 1; s <= left - (num_agents - 1 - agent); ++s) {
      sizes[agent] = s;
      fill(agent + 1, left - s);
    }
  };
  fill(0, num_objects);
  return out;
}

namespace {

std::vector<MarginalPreference> all_rankings(int m) {
  std::vector<MarginalPreference> out;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Visits every tuple of `n` choices from per-position option lists.
bool for_each_profile(const std::shared_ptr<const Instance>& inst,
                      const std::vector<std::vector<Preference>>& options,
                      const ProblemVisitor& visit) {
  const int n = static_cast<int>(options.size());
  std::vector<std::size_t> digit(n, 0);
  std::vector<Preference> prefs;
  for (int i = 0; i < n; ++i) {
    if (options[i].empty()) return true;
    prefs.push_back(options[i][0]);
  }
  while (true) {
    for (int i = 0; i < n; ++i) prefs[i] = options[i][digit[i]];
    if (!visit(Problem(inst, prefs))) return false;
    int i = 0;
    for (; i < n; ++i) {
      if (++digit[i] < options[i].size()) break;
      digit[i] = 0;
    }
    if (i == n) return true;
  }
}

}  // namespace

Suite lexicographic_suite(std::shared_ptr<const Instance> instance) {
  const std::string name = "lexicographic profiles";
  return Suite(name, [instance](const ProblemVisitor& visit) {
    std::vector<Preference> lex;
    for (auto& r : all_rankings(instance->num_objects())) {
      lex.push_back(Preference::lexicographic(std::move(r)));
    }
    std::vector<std::vector<Preference>> options(instance->num_agents(), lex);
    return for_each_profile(instance, options, visit);
  });
}

Suite responsive_suite(std::shared_ptr<const Instance> instance) {
  return Suite("responsive profiles", [instance](const ProblemVisitor& visit) {
    const int n = instance->num_agents();
    const auto rankings = all_rankings(instance->num_objects());
    const std::size_t r = rankings.size();
    // variants[k][v]: comparator v over ranking k; v == 0 is lexicographic.
    std::vector<std::vector<Preference>> variants;
    for (std::size_t k = 0; k < r; ++k) {
      const MarginalPreference& m = rankings[k];
      variants.push_back({
          Preference::lexicographic(m),
          Preference::responsive_unchecked(
              m, ResponsiveComparator::additive(concave_utilities(m))),
          Preference::responsive_unchecked(
              m, ResponsiveComparator::cardinality_first(m)),
          Preference::responsive_unchecked(
              m, ResponsiveComparator::additive(
                     random_additive_utilities(m, 1000 + k))),
      });
    }
    const int kinds = static_cast<int>(variants[0].size());
    // Comparator assignments to try for each marginal profile.
    std::vector<std::vector<int>> assignments;
    if (n == 2) {
      for (int a = 0; a < kinds; ++a) {
        for (int b = 0; b < kinds; ++b) assignments.push_back({a, b});
      }
    } else {
      assignments.push_back(std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) {
        for (int v = 1; v < kinds; ++v) {
          std::vector<int> a(n, 0);
          a[i] = v;
          assignments.push_back(a);
        }
      }
    }
    std::vector<std::size_t> digit(n, 0);
    std::vector<Preference> prefs(n, variants[0][0]);
    while (true) {
      for (const auto& a : assignments) {
        for (int i = 0; i < n; ++i) prefs[i] = variants[digit[i]][a[i]];
        if (!visit(Problem(instance, prefs))) return false;
      }
      int i = 0;
      for (; i < n; ++i) {
        if (++digit[i] < r) break;
        digit[i] = 0;
      }
      if (i == n) return true;
    }
  });
}

Suite cl_suite(std::shared_ptr<const Instance> instance) {
  return Suite("LP-tree profiles", [instance](const ProblemVisitor& visit) {
    std::vector<Preference> trees;
    for (auto& t : all_lp_trees(instance->num_objects())) {
      trees.push_back(Preference::conditionally_lexicographic(std::move(t)));
    }
    std::vector<std::vector<Preference>> options(instance->num_agents(), trees);
    return for_each_profile(instance, options, visit);
  });
}

Suite random_cl_suite(std::vector<std::shared_ptr<const Instance>> instances,
                      int count, std::uint64_t seed) {
  return Suite("random LP-tree profiles",
               [instances, count, seed](const ProblemVisitor& visit) {
                 std::mt19937_64 rng(seed);
                 for (int k = 0; k < count; ++k) {
                   const auto& inst = instances[k % instances.size()];
                   std::vector<Preference> prefs;
                   for (int i = 0; i < inst->num_agents(); ++i) {
                     prefs.push_back(Preference::conditionally_lexicographic(
                         random_lp_tree(inst->num_objects(), rng)));
                   }
                   if (!visit(Problem(inst, std::move(prefs)))) return false;
                 }
                 return true;
               });
}

Suite problem_suite(std::string name, std::vector<Problem> problems) {
  return Suite(std::move(name), [problems](const ProblemVisitor& visit) {
    for (const auto& p : problems) {
      if (!visit(p)) return false;
    }
    return true;
  });
}

Problem lexicographic_shadow(const Problem& prob) {
  std::vector<Preference> prefs;
  for (const auto& p : prob.preferences()) {
    prefs.push_back(Preference::lexicographic(p.marginal()));
  }
  return Problem(prob.instance_ptr(), std::move(prefs));
}

AxiomReport check_marginality(const Rule& rule, const Problem& prob) {
  const Problem shadow = lexicographic_shadow(prob);
  if (shadow == prob) return {Axiom::kMar};
  const Allocation a = rule(prob);
  const Allocation b = rule(shadow);
  if (a == b) return {Axiom::kMar};
  return {Axiom::kMar, false, MarginalityWitness{prob, shadow, a, b}};
}

namespace {

AxiomReport check_one(const Rule& rule, Axiom axiom, const Problem& prob,
                      const Allocation& outcome) {
  switch (axiom) {
    case Axiom::kBal:
    case Axiom::kIr:
    case Axiom::kWelb:
    case Axiom::kPe:
    case Axiom::kIge:
      return check_allocation(axiom, outcome, prob);
    case Axiom::kMar:
      return check_marginality(rule, prob);
    case Axiom::kTp:
      return audit_incentives(rule, prob, StrategyClass::kTruncation);
    case Axiom::kDsp:
      return audit_incentives(rule, prob, StrategyClass::kDrop);
    case Axiom::kSdsp:
      return audit_incentives(rule, prob, StrategyClass::kSubsetDrop);
    case Axiom::kSp:
      return audit_incentives(rule, prob, StrategyClass::kAny);
    case Axiom::kNom:
      return audit_nom(rule, prob);
  }
  return {axiom};
}

}  // namespace

std::vector<AuditResult> audit_rule(const Rule& rule,
                                    const std::vector<Axiom>& axioms,
                                    const Suite& suite) {
  std::vector<AuditResult> results;
  for (Axiom a : axioms) results.push_back({a});
  std::size_t open = results.size();
  suite.for_each([&](const Problem& prob) {
    if (!rule.accepts(prob)) return true;
    const Allocation outcome = rule(prob);
    for (auto& r : results) {
      if (!r.holds) continue;
      ++r.checked;
      AxiomReport report = check_one(rule, r.axiom, prob, outcome);
      if (!report.holds) {
        r.holds = false;
        r.witness = std::move(report.witness);
        r.problem = prob;
        r.outcome = outcome;
        --open;
      }
    }
    return open > 0;
  });
  return results;
}

AuditResult audit_rule(const Rule& rule, Axiom axiom, const Suite& suite) {
  return audit_rule(rule, std::vector<Axiom>{axiom}, suite).front();
}

}  // namespace ttclab
