#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ttclab/axioms.hpp"
#include "ttclab/problem.hpp"
#include "ttclab/rule.hpp"

namespace ttclab {

// Return false to stop a walk early.
using ProblemVisitor = std::function<bool(const Problem&)>;

// A lazily generated family of problems.
class Suite {
 public:
  // Returns false if the visitor stopped the walk.
  using Generator = std::function<bool(const ProblemVisitor&)>;

  Suite() = default;
  Suite(std::string name, Generator generator);

  const std::string& name() const { return name_; }
  bool for_each(const ProblemVisitor& visit) const;
  long long count() const;

  // Concatenation; the walk visits this suite first.
  Suite operator+(const Suite& other) const;

 private:
  std::string name_;
  std::vector<Generator> parts_;
};

// Agents "1".."n", objects "a".., one instance per ordered composition of the
// objects into consecutive nonempty endowments.
std::vector<std::shared_ptr<const Instance>> endowment_shapes(int num_agents,
                                                              int num_objects);

// Every lexicographic profile.
Suite lexicographic_suite(std::shared_ptr<const Instance> instance);
// Every marginal profile, each paired with responsive comparators drawn from
// lexicographic, concave additive, cardinality-first and random additive.
// With two agents all pairs are used; with more, at most one agent departs
// from the lexicographic comparator.
Suite responsive_suite(std::shared_ptr<const Instance> instance);
// Every LP-tree profile (at most four objects).
Suite cl_suite(std::shared_ptr<const Instance> instance);
// `count` profiles of random LP trees, cycling through the instances.
Suite random_cl_suite(std::vector<std::shared_ptr<const Instance>> instances,
                      int count, std::uint64_t seed);
Suite problem_suite(std::string name, std::vector<Problem> problems);

// Each preference replaced by the lexicographic one with the same marginal.
Problem lexicographic_shadow(const Problem& prob);

// Compares the rule at `prob` and at its lexicographic shadow.
AxiomReport check_marginality(const Rule& rule, const Problem& prob);

struct AuditResult {
  Axiom axiom;
  bool holds = true;
  std::optional<Witness> witness;
  std::optional<Problem> problem;     // profile where the axiom failed
  std::optional<Allocation> outcome;  // rule outcome there
  long long checked = 0;              // problems examined
};

// Audits each axiom over the suite, stopping an axiom at its first failure.
// Problems outside the rule's domain are skipped.
std::vector<AuditResult> audit_rule(const Rule& rule,
                                    const std::vector<Axiom>& axioms,
                                    const Suite& suite);
AuditResult audit_rule(const Rule& rule, Axiom axiom, const Suite& suite);

}  // namespace ttclab
