// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ttclab/attc.hpp"
#include "ttclab/axioms.hpp"
#include "ttclab/fixtures.hpp"
#include "ttclab/io.hpp"
#include "ttclab/matrix.hpp"
#include "ttclab/rules.hpp"
#include "ttclab/strategies.hpp"
#include "ttclab/suites.hpp"
#include "ttclab/ttc.hpp"

namespace ttclab {
namespace {

using io::Json;
using Clock = std::chrono::steady_clock;

// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  }
  bool ok() const { return notes.empty(); }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Allocation alloc(const Instance& inst,
                 const std::vector<std::vector<std::string>>& parts) {
  return inst.allocation_of(parts);
}

std::string show(const Allocation& a, const Instance& inst) {
  return io::allocation_json(a, inst).dump();
}

// Cycles carried out at each step, in the printed form.
Json executed_cycles(const MechanismTrace& t, const Instance& inst) {
  Json out = Json::array();
  for (const auto& step : t.steps) {
    for (const auto& c : step.executed) out.push_back(io::cycle_json(c, inst));
  }
  return out;
}

void criterion_1(Check& c) {
  const Problem p = fixtures::three_agent_profile();
  const Instance& inst = p.instance();
  const auto start = Clock::now();
  const MechanismTrace t = run_ttc(p);
  const double took = seconds_since(start);
  c.expect(t.outcome == alloc(inst, {{"c", "d"}, {"a"}, {"b"}}),
           "outcome " + show(t.outcome, inst));
  const Json cycles = executed_cycles(t, inst);
  c.expect(
      t.steps.size() == 2 &&
          cycles ==
              Json::parse(R"([["c","2","a","1","c"],["d","3","b","1","d"]])"),
      "cycles " + cycles.dump());
  c.expect(took < 1e-3, "took " + std::to_string(took) + " s");
}

void criterion_2(Check& c) {
  const Problem p = fixtures::drop_gain_profile();
  const Instance& inst = p.instance();
  const auto start = Clock::now();
  const Allocation truthful = ttc(p);
  c.expect(truthful == alloc(inst, {{"a", "d"}, {"c"}, {"b"}}),
           "truthful " + show(truthful, inst));
  const Preference dropped = report_with_marginal(
      p.preference(0),
      drop_objects(p.preference(0).marginal(), inst.bundle_of({"d"})));
  const Allocation manipulated = ttc(p.with_preference(0, dropped));
  c.expect(manipulated == alloc(inst, {{"b", "c"}, {"d"}, {"a"}}),
           "after drop " + show(manipulated, inst));
  const AxiomReport r = audit_incentives(ttc_rule(), p, StrategyClass::kDrop);
  const double took = seconds_since(start);
  c.expect(!r.holds, "drop audit found nothing");
  if (!r.holds) {
    const auto& w = std::get<ManipulationWitness>(*r.witness);
    c.expect(w.agent == 0, "witness agent " + std::to_string(w.agent));
    c.expect(w.misreport == dropped, "witness misreport differs");
    c.expect(w.manipulated_bundle == inst.bundle_of({"b", "c"}),
             "witness bundle differs");
  }
  c.expect(took < 1e-2, "took " + std::to_string(took) + " s");
}

void criterion_3(Check& c) {
  const Problem lexical = fixtures::swap_profile(false);
  const Problem resp = fixtures::swap_profile(true);
  const Instance& inst = resp.instance();
  const Allocation w = inst.endowment();
  c.expect(find_improving_cycle(w, resp).holds, "IGE fails at the endowment");
  const AxiomReport pe = check_pareto_efficient(w, resp);
  c.expect(!pe.holds, "PE holds at the endowment");
  if (!pe.holds) {
    const auto& d = std::get<DominatingAllocation>(*pe.witness).allocation;
    c.expect(d == alloc(inst, {{"b", "c"}, {"a", "d"}}),
             "dominating " + show(d, inst));
  }
  c.expect(ttc(lexical) == w, "TTC trades at the lexicographic profile");
  c.expect(ttc(resp) == w, "TTC trades at the responsive profile");
  c.expect(check_marginality(ttc_rule(), resp).holds, "marginality fails");
}

void matrix_criterion(Check& c, int table, double budget) {
  const auto start = Clock::now();
  const PropertyMatrix m = property_matrix(table);
  const double took = seconds_since(start);
  for (const auto& line : m.mismatches()) c.notes.push_back(line);
  c.expect(took < budget, "took " + std::to_string(took) + " s");
}

// All two-agent tree profiles over three objects, then random four-object
// tree profiles.
Suite tree_suite(int random_count) {
  Suite s;
  bool first = true;
  for (const auto& inst : endowment_shapes(2, 3)) {
    s = first ? cl_suite(inst) : s + cl_suite(inst);
    first = false;
  }
  return s + random_cl_suite(endowment_shapes(2, 4), random_count, 2024);
}

constexpr int kRandomTreeProfiles = 10000;

void criterion_6(Check& c) {
  const Suite s = tree_suite(kRandomTreeProfiles);
  const std::vector<Axiom> axioms{Axiom::kBal, Axiom::kWelb, Axiom::kIr,
                                  Axiom::kPe,  Axiom::kIge,  Axiom::kDsp};
  const auto results = audit_rule(attc_rule(), axioms, s);
  for (const auto& r : results) {
    c.expect(r.holds, std::string(axiom_name(r.axiom)) + " fails");
    c.expect(r.checked == s.count(), std::string(axiom_name(r.axiom)) +
                                         " checked " +
                                         std::to_string(r.checked));
  }
  c.expect(s.count() >= 144 * 2 + kRandomTreeProfiles,
           "suite size " + std::to_string(s.count()));
}

// Rules that leave TTC somewhere on `suite` must fail one of `axioms`; TTC
// must fail none. Returns the number of such rules.
int uniqueness_check(Check& c, const std::string& where, const Suite& suite,
                     const std::vector<Axiom>& axioms) {
  for (const auto& r : audit_rule(ttc_rule(), axioms, suite)) {
    c.expect(r.holds,
             where + ": ttc fails " + std::string(axiom_name(r.axiom)));
  }
  int distinct = 0;
  for (const Rule& rule : registered_rules()) {
    if (rule.name() == "ttc") continue;
    bool differs = false;
    suite.for_each([&](const Problem& p) {
      differs = rule.accepts(p) && rule(p) != ttc(p);
      return !differs;
    });
    if (!differs) continue;
    ++distinct;
    bool violates = false;
    for (const auto& r : audit_rule(rule, axioms, suite)) {
      violates = violates || !r.holds;
    }
    c.expect(violates, where + ": " + rule.name() + " satisfies all");
  }
  return distinct;
}

void criterion_7(Check& c) {
  const std::vector<Axiom> axioms{Axiom::kBal, Axiom::kIge, Axiom::kWelb,
                                  Axiom::kTp};
  int distinct =
      uniqueness_check(c, "three-object market",
                       lexicographic_suite(three_object_market()), axioms);
  distinct += uniqueness_check(
      c, "three-agent market",
      lexicographic_suite(fixtures::three_agent_market()), axioms);
  // Rules pinned to other markets are audited on their own market.
  distinct += uniqueness_check(c, "two-pair market",
                               lexicographic_suite(two_pair_market()), axioms);
  c.expect(distinct >= 4,
           "only " + std::to_string(distinct) + " rules differ from ttc");
}

void criterion_8(Check& c) {
  const auto start = Clock::now();
  long long cases = 0;
  for (int n = 2; n <= 3; ++n) {
    for (int m = n; m <= 4; ++m) {
      for (const auto& inst : endowment_shapes(n, m)) {
        lexicographic_suite(inst).for_each([&](const Problem& p) {
          const Allocation truthful = ttc(p);
          for (int i = 0; i < n; ++i) {
            const MarginalPreference& truth = p.preference(i).marginal();
            const auto cuts = gen_truncations(truth, p.endowment_of(i));
            for (std::size_t k = 1; k < cuts.size(); ++k) {
              const Problem q =
                  p.with_preference(i, Preference::lexicographic(cuts[k]));
              ++cases;
              if (!dominates_pointwise(truth, truthful[i], ttc(q)[i])) {
                c.notes.push_back("no dominating bijection at " +
                                  io::instance_json({q, {}}).dump());
                return false;
              }
            }
          }
          return true;
        });
      }
    }
  }
  const double took = seconds_since(start);
  c.expect(cases > 0, "no truncations examined");
  c.expect(took < 300, "took " + std::to_string(took) + " s");
}

void efficiency_equivalence(Check& c, const Suite& suite) {
  suite.for_each([&](const Problem& p) {
    bool same = true;
    for_each_allocation(p.instance(), false, [&](const Allocation& a) {
      same = find_improving_cycle(a, p).holds ==
             check_pareto_efficient(a, p).holds;
      if (!same) {
        c.notes.push_back("IGE and PE disagree on " + show(a, p.instance()) +
                          " at " + io::instance_json({p, {}}).dump());
      }
      return same;
    });
    return same;
  });
}

bool pareto_dominates(const Allocation& a, const Allocation& b,
                      const Problem& p) {
  bool strict = false;
  for (int i = 0; i < p.num_agents(); ++i) {
    const auto cmp = p.preference(i).compare(a[i], b[i]);
    if (cmp < 0) return false;
    strict = strict || cmp > 0;
  }
  return strict;
}

void criterion_9(Check& c) {
  for (const auto& inst : endowment_shapes(2, 3)) {
    efficiency_equivalence(c, lexicographic_suite(inst));
    efficiency_equivalence(c, cl_suite(inst));
  }
  for (const auto& inst : endowment_shapes(3, 3)) {
    efficiency_equivalence(c, lexicographic_suite(inst));
    efficiency_equivalence(c, cl_suite(inst));
  }
  const Bundle a = Bundle::single(0), b = Bundle::single(1),
               d = Bundle::single(2);
  const BundleOrder order(3,
                          {a | b | d, a | d, a | b, b | d, a, b, d, Bundle()});
  const GapWitness g = ige_pe_gap_witness(order, {"a", "b", "c"});
  c.expect(find_improving_cycle(g.mu, g.problem).holds,
           "gap allocation has an improving cycle");
  c.expect(!check_pareto_efficient(g.mu, g.problem).holds,
           "gap allocation is efficient");
  c.expect(pareto_dominates(g.dominating, g.mu, g.problem),
           "reported allocation does not dominate");
}

void criterion_10(Check& c) {
  const Suite s = tree_suite(kRandomTreeProfiles);
  s.for_each([&](const Problem& p) {
    const Allocation a = attc(p);
    for (int i = 0; i < p.num_agents(); ++i) {
      if (run_attc_deferred(p, i).outcome != a) {
        c.notes.push_back("deferred run differs for agent " +
                          p.instance().agent_label(i) + " at " +
                          io::instance_json({p, {}}).dump());
        return false;
      }
    }
    const AxiomReport r =
        audit_incentives(attc_rule(), p, StrategyClass::kDrop);
    if (!r.holds) {
      c.notes.push_back("drop witness at " + io::instance_json({p, {}}).dump());
      return false;
    }
    return true;
  });
}

void criterion_11(Check& c) {
  const Problem p = fixtures::drop_gain_profile();
  c.expect(!audit_incentives(ttc_rule(), p, StrategyClass::kDrop).holds,
           "ttc passes the drop audit");
  c.expect(audit_nom(ttc_rule(), p).holds, "ttc fails NOM");
  c.expect(!audit_nom(fixtures::obvious_manipulation_rule(), p).holds,
           "control rule passes NOM");
}

// Housing-market TTC on agents pointing at agents: one object each.
Allocation housing_ttc(const Problem& p) {
  const int n = p.num_agents();
  std::vector<int> house(n);
  std::vector<int> holder(n);
  for (int i = 0; i < n; ++i) {
    house[i] = p.endowment_of(i).lowest();
    holder[house[i]] = i;
  }
  Allocation out{std::vector<Bundle>(n)};
  std::set<int> left;
  for (int i = 0; i < n; ++i) left.insert(i);
  while (!left.empty()) {
    std::vector<int> next(n, -1);
    for (int i : left) {
      for (int o : p.preference(i).marginal().order()) {
        if (left.count(holder[o])) {
          next[i] = holder[o];
          break;
        }
      }
    }
    // Walk from any agent until a repeat, then peel off that cycle.
    std::vector<int> seen(n, -1);
    int at = *left.begin();
    for (int step = 0; seen[at] < 0; ++step) {
      seen[at] = step;
      at = next[at];
    }
    const int start = at;
    do {
      out[at] = Bundle::single(house[next[at]]);
      at = next[at];
    } while (at != start);
    do {
      left.erase(at);
      at = next[at];
    } while (at != start);
  }
  return out;
}

std::shared_ptr<const Instance> single_endowment_market(int n) {
  return endowment_shapes(n, n).front();
}

void criterion_12(Check& c) {
  Suite all;
  for (int n = 2; n <= 4; ++n) {
    const Suite s = lexicographic_suite(single_endowment_market(n));
    all = n == 2 ? s : all + s;
  }
  all.for_each([&](const Problem& p) {
    const Allocation got = ttc(p);
    if (got != housing_ttc(p)) {
      c.notes.push_back("oracle differs at " +
                        io::instance_json({p, {}}).dump());
      return false;
    }
    return true;
  });
  uniqueness_check(c, "single endowments", all,
                   {Axiom::kPe, Axiom::kIr, Axiom::kTp});
}

}  // namespace
}  // namespace ttclab

int main() {
  using namespace ttclab;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>>
      criteria{
          {"three-agent worked example", criterion_1},
          {"drop manipulation example", criterion_2},
          {"improving cycles versus Pareto dominance", criterion_3},
          {"first property table",
           [](Check& c) { matrix_criterion(c, 1, 30); }},
          {"second property table",
           [](Check& c) { matrix_criterion(c, 2, 60); }},
          {"ATTC audits on tree profiles", criterion_6},
          {"uniqueness on lexicographic profiles", criterion_7},
          {"truncation bijection dominance", criterion_8},
          {"IGE and PE equivalence, gap witness", criterion_9},
          {"deferred ATTC and tree drops", criterion_10},
          {"obvious manipulability", criterion_11},
          {"single-object housing markets", criterion_12},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    const auto start = Clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    const double took = seconds_since(start);
    std::printf("criterion %2zu: %s  %s (%.2f s)\n", k + 1,
                c.ok() ? "PASS" : "FAIL", criteria[k].first.c_str(), took);
    for (const auto& note : c.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
    failed += !c.ok();
  }
  return failed == 0 ? 0 : 1;
}
