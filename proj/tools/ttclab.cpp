// Command-line front end: solve, check, manipulate, matrix, witness, oracle.
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ttclab/attc.hpp"
#include "ttclab/axioms.hpp"
#include "ttclab/errors.hpp"
#include "ttclab/io.hpp"
#include "ttclab/matrix.hpp"
#include "ttclab/rules.hpp"
#include "ttclab/strategies.hpp"
#include "ttclab/suites.hpp"
#include "ttclab/ttc.hpp"

namespace {

using namespace ttclab;
using io::Json;

constexpr int kError = 2;

int solve(const std::string& rule_name, bool trace, const std::string& defer,
          const std::string& path) {
  const auto file = io::read_instance_file(path);
  const Problem& prob = file.problem;
  const Rule& rule = find_rule(rule_name);
  Json out{{"rule", rule.name()}};
  if (!trace && defer.empty()) {
    out["allocation"] = io::allocation_json(rule(prob), prob.instance());
    std::cout << io::dump(out);
    return 0;
  }
  MechanismTrace t;
  if (rule.name() == "ttc" && defer.empty()) {
    if (!rule.accepts(prob)) rule(prob);  // throws the domain error
    t = run_ttc(prob);
  } else if (rule.name() == "attc") {
    t = defer.empty()
            ? run_attc(prob)
            : run_attc_deferred(prob, prob.instance().agent_index(defer));
    out["deferred_agent"] = defer.empty() ? Json(nullptr) : Json(defer);
  } else {
    throw InputError(defer.empty()
                         ? "--trace is available for ttc and attc only"
                         : "--defer is available for attc only");
  }
  out["allocation"] = io::allocation_json(t.outcome, prob.instance());
  out["trace"] = io::trace_json(t, prob.instance());
  std::cout << io::dump(out);
  return 0;
}

Axiom parse_axiom(const std::string& name) {
  if (name == "bal") return Axiom::kBal;
  if (name == "ir") return Axiom::kIr;
  if (name == "welb") return Axiom::kWelb;
  if (name == "pe") return Axiom::kPe;
  if (name == "ige") return Axiom::kIge;
  if (name == "mar") return Axiom::kMar;
  throw InputError("unknown axiom '" + name + "'");
}

int check(const std::string& axiom_name_arg, const std::string& rule_name,
          const std::string& path) {
  const Axiom axiom = parse_axiom(axiom_name_arg);
  const auto file = io::read_instance_file(path);
  const Problem& prob = file.problem;
  AxiomReport report{axiom};
  Json out;
  if (axiom == Axiom::kMar) {
    if (rule_name.empty()) throw InputError("mar needs --rule");
    report = check_marginality(find_rule(rule_name), prob);
  } else {
    Allocation alloc = prob.instance().endowment();
    std::string source = "endowment";
    if (!rule_name.empty()) {
      alloc = find_rule(rule_name)(prob);
      source = "rule " + rule_name;
    } else if (file.allocation) {
      alloc = *file.allocation;
      source = "instance allocation";
    }
    report = check_allocation(axiom, alloc, prob);
    out["allocation"] = io::allocation_json(alloc, prob.instance());
    out["source"] = source;
  }
  const Json r = io::report_json(report, prob.instance());
  out.update(r);
  std::cout << io::dump(out);
  return report.holds ? 0 : 1;
}

StrategyClass parse_class(const std::string& name) {
  if (name == "truncation") return StrategyClass::kTruncation;
  if (name == "drop") return StrategyClass::kDrop;
  if (name == "subset-drop") return StrategyClass::kSubsetDrop;
  if (name == "any") return StrategyClass::kAny;
  throw InputError("unknown strategy class '" + name + "'");
}

int manipulate(const std::string& cls_name, const std::string& rule_name,
               const std::string& path) {
  const StrategyClass cls = parse_class(cls_name);
  const auto file = io::read_instance_file(path);
  const Problem& prob = file.problem;
  const Rule& rule = find_rule(rule_name);
  const AxiomReport report = audit_incentives(rule, prob, cls);
  if (report.holds) {
    std::cout << "none\n";
    return 0;
  }
  Json out = io::witness_json(*report.witness, prob.instance());
  const auto& w = std::get<ManipulationWitness>(*report.witness);
  out["class"] = std::string(strategy_class_name(cls));
  out["rule"] = rule.name();
  out["truthful_outcome"] = io::allocation_json(rule(prob), prob.instance());
  out["manipulated_outcome"] = io::allocation_json(
      rule(prob.with_preference(w.agent, w.misreport)), prob.instance());
  std::cout << io::dump(out);
  return 1;
}

int matrix(int table, bool json) {
  const PropertyMatrix m = property_matrix(table);
  if (json) {
    std::cout << io::dump(io::matrix_json(m));
  } else {
    std::cout << render_matrix(m);
  }
  const auto diff = m.mismatches();
  for (const auto& line : diff) std::cerr << "mismatch: " << line << "\n";
  return diff.empty() ? 0 : 1;
}

int witness(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  const auto file = io::parse_order_file(doc);
  const GapWitness g = ige_pe_gap_witness(file.order, file.objects);
  std::cout << io::dump(io::gap_witness_json(g));
  return 0;
}

int oracle(const std::string& path) {
  const auto file = io::read_instance_file(path);
  std::cout << io::dump(io::oracle_json(file.problem));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Top trading cycles for multi-object exchange"};
  app.require_subcommand(1);

  std::string rule_name, path, defer, axiom, cls, prop6;
  bool trace = false, json = false, enumerate = false;
  int table = 0;

  auto* solve_cmd = app.add_subcommand("solve", "Run a rule on an instance");
  solve_cmd->add_option("--rule", rule_name, "Rule name")->required();
  solve_cmd->add_flag("--trace", trace, "Include the per-step trace");
  solve_cmd->add_option("--defer", defer, "Agent whose cycles ATTC holds back");
  solve_cmd->add_option("instance", path, "Instance JSON")->required();

  auto* check_cmd = app.add_subcommand("check", "Audit one allocation axiom");
  check_cmd->add_option("--axiom", axiom, "bal|ir|welb|pe|ige|mar")->required();
  check_cmd->add_option("--rule", rule_name, "Rule producing the allocation");
  check_cmd->add_option("instance", path, "Instance JSON")->required();

  auto* manip_cmd =
      app.add_subcommand("manipulate", "Search for a profitable misreport");
  manip_cmd->add_option("--class", cls, "truncation|drop|subset-drop|any")
      ->required();
  manip_cmd->add_option("--rule", rule_name, "Rule name")->required();
  manip_cmd->add_option("instance", path, "Instance JSON")->required();

  auto* matrix_cmd =
      app.add_subcommand("matrix", "Recompute a property table by audit");
  matrix_cmd->add_option("--table", table, "1, 2 or 3")->required();
  matrix_cmd->add_flag("--json", json, "Emit JSON");

  auto* witness_cmd =
      app.add_subcommand("witness", "Build an IGE-but-not-PE problem");
  witness_cmd->add_option("--prop6", prop6, "Preference order JSON")
      ->required();

  auto* oracle_cmd =
      app.add_subcommand("oracle", "List every allocation with verdicts");
  oracle_cmd->add_flag("--enumerate", enumerate, "Enumerate allocations")
      ->required();
  oracle_cmd->add_option("instance", path, "Instance JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*solve_cmd) return solve(rule_name, trace, defer, path);
    if (*check_cmd) return check(axiom, rule_name, path);
    if (*manip_cmd) return manipulate(cls, rule_name, path);
    if (*matrix_cmd) return matrix(table, json);
    if (*witness_cmd) return witness(prop6);
    if (*oracle_cmd) return oracle(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
