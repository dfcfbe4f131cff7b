#include "ttclab/matrix.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "ttclab/errors.hpp"
#include "ttclab/fixtures.hpp"
#include "ttclab/rules.hpp"

namespace ttclab {

bool MatrixCell::matches() const {
  switch (expected) {
    case Expectation::kNotStudied:
      return !result.has_value();
    case Expectation::kHolds:
      return result && result->holds;
    case Expectation::kFails:
      return result && !result->holds && result->witness.has_value();
  }
  return false;
}

bool PropertyMatrix::matches() const { return mismatches().empty(); }

std::vector<std::string> PropertyMatrix::mismatches() const {
  std::vector<std::string> out;
  for (const auto& row : rows) {
    for (const auto& cell : row.cells) {
      if (cell.matches()) continue;
      std::string want = cell.expected == Expectation::kHolds   ? "holds"
                         : cell.expected == Expectation::kFails ? "fails"
                                                                : "not studied";
      std::string got = !cell.result         ? "not audited"
                        : cell.result->holds ? "holds"
                                             : "fails";
      out.push_back(row.label + " " + std::string(axiom_name(cell.axiom)) +
                    ": expected " + want + ", audit " + got);
    }
  }
  return out;
}

namespace {

struct RowSpec {
  std::string label;
  std::function<Rule()> rule;
  std::function<Suite()> suite;
  // One character per column: 'y' holds, 'n' fails, '-' not studied.
  std::string expected;
};

struct TableSpec {
  std::string title;
  std::vector<Axiom> columns;
  std::vector<RowSpec> rows;
};

Suite lex_generic() {
  return lexicographic_suite(three_object_market()) +
         lexicographic_suite(fixtures::three_agent_market()) +
         lexicographic_suite(two_pair_market());
}

Suite responsive_generic() {
  // Known witnesses first so failing cells stop early.
  return problem_suite(
             "pinned responsive profiles",
             {fixtures::drop_gain_profile(), fixtures::swap_profile(true)}) +
         responsive_suite(three_object_market()) +
         responsive_suite(fixtures::swap_market()) +
         responsive_suite(two_pair_market()) +
         responsive_suite(fixtures::three_agent_market());
}

Suite cl_rows() {
  Suite s;
  for (const auto& inst : endowment_shapes(2, 3)) s = s + cl_suite(inst);
  return s + random_cl_suite(endowment_shapes(2, 4), 500, 7);
}

TableSpec table_spec(int table) {
  using A = Axiom;
  switch (table) {
    case 1:
      return {"Audited rules, lexicographic domain",
              {A::kBal, A::kPe, A::kWelb, A::kTp, A::kDsp, A::kIr, A::kSp},
              {
                  {"ttc", ttc_rule, lex_generic, "yyyyyyn"},
                  {"no_trade", no_trade_rule, lex_generic, "ynyyyyy"},
                  {"balanced_serial_dictatorship", serial_dictatorship_rule,
                   lex_generic, "yynyyny"},
                  {"rule_not_tp", not_tp_rule,
                   [] { return lexicographic_suite(three_object_market()); },
                   "yyynnyn"},
                  {"rule_not_bal", not_bal_rule,
                   [] { return lexicographic_suite(three_object_market()); },
                   "nyyyyyn"},
                  {"rule_not_welb", not_welb_rule,
                   [] { return lexicographic_suite(two_pair_market()); },
                   "yynyyyn"},
              }};
    case 2:
      return {"Audited rules, responsive domain",
              {A::kBal, A::kIge, A::kWelb, A::kTp, A::kDsp, A::kIr, A::kMar},
              {
                  {"ttc", ttc_rule, responsive_generic, "yyyynyy"},
                  {"no_trade", no_trade_rule, responsive_generic, "ynyyyyy"},
                  {"balanced_serial_dictatorship", serial_dictatorship_rule,
                   responsive_generic, "yynyyny"},
                  {"rule_not_tp", not_tp_rule,
                   [] { return responsive_suite(three_object_market()); },
                   "yyynnyy"},
                  {"rule_not_mar", not_mar_rule,
                   [] {
                     return problem_suite("pinned responsive profiles",
                                          {fixtures::not_mar_profile()}) +
                            responsive_suite(five_object_market());
                   },
                   "yyyynyn"},
              }};
    case 3:
      return {"TTC and ATTC across domains",
              {A::kBal, A::kWelb, A::kIr, A::kPe, A::kIge, A::kTp, A::kDsp},
              {
                  {"L / ttc", ttc_rule, lex_generic, "yyyyyyy"},
                  {"R / ttc", ttc_rule, responsive_generic, "yyynyyn"},
                  {"CL / attc", attc_rule, cl_rows, "yyyyy-y"},
              }};
    default:
      throw InputError("unknown table " + std::to_string(table) +
                       "; expected 1, 2 or 3");
  }
}

Expectation expectation_of(char c) {
  return c == 'y'   ? Expectation::kHolds
         : c == 'n' ? Expectation::kFails
                    : Expectation::kNotStudied;
}

PropertyMatrix build(int table, bool run) {
  const TableSpec spec = table_spec(table);
  PropertyMatrix out;
  out.table = table;
  out.title = spec.title;
  out.columns = spec.columns;
  for (const auto& r : spec.rows) {
    MatrixRow row;
    row.label = r.label;
    const Rule rule = r.rule();
    row.rule = rule.name();
    std::vector<Axiom> studied;
    for (std::size_t k = 0; k < spec.columns.size(); ++k) {
      const Expectation e = expectation_of(r.expected[k]);
      row.cells.push_back({spec.columns[k], e, std::nullopt});
      if (e != Expectation::kNotStudied) studied.push_back(spec.columns[k]);
    }
    if (run) {
      const auto start = std::chrono::steady_clock::now();
      const Suite suite = r.suite();
      row.suite = suite.name();
      auto results = audit_rule(rule, studied, suite);
      for (auto& cell : row.cells) {
        for (auto& res : results) {
          if (res.axiom == cell.axiom) cell.result = std::move(res);
        }
      }
      row.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

PropertyMatrix expected_matrix(int table) { return build(table, false); }

PropertyMatrix property_matrix(int table) { return build(table, true); }

std::string render_matrix(const PropertyMatrix& matrix) {
  std::size_t width = 4;
  for (const auto& row : matrix.rows) width = std::max(width, row.label.size());
  std::ostringstream os;
  os << "Matrix " << matrix.table << ": " << matrix.title << "\n";
  os << std::string(width, ' ');
  for (Axiom a : matrix.columns) {
    std::string name(axiom_name(a));
    name.resize(6, ' ');
    os << "  " << name;
  }
  os << "\n";
  for (const auto& row : matrix.rows) {
    std::string label = row.label;
    label.resize(width, ' ');
    os << label;
    for (const auto& cell : row.cells) {
      std::string mark;
      if (cell.expected == Expectation::kNotStudied) {
        mark = "---";
      } else if (!cell.result) {
        mark = cell.expected == Expectation::kHolds ? "✓" : "x";
      } else {
        mark = cell.result->holds ? "✓" : "x";
      }
      if (!cell.matches() &&
          (cell.result || cell.expected == Expectation::kNotStudied)) {
        mark += "!";
      }
      // The check mark is one column wide but three bytes long.
      const std::size_t shown =
          mark.rfind("✓", 0) == 0 ? mark.size() - 2 : mark.size();
      os << "  " << mark << std::string(6 - shown, ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ttclab
