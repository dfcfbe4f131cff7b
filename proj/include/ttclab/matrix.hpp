#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttclab/axioms.hpp"
#include "ttclab/rule.hpp"
#include "ttclab/suites.hpp"

namespace ttclab {

enum class Expectation { kHolds, kFails, kNotStudied };

struct MatrixCell {
  Axiom axiom;
  Expectation expected;
  std::optional<AuditResult> result;  // empty when not studied

  bool matches() const;
};

struct MatrixRow {
  std::string label;  // domain and rule, e.g. "L / ttc"
  std::string rule;
  std::string suite;
  std::vector<MatrixCell> cells;
  double seconds = 0;
};

struct PropertyMatrix {
  int table = 0;
  std::string title;
  std::vector<Axiom> columns;
  std::vector<MatrixRow> rows;

  bool matches() const;
  // One line per cell that disagrees with its expectation.
  std::vector<std::string> mismatches() const;
};

// Expected verdicts of matrices 1..3 without running any audit.
PropertyMatrix expected_matrix(int table);
// Audits every studied cell. Throws InputError for an unknown table.
PropertyMatrix property_matrix(int table);

// Aligned text: a check mark where the axiom holds, "x" where it fails,
// "---" where it is not studied; mismatches are flagged with "!".
std::string render_matrix(const PropertyMatrix& matrix);

}  // namespace ttclab
