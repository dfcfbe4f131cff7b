#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "ttclab/axioms.hpp"
#include "ttclab/matrix.hpp"
#include "ttclab/problem.hpp"
#include "ttclab/ttc.hpp"

namespace ttclab::io {

using Json = nlohmann::json;

// An instance file: the problem and an optional "allocation" to audit.
struct InstanceFile {
  Problem problem;
  std::optional<Allocation> allocation;
};

// Errors are InputError with a JSON-pointer prefix, e.g.
// "/preferences/1/order/2: unknown object 'z'".
InstanceFile parse_instance(const Json& doc);
InstanceFile parse_instance_text(const std::string& text);
InstanceFile read_instance_file(const std::string& path);

Preference parse_preference(const Json& doc, const Instance& instance,
                            const std::string& pointer = "");
// {"objects": [...], "order": [[bundle], ...]} best first.
struct OrderFile {
  std::vector<std::string> objects;
  BundleOrder order;
};
OrderFile parse_order_file(const Json& doc);

Json bundle_json(Bundle b, const Instance& instance);
Json allocation_json(const Allocation& a, const Instance& instance);
Json preference_json(const Preference& p, const Instance& instance);
Json instance_json(const InstanceFile& file);
Json cycle_json(const TradingCycle& c, const Instance& instance);
Json trace_json(const MechanismTrace& trace, const Instance& instance);
Json witness_json(const Witness& w, const Instance& instance);
Json report_json(const AxiomReport& r, const Instance& instance);
Json matrix_json(const PropertyMatrix& m);
Json gap_witness_json(const GapWitness& g);
// Every allocation of the problem with its BAL/IR/WELB/PE/IGE verdicts.
Json oracle_json(const Problem& prob);

// Keys sorted, two-space indent, trailing newline.
std::string dump(const Json& doc);

}  // namespace ttclab::io
