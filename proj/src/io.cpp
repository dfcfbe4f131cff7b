#include "ttclab/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ttclab/errors.hpp"
#include "ttclab/strategies.hpp"

namespace ttclab::io {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw InputError((pointer.empty() ? std::string("/") : pointer) + ": " +
                   what);
}

std::string child(const std::string& pointer, const std::string& key) {
  // RFC 6901 escaping.
  std::string k;
  for (char c : key) {
    if (c == '~') {
      k += "~0";
    } else if (c == '/') {
      k += "~1";
    } else {
      k += c;
    }
  }
  return pointer + "/" + k;
}

std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

const Json& field(const Json& obj, const std::string& key,
                  const std::string& pointer) {
  if (!obj.is_object()) fail(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(pointer, "missing key '" + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& arr,
                                     const std::string& pointer) {
  if (!arr.is_array()) fail(pointer, "expected a list of labels");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_string()) fail(child(pointer, k), "expected a string");
    out.push_back(arr[k].get<std::string>());
  }
  return out;
}

int object_at(const Json& v, const Instance& inst, const std::string& pointer) {
  if (!v.is_string()) fail(pointer, "expected an object label");
  const auto o = inst.find_object(v.get<std::string>());
  if (!o) fail(pointer, "unknown object '" + v.get<std::string>() + "'");
  return *o;
}

Bundle bundle_at(const Json& arr, const Instance& inst,
                 const std::string& pointer) {
  if (!arr.is_array()) fail(pointer, "expected a list of objects");
  Bundle b;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const int o = object_at(arr[k], inst, child(pointer, k));
    if (b.contains(o)) fail(child(pointer, k), "object listed twice");
    b = b.with(o);
  }
  return b;
}

MarginalPreference marginal_at(const Json& arr, const Instance& inst,
                               const std::string& pointer) {
  if (!arr.is_array()) fail(pointer, "expected a ranking of objects");
  std::vector<int> order;
  Bundle seen;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const int o = object_at(arr[k], inst, child(pointer, k));
    if (seen.contains(o)) {
      fail(child(pointer, k),
           "object '" + inst.object_label(o) + "' ranked twice");
    }
    seen = seen.with(o);
    order.push_back(o);
  }
  if (static_cast<int>(order.size()) != inst.num_objects()) {
    fail(pointer, "ranking must list every object exactly once");
  }
  return MarginalPreference(std::move(order));
}

BundleOrder order_at(const Json& arr, const Instance& inst,
                     const std::string& pointer) {
  if (!arr.is_array()) fail(pointer, "expected a list of bundles");
  std::vector<Bundle> order;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    order.push_back(bundle_at(arr[k], inst, child(pointer, k)));
  }
  try {
    return BundleOrder(inst.num_objects(), std::move(order));
  } catch (const InputError& e) {
    fail(pointer, e.what());
  }
}

void tree_nodes(const Json& doc, const Instance& inst,
                const std::string& pointer, std::vector<LPTree::Node>& nodes) {
  const int at = static_cast<int>(nodes.size());
  nodes.push_back(
      {object_at(field(doc, "object", pointer), inst, child(pointer, "object")),
       -1, -1});
  const bool has_in = doc.contains("in");
  const bool has_out = doc.contains("out");
  if (has_in != has_out) fail(pointer, "vertex needs both 'in' and 'out'");
  if (!has_in) return;
  nodes[at].in_child = static_cast<int>(nodes.size());
  tree_nodes(doc["in"], inst, child(pointer, "in"), nodes);
  nodes[at].out_child = static_cast<int>(nodes.size());
  tree_nodes(doc["out"], inst, child(pointer, "out"), nodes);
}

ResponsiveComparator comparator_at(const Json& doc, const Instance& inst,
                                   const MarginalPreference& marginal,
                                   const std::string& pointer) {
  const Json& scheme_doc = field(doc, "scheme", pointer);
  if (!scheme_doc.is_string()) {
    fail(child(pointer, "scheme"), "expected a string");
  }
  const std::string scheme = scheme_doc.get<std::string>();
  ResponsiveComparator c = ResponsiveComparator::lexicographic(marginal);
  if (scheme == "lexicographic") {
  } else if (scheme == "cardinality_first") {
    c = ResponsiveComparator::cardinality_first(marginal);
  } else if (scheme == "additive") {
    const std::string up = child(pointer, "utilities");
    const Json& u = field(doc, "utilities", pointer);
    if (!u.is_object()) fail(up, "expected a map from object to utility");
    std::vector<double> utilities(inst.num_objects(), 0);
    std::vector<bool> given(inst.num_objects(), false);
    for (auto it = u.begin(); it != u.end(); ++it) {
      const auto o = inst.find_object(it.key());
      if (!o) fail(child(up, it.key()), "unknown object '" + it.key() + "'");
      if (!it.value().is_number())
        fail(child(up, it.key()), "expected a number");
      utilities[*o] = it.value().get<double>();
      given[*o] = true;
    }
    for (int o = 0; o < inst.num_objects(); ++o) {
      if (!given[o]) fail(up, "no utility for '" + inst.object_label(o) + "'");
    }
    try {
      c = ResponsiveComparator::additive(std::move(utilities));
    } catch (const InputError& e) {
      fail(up, e.what());
    }
  } else if (scheme == "table") {
    c = ResponsiveComparator::table(
        order_at(field(doc, "order", pointer), inst, child(pointer, "order")));
  } else {
    fail(child(pointer, "scheme"), "unknown scheme '" + scheme + "'");
  }
  if (doc.contains("overrides")) {
    const std::string op = child(pointer, "overrides");
    const Json& ov = doc["overrides"];
    if (!ov.is_array()) fail(op, "expected a list of bundle pairs");
    std::vector<std::pair<Bundle, Bundle>> pairs;
    for (std::size_t k = 0; k < ov.size(); ++k) {
      const std::string pk = child(op, k);
      if (!ov[k].is_array() || ov[k].size() != 2) {
        fail(pk, "expected [above, below]");
      }
      pairs.emplace_back(bundle_at(ov[k][0], inst, child(pk, 0)),
                         bundle_at(ov[k][1], inst, child(pk, 1)));
    }
    c = c.with_overrides(std::move(pairs));
  }
  return c;
}

std::string agent_key(const Instance& inst, int i) {
  return inst.agent_label(i);
}

Json number_json(double u) {
  if (std::floor(u) == u && std::fabs(u) < 9e15) {
    return static_cast<long long>(u);
  }
  return u;
}

}  // namespace

Preference parse_preference(const Json& doc, const Instance& inst,
                            const std::string& pointer) {
  const Json& kind_doc = field(doc, "kind", pointer);
  if (!kind_doc.is_string()) fail(child(pointer, "kind"), "expected a string");
  const std::string kind = kind_doc.get<std::string>();
  if (kind == "lex") {
    return Preference::lexicographic(marginal_at(
        field(doc, "order", pointer), inst, child(pointer, "order")));
  }
  if (kind == "responsive") {
    const MarginalPreference m = marginal_at(field(doc, "marginal", pointer),
                                             inst, child(pointer, "marginal"));
    const ResponsiveComparator c =
        comparator_at(field(doc, "comparator", pointer), inst, m,
                      child(pointer, "comparator"));
    try {
      return Preference::responsive(m, c);
    } catch (const InputError& e) {
      fail(child(pointer, "comparator"), e.what());
    }
  }
  if (kind == "cl") {
    std::vector<LPTree::Node> nodes;
    const std::string tp = child(pointer, "tree");
    tree_nodes(field(doc, "tree", pointer), inst, tp, nodes);
    try {
      return Preference::conditionally_lexicographic(
          LPTree(inst.num_objects(), std::move(nodes)));
    } catch (const InputError& e) {
      fail(tp, e.what());
    }
  }
  if (kind == "order") {
    return Preference::explicit_order(
        order_at(field(doc, "order", pointer), inst, child(pointer, "order")));
  }
  fail(child(pointer, "kind"), "unknown preference kind '" + kind + "'");
}

InstanceFile parse_instance(const Json& doc) {
  if (!doc.is_object()) fail("", "expected an object");
  const auto agents = string_list(field(doc, "agents", ""), "/agents");
  const auto objects = string_list(field(doc, "objects", ""), "/objects");
  const Json& endow = field(doc, "endowment", "");
  if (!endow.is_object()) fail("/endowment", "expected a map agent -> objects");
  std::vector<std::vector<std::string>> parts;
  for (const auto& a : agents) {
    const std::string p = child("/endowment", a);
    auto it = endow.find(a);
    if (it == endow.end())
      fail("/endowment", "no endowment for agent '" + a + "'");
    parts.push_back(string_list(*it, p));
  }
  for (auto it = endow.begin(); it != endow.end(); ++it) {
    if (std::find(agents.begin(), agents.end(), it.key()) == agents.end()) {
      fail(child("/endowment", it.key()), "unknown agent '" + it.key() + "'");
    }
  }
  std::shared_ptr<const Instance> inst;
  try {
    inst = Instance::create(agents, objects, parts);
  } catch (const InputError& e) {
    fail("", e.what());
  }
  const Json& prefs = field(doc, "preferences", "");
  if (!prefs.is_object())
    fail("/preferences", "expected a map agent -> preference");
  std::vector<Preference> profile;
  for (const auto& a : agents) {
    auto it = prefs.find(a);
    if (it == prefs.end())
      fail("/preferences", "no preference for agent '" + a + "'");
    profile.push_back(parse_preference(*it, *inst, child("/preferences", a)));
  }
  for (auto it = prefs.begin(); it != prefs.end(); ++it) {
    if (std::find(agents.begin(), agents.end(), it.key()) == agents.end()) {
      fail(child("/preferences", it.key()), "unknown agent '" + it.key() + "'");
    }
  }
  InstanceFile out{Problem(inst, std::move(profile)), std::nullopt};
  if (doc.contains("allocation")) {
    const Json& al = doc["allocation"];
    if (!al.is_object()) fail("/allocation", "expected a map agent -> objects");
    Allocation a;
    for (const auto& ag : agents) {
      auto it = al.find(ag);
      if (it == al.end())
        fail("/allocation", "no bundle for agent '" + ag + "'");
      a.parts.push_back(bundle_at(*it, *inst, child("/allocation", ag)));
    }
    const auto violations = validate_allocation(a, *inst);
    if (!violations.empty()) {
      fail("/allocation", describe(violations.front(), *inst));
    }
    out.allocation = a;
  }
  return out;
}

InstanceFile parse_instance_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(doc);
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

InstanceFile read_instance_file(const std::string& path) {
  return parse_instance_text(read_file(path));
}

OrderFile parse_order_file(const Json& doc) {
  const auto objects = string_list(field(doc, "objects", ""), "/objects");
  if (objects.size() < 2) fail("/objects", "need at least two objects");
  std::vector<std::string> agents{"1", "2"};
  // A throwaway market only to resolve labels.
  std::vector<std::vector<std::string>> parts{{objects[0]}, {}};
  for (std::size_t k = 1; k < objects.size(); ++k)
    parts[1].push_back(objects[k]);
  std::shared_ptr<const Instance> inst;
  try {
    inst = Instance::create(agents, objects, parts);
  } catch (const InputError& e) {
    fail("/objects", e.what());
  }
  return {objects, order_at(field(doc, "order", ""), *inst, "/order")};
}

Json bundle_json(Bundle b, const Instance& inst) { return inst.labels_of(b); }

Json allocation_json(const Allocation& a, const Instance& inst) {
  Json out = Json::object();
  for (int i = 0; i < a.num_agents(); ++i) {
    out[agent_key(inst, i)] = bundle_json(a[i], inst);
  }
  return out;
}

namespace {

Json tree_json(const LPTree& t, int v, const Instance& inst) {
  const auto& n = t.node(v);
  Json out{{"object", inst.object_label(n.object)}};
  if (!n.leaf()) {
    out["in"] = tree_json(t, n.in_child, inst);
    out["out"] = tree_json(t, n.out_child, inst);
  }
  return out;
}

Json ranking_json(const MarginalPreference& m, const Instance& inst) {
  Json out = Json::array();
  for (int o : m.order()) out.push_back(inst.object_label(o));
  return out;
}

Json order_json(const BundleOrder& order, const Instance& inst) {
  Json out = Json::array();
  for (Bundle b : order.order()) out.push_back(bundle_json(b, inst));
  return out;
}

}  // namespace

Json preference_json(const Preference& p, const Instance& inst) {
  switch (p.kind()) {
    case PreferenceKind::kLexicographic:
      return {{"kind", "lex"}, {"order", ranking_json(p.marginal(), inst)}};
    case PreferenceKind::kResponsive: {
      const ResponsiveComparator& c = p.comparator();
      Json comp;
      using S = ResponsiveComparator::Scheme;
      switch (c.scheme()) {
        case S::kLexicographic:
          comp["scheme"] = "lexicographic";
          break;
        case S::kCardinalityFirst:
          comp["scheme"] = "cardinality_first";
          break;
        case S::kAdditive: {
          comp["scheme"] = "additive";
          Json u = Json::object();
          for (int o = 0; o < inst.num_objects(); ++o) {
            u[inst.object_label(o)] = number_json(c.utilities()[o]);
          }
          comp["utilities"] = u;
          break;
        }
        case S::kTable:
          comp["scheme"] = "table";
          comp["order"] = order_json(c.table_order(), inst);
          break;
      }
      if (!c.overrides().empty()) {
        Json ov = Json::array();
        for (const auto& [a, b] : c.overrides()) {
          ov.push_back(
              Json::array({bundle_json(a, inst), bundle_json(b, inst)}));
        }
        comp["overrides"] = ov;
      }
      return {{"kind", "responsive"},
              {"marginal", ranking_json(p.marginal(), inst)},
              {"comparator", comp}};
    }
    case PreferenceKind::kConditionallyLexicographic:
      return {{"kind", "cl"}, {"tree", tree_json(p.tree(), 0, inst)}};
    case PreferenceKind::kExplicit:
      return {{"kind", "order"}, {"order", order_json(p.table(), inst)}};
  }
  return nullptr;
}

namespace {

Json problem_fields(const Problem& prob) {
  const Instance& inst = prob.instance();
  Json out;
  out["agents"] = inst.agents();
  out["objects"] = inst.objects();
  out["endowment"] = allocation_json(inst.endowment(), inst);
  Json prefs = Json::object();
  for (int i = 0; i < prob.num_agents(); ++i) {
    prefs[agent_key(inst, i)] = preference_json(prob.preference(i), inst);
  }
  out["preferences"] = prefs;
  return out;
}

}  // namespace

Json instance_json(const InstanceFile& file) {
  Json out = problem_fields(file.problem);
  if (file.allocation) {
    out["allocation"] =
        allocation_json(*file.allocation, file.problem.instance());
  }
  return out;
}

Json cycle_json(const TradingCycle& c, const Instance& inst) {
  Json out = Json::array();
  for (int l = 0; l < c.length(); ++l) {
    out.push_back(inst.object_label(c.objects[l]));
    out.push_back(inst.agent_label(c.agents[l]));
  }
  if (c.length() > 0) out.push_back(inst.object_label(c.objects[0]));
  return out;
}

Json trace_json(const MechanismTrace& trace, const Instance& inst) {
  Json steps = Json::array();
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& s = trace.steps[k];
    Json points = Json::object();
    for (std::size_t i = 0; i < s.agent_targets.size(); ++i) {
      points[agent_key(inst, static_cast<int>(i))] =
          inst.object_label(s.agent_targets[i]);
    }
    Json arising = Json::array();
    for (const auto& c : s.arising) arising.push_back(cycle_json(c, inst));
    Json executed = Json::array();
    for (const auto& c : s.executed) executed.push_back(cycle_json(c, inst));
    steps.push_back({{"step", k + 1},
                     {"remaining", bundle_json(s.remaining, inst)},
                     {"pointing", points},
                     {"cycles", arising},
                     {"executed", executed},
                     {"assigned", allocation_json(s.partial, inst)}});
  }
  return steps;
}

Json witness_json(const Witness& w, const Instance& inst) {
  return std::visit(
      [&](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AgentWitness>) {
          Json out{{"type", "agent"}, {"agent", inst.agent_label(v.agent)}};
          if (v.object >= 0) out["object"] = inst.object_label(v.object);
          return out;
        } else if constexpr (std::is_same_v<T, DominatingAllocation>) {
          return {{"type", "dominating_allocation"},
                  {"allocation", allocation_json(v.allocation, inst)}};
        } else if constexpr (std::is_same_v<T, ImprovingCycle>) {
          return {{"type", "improving_cycle"},
                  {"cycle", cycle_json(v.cycle, inst)}};
        } else if constexpr (std::is_same_v<T, ManipulationWitness>) {
          return {
              {"type", "manipulation"},
              {"agent", inst.agent_label(v.agent)},
              {"truthful_preference",
               preference_json(v.truthful.preference(v.agent), inst)},
              {"misreport", preference_json(v.misreport, inst)},
              {"truthful_bundle", bundle_json(v.truthful_bundle, inst)},
              {"manipulated_bundle", bundle_json(v.manipulated_bundle, inst)},
              {"verdict", "manipulated bundle strictly preferred"}};
        } else if constexpr (std::is_same_v<T, MarginalityWitness>) {
          return {{"type", "marginality"},
                  {"first", problem_fields(v.first)},
                  {"second", problem_fields(v.second)},
                  {"first_outcome", allocation_json(v.first_outcome, inst)},
                  {"second_outcome", allocation_json(v.second_outcome, inst)}};
        } else {
          return {{"type", "obvious_manipulation"},
                  {"agent", inst.agent_label(v.agent)},
                  {"misreport", preference_json(v.misreport, inst)},
                  {"truthful_best", bundle_json(v.truthful_best, inst)},
                  {"truthful_worst", bundle_json(v.truthful_worst, inst)},
                  {"misreport_best", bundle_json(v.misreport_best, inst)},
                  {"misreport_worst", bundle_json(v.misreport_worst, inst)}};
        }
      },
      w);
}

Json report_json(const AxiomReport& r, const Instance& inst) {
  Json out{{"axiom", std::string(axiom_name(r.axiom))}, {"holds", r.holds}};
  out["witness"] = r.witness ? witness_json(*r.witness, inst) : Json(nullptr);
  return out;
}

Json matrix_json(const PropertyMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows) {
    Json cells = Json::object();
    for (const auto& c : row.cells) {
      Json cell;
      cell["expected"] = c.expected == Expectation::kHolds   ? "holds"
                         : c.expected == Expectation::kFails ? "fails"
                                                             : "not studied";
      if (c.result) {
        cell["holds"] = c.result->holds;
        cell["checked"] = c.result->checked;
        if (c.result->witness && c.result->problem) {
          const Instance& inst = c.result->problem->instance();
          cell["witness"] = witness_json(*c.result->witness, inst);
          cell["problem"] = problem_fields(*c.result->problem);
          cell["outcome"] = allocation_json(*c.result->outcome, inst);
        }
      }
      cell["matches"] = c.matches();
      cells[std::string(axiom_name(c.axiom))] = cell;
    }
    rows.push_back({{"label", row.label},
                    {"rule", row.rule},
                    {"suite", row.suite},
                    {"cells", cells}});
  }
  Json cols = Json::array();
  for (Axiom a : m.columns) cols.push_back(std::string(axiom_name(a)));
  return {{"table", m.table},
          {"title", m.title},
          {"columns", cols},
          {"rows", rows},
          {"matches", m.matches()}};
}

Json gap_witness_json(const GapWitness& g) {
  const Instance& inst = g.problem.instance();
  return {{"x", bundle_json(g.x, inst)},
          {"y", bundle_json(g.y, inst)},
          {"x_star", inst.object_label(g.x_star)},
          {"problem", problem_fields(g.problem)},
          {"allocation", allocation_json(g.mu, inst)},
          {"dominating", allocation_json(g.dominating, inst)},
          {"ige", find_improving_cycle(g.mu, g.problem).holds},
          {"pe", check_pareto_efficient(g.mu, g.problem).holds}};
}

Json oracle_json(const Problem& prob) {
  const Instance& inst = prob.instance();
  Json rows = Json::array();
  for_each_allocation(inst, false, [&](const Allocation& a) {
    Json flags;
    for (Axiom ax :
         {Axiom::kBal, Axiom::kIr, Axiom::kWelb, Axiom::kPe, Axiom::kIge}) {
      flags[std::string(axiom_name(ax))] = check_allocation(ax, a, prob).holds;
    }
    rows.push_back(
        {{"allocation", allocation_json(a, inst)}, {"flags", flags}});
    return true;
  });
  return {{"count", rows.size()}, {"allocations", rows}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace ttclab::io
