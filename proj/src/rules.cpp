#include "ttclab/rules.hpp"

#include <algorithm>
#include <string>

#include "ttclab/attc.hpp"
#include "ttclab/errors.hpp"
#include "ttclab/ttc.hpp"

namespace ttclab {

Rule::Rule(std::string name, std::vector<Domain> domains, Function fn,
           std::shared_ptr<const Instance> pinned)
    : name_(std::move(name)),
      domains_(std::move(domains)),
      fn_(std::move(fn)),
      pinned_(std::move(pinned)) {}

bool Rule::accepts(const Problem& prob) const {
  if (pinned_ && !pinned_->same_market(prob.instance())) return false;
  return std::all_of(prob.preferences().begin(), prob.preferences().end(),
                     [&](const Preference& p) {
                       return std::any_of(
                           domains_.begin(), domains_.end(),
                           [&](Domain d) { return in_domain(p, d); });
                     });
}

Allocation Rule::operator()(const Problem& prob) const {
  if (pinned_ && !pinned_->same_market(prob.instance())) {
    throw DomainError("rule " + name_ + " is only defined on its own market");
  }
  if (!accepts(prob)) {
    throw DomainError("rule " + name_ +
                      " is not defined on this preference domain");
  }
  return fn_(prob);
}

MarginalPreference ranking(const Instance& instance,
                           const std::vector<std::string>& labels) {
  std::vector<int> order;
  for (const auto& l : labels) order.push_back(instance.object_index(l));
  return MarginalPreference(std::move(order));
}

std::shared_ptr<const Instance> three_object_market() {
  static const auto inst = Instance::create(
      {"1", "2"}, {"a", "b", "c"},
      std::vector<std::vector<std::string>>{{"a", "b"}, {"c"}});
  return inst;
}

std::shared_ptr<const Instance> two_pair_market() {
  static const auto inst = Instance::create(
      {"1", "2"}, {"a", "b", "c", "d"},
      std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d"}});
  return inst;
}

std::shared_ptr<const Instance> five_object_market() {
  static const auto inst = Instance::create(
      {"1", "2"}, {"a", "b", "c", "d", "e"},
      std::vector<std::vector<std::string>>{{"a", "b", "d"}, {"c", "e"}});
  return inst;
}

namespace {

const std::vector<Domain> kMarginalDomains{Domain::kResponsive,
                                           Domain::kConditionallyLexicographic};

bool marginals_are(const Problem& prob,
                   const std::vector<std::vector<std::string>>& rankings) {
  for (int i = 0; i < prob.num_agents(); ++i) {
    if (!(prob.preference(i).marginal() ==
          ranking(prob.instance(), rankings[i]))) {
      return false;
    }
  }
  return true;
}

bool lexicographic_profile_is(
    const Problem& prob,
    const std::vector<std::vector<std::string>>& rankings) {
  for (int i = 0; i < prob.num_agents(); ++i) {
    if (prob.preference(i).kind() != PreferenceKind::kLexicographic) {
      return false;
    }
  }
  return marginals_are(prob, rankings);
}

}  // namespace

Rule ttc_rule() {
  return Rule("ttc", kMarginalDomains, [](const Problem& p) { return ttc(p); });
}

Rule attc_rule() {
  return Rule("attc", {Domain::kConditionallyLexicographic},
              [](const Problem& p) { return attc(p); });
}

Rule no_trade_rule() {
  return Rule("no_trade", kMarginalDomains,
              [](const Problem& p) { return p.instance().endowment(); });
}

Rule serial_dictatorship_rule() {
  return Rule("balanced_serial_dictatorship", {Domain::kResponsive},
              [](const Problem& p) {
                Allocation a;
                Bundle left = p.instance().all_objects();
                for (int i = 0; i < p.num_agents(); ++i) {
                  const Bundle got = p.preference(i).marginal().top_of(
                      left, p.endowment_of(i).size());
                  a.parts.push_back(got);
                  left -= got;
                }
                return a;
              });
}

Rule not_tp_rule() {
  return Rule(
      "rule_not_tp", {Domain::kResponsive},
      [](const Problem& p) {
        if (marginals_are(p, {{"c", "a", "b"}, {"a", "b", "c"}})) {
          return p.instance().allocation_of({{"a", "c"}, {"b"}});
        }
        return ttc(p);
      },
      three_object_market());
}

Rule not_bal_rule() {
  return Rule(
      "rule_not_bal", {Domain::kLexicographic},
      [](const Problem& p) {
        if (lexicographic_profile_is(p, {{"c", "a", "b"}, {"a", "b", "c"}})) {
          return p.instance().allocation_of({{"c"}, {"a", "b"}});
        }
        return ttc(p);
      },
      three_object_market());
}

Rule not_welb_rule() {
  return Rule(
      "rule_not_welb", {Domain::kLexicographic},
      [](const Problem& p) {
        if (lexicographic_profile_is(
                p, {{"c", "a", "b", "d"}, {"a", "b", "c", "d"}})) {
          return p.instance().allocation_of({{"c", "d"}, {"a", "b"}});
        }
        return ttc(p);
      },
      two_pair_market());
}

Rule not_mar_rule() {
  return Rule(
      "rule_not_mar", {Domain::kResponsive},
      [](const Problem& p) {
        const Allocation fallback = ttc(p);
        if (!marginals_are(
                p, {{"a", "e", "b", "c", "d"}, {"a", "c", "b", "d", "e"}})) {
          return fallback;
        }
        const Allocation target =
            p.instance().allocation_of({{"b", "c", "e"}, {"a", "d"}});
        bool strict = false;
        for (int i = 0; i < p.num_agents(); ++i) {
          const auto c = p.preference(i).compare(target[i], fallback[i]);
          if (c < 0) return fallback;
          if (c > 0) strict = true;
        }
        return strict ? target : fallback;
      },
      five_object_market());
}

const std::vector<Rule>& registered_rules() {
  static const std::vector<Rule> rules{
      ttc_rule(),      attc_rule(),
      no_trade_rule(), serial_dictatorship_rule(),
      not_tp_rule(),   not_bal_rule(),
      not_welb_rule(), not_mar_rule(),
  };
  return rules;
}

const Rule& find_rule(std::string_view name) {
  for (const auto& r : registered_rules()) {
    if (r.name() == name) return r;
  }
  throw InputError("unknown rule '" + std::string(name) + "'");
}

}  // namespace ttclab
