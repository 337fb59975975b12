#include "rsabl/rules.hpp"

#include <algorithm>
#include <map>

namespace rsabl {

namespace {

AttrId descriptor_attr(const DecisionTable& table, const Descriptor& desc) {
    if (desc.attr.empty()) return table.decision_attr();
    return table.attr_id(desc.attr);
}

ObjectSet intersect(const ObjectSet& a, const ObjectSet& b) {
    ObjectSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ObjectSet antecedent_support(const DecisionTable& table, const std::vector<Descriptor>& descs) {
    ObjectSet cur = table.universe();
    for (const Descriptor& d : descs) {
        cur = intersect(cur, support_set(table, d));
        if (cur.empty()) break;
    }
    return cur;
}

}  // namespace

ObjectSet support_set(const DecisionTable& table, const Descriptor& desc) {
    const AttrId a = descriptor_attr(table, desc);
    const std::optional<int> want = table.value_code(a, desc.value);
    ObjectSet out;
    for (int x = 0; x < table.num_objects(); ++x) {
        const int c = table.code(x, a);
        if (c == kMissingCode) continue;
        const bool eq = want && c == *want;
        if (desc.negated ? !eq : eq) out.push_back(x);
    }
    return out;
}

std::pair<Ratio, long long> evaluate_rule(const DecisionTable& table, const Rule& rule) {
    const ObjectSet ant = antecedent_support(table, rule.antecedent);
    if (ant.empty()) return {Ratio(0), 0};
    const ObjectSet both = intersect(ant, support_set(table, rule.consequent));
    return {Ratio(static_cast<long long>(both.size()), static_cast<long long>(ant.size())),
            static_cast<long long>(ant.size())};
}

KnowledgeBase correct_rules(const DecisionTable& table, const KnowledgeBase& kb) {
    KnowledgeBase out;
    out.cer_threshold = kb.cer_threshold;
    out.version = kb.version;
    bool changed = false;
    for (const Rule& rule : kb.rules) {
        const auto [cer, support] = evaluate_rule(table, rule);
        if (to_double(cer) < kb.cer_threshold) {
            changed = true;
            continue;
        }
        Rule kept = rule;
        if (kept.certainty != cer || kept.support_count != support) {
            kept.certainty = cer;
            kept.support_count = support;
            changed = true;
        }
        out.rules.push_back(std::move(kept));
    }
    if (changed) ++out.version;
    return out;
}

Rule reduce_rule(const DecisionTable& table, const Rule& rule) {
    Rule cur = rule;
    {
        const auto [cer, support] = evaluate_rule(table, cur);
        cur.certainty = cer;
        cur.support_count = support;
    }
    const long long floor_support = cur.support_count;

    bool dropped = true;
    while (dropped && cur.antecedent.size() > 1) {
        dropped = false;
        for (std::size_t i = 0; i < cur.antecedent.size(); ++i) {
            Rule trial = cur;
            trial.antecedent.erase(trial.antecedent.begin() + static_cast<std::ptrdiff_t>(i));
            const auto [cer, support] = evaluate_rule(table, trial);
            if (cer >= cur.certainty && support >= floor_support) {
                trial.certainty = cer;
                trial.support_count = support;
                cur = std::move(trial);
                dropped = true;
                break;
            }
        }
    }
    return cur;
}

namespace {

using RuleShape = std::pair<std::vector<Descriptor>, Descriptor>;

RuleShape shape_of(const Rule& rule) { return {rule.antecedent, rule.consequent}; }

void push_dedup(std::vector<Rule>& rules, std::map<RuleShape, std::size_t>& index, Rule rule) {
    auto [it, inserted] = index.try_emplace(shape_of(rule), rules.size());
    if (inserted) {
        rules.push_back(std::move(rule));
    } else if (rule.support_count > rules[it->second].support_count) {
        rules[it->second] = std::move(rule);
    }
}

std::vector<Descriptor> sorted_antecedent(std::vector<Descriptor> descs) {
    std::sort(descs.begin(), descs.end());
    return descs;
}

void emit_rules_for_target(const DecisionTable& table, const std::vector<AttrId>& name_order,
                           const ObjectSet& target, const std::string& label, bool negated,
                           double min_cer, std::vector<Rule>& out,
                           std::map<RuleShape, std::size_t>& index) {
    const ObjectSet reference = lower_approx(table, table.condition_ids(), target);
    if (reference.empty()) return;

    std::vector<AttrId> chosen;
    ObjectSet lower;
    while (lower != reference) {
        AttrId best = -1;
        std::size_t best_size = 0;
        for (AttrId a : name_order) {
            if (std::find(chosen.begin(), chosen.end(), a) != chosen.end()) continue;
            std::vector<AttrId> trial = chosen;
            trial.push_back(a);
            const std::size_t size = lower_approx(table, trial, target).size();
            if (best == -1 || size > best_size) {
                best = a;
                best_size = size;
            }
        }
        chosen.push_back(best);
        lower = lower_approx(table, chosen, target);
    }
    for (AttrId a : name_order) {
        auto it = std::find(chosen.begin(), chosen.end(), a);
        if (it == chosen.end() || chosen.size() == 1) continue;
        std::vector<AttrId> without = chosen;
        without.erase(std::find(without.begin(), without.end(), a));
        if (lower_approx(table, without, target) == reference) chosen.erase(it);
    }

    std::vector<char> in_target(static_cast<std::size_t>(table.num_objects()), 0);
    for (ObjectId x : target) in_target[static_cast<std::size_t>(x)] = 1;

    const Partition part = make_partition(table, chosen);
    for (const auto& block : part.blocks) {
        long long inside = 0;
        for (ObjectId x : block) inside += in_target[static_cast<std::size_t>(x)];
        const Ratio cer(inside, static_cast<long long>(block.size()));
        if (to_double(cer) < min_cer) continue;

        Rule rule;
        bool describable = true;
        for (AttrId a : chosen) {
            if (table.code(block.front(), a) == kMissingCode) {
                describable = false;
                break;
            }
            const std::string& token = table.token(block.front(), a);
            const std::vector<std::string>& dom = table.domain(a);
            if (negated && dom.size() == 2) {
                rule.antecedent.push_back({table.attr_name(a), dom[dom[0] == token], true});
            } else {
                rule.antecedent.push_back({table.attr_name(a), token, false});
            }
        }
        if (!describable) continue;
        rule.antecedent = sorted_antecedent(std::move(rule.antecedent));
        rule.consequent = {"", label, negated};
        rule.certainty = cer;
        rule.support_count = static_cast<long long>(block.size());
        rule.provenance = Provenance::Generated;
        push_dedup(out, index, reduce_rule(table, rule));
    }
}

void generate_positive(const DecisionTable& table, double min_cer, std::vector<Rule>& out,
                       std::map<RuleShape, std::size_t>& index) {
    const std::vector<std::vector<ObjectId>> classes = table.decision_classes();

    std::vector<AttrId> name_order = table.condition_ids();
    std::stable_sort(name_order.begin(), name_order.end(), [&](AttrId lhs, AttrId rhs) {
        return table.attr_name(lhs) < table.attr_name(rhs);
    });

    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const std::string& label = table.domain(table.decision_attr())[ci];
        emit_rules_for_target(table, name_order, classes[ci], label, false, min_cer, out, index);
    }
}

void generate_negative(const DecisionTable& table, double min_cer, std::vector<Rule>& out,
                       std::map<RuleShape, std::size_t>& index) {
    const std::vector<std::vector<ObjectId>> classes = table.decision_classes();
    const ObjectSet all_objects = table.universe();

    std::vector<AttrId> name_order = table.condition_ids();
    std::stable_sort(name_order.begin(), name_order.end(), [&](AttrId lhs, AttrId rhs) {
        return table.attr_name(lhs) < table.attr_name(rhs);
    });

    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        ObjectSet target;
        std::set_difference(all_objects.begin(), all_objects.end(), classes[ci].begin(),
                            classes[ci].end(), std::back_inserter(target));
        if (target.empty()) continue;
        const std::string& label = table.domain(table.decision_attr())[ci];
        emit_rules_for_target(table, name_order, target, label, true, min_cer, out, index);
    }
}

}  // namespace

std::vector<Rule> generate_rules(const DecisionTable& table, bool negative, double min_cer) {
    if (min_cer < 0.0 || min_cer > 1.0) {
        throw ConfigError("min_cer must lie in [0, 1]");
    }
    std::vector<Rule> out;
    std::map<RuleShape, std::size_t> index;
    generate_positive(table, min_cer, out, index);
    if (negative) generate_negative(table, min_cer, out, index);
    return out;
}

KnowledgeBase merge_kb(const KnowledgeBase& kb, const std::vector<Rule>& new_rules) {
    KnowledgeBase out = kb;
    bool changed = false;
    std::map<RuleShape, std::size_t> index;
    for (std::size_t i = 0; i < out.rules.size(); ++i) index.try_emplace(shape_of(out.rules[i]), i);
    for (const Rule& rule : new_rules) {
        auto [it, inserted] = index.try_emplace(shape_of(rule), out.rules.size());
        if (inserted) {
            out.rules.push_back(rule);
            changed = true;
        } else if (rule.support_count > out.rules[it->second].support_count) {
            if (!(out.rules[it->second] == rule)) changed = true;
            out.rules[it->second] = rule;
        }
    }
    if (changed) ++out.version;
    return out;
}

}  // namespace rsabl
