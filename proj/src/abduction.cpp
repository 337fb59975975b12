#include "rsabl/abduction.hpp"

#include <algorithm>

namespace rsabl {

namespace {

struct BoundDescriptor {
    std::size_t column = 0;
    std::string value;
    bool negated = false;
};

struct BoundRule {
    std::vector<BoundDescriptor> antecedent;
    std::string value;   // decision literal value
    bool negated = false;
};

std::size_t column_of(const Schema& schema, const std::string& attr) {
    for (std::size_t i = 0; i < schema.condition_names.size(); ++i) {
        if (schema.condition_names[i] == attr) return i;
    }
    throw SchemaError("rule references unknown attribute '" + attr + "'");
}

std::vector<BoundRule> bind_rules(const Schema& schema, const KnowledgeBase& kb) {
    std::vector<BoundRule> bound;
    bound.reserve(kb.rules.size());
    for (const Rule& rule : kb.rules) {
        BoundRule b;
        for (const Descriptor& desc : rule.antecedent) {
            b.antecedent.push_back({column_of(schema, desc.attr), desc.value, desc.negated});
        }
        if (!rule.consequent.attr.empty() && rule.consequent.attr != schema.decision_name) {
            throw SchemaError("rule consequent names '" + rule.consequent.attr +
                              "', expected decision attribute '" + schema.decision_name + "'");
        }
        b.value = rule.consequent.value;
        b.negated = rule.consequent.negated;
        bound.push_back(std::move(b));
    }
    return bound;
}

bool fires(const BoundRule& rule, const std::vector<std::string>& row) {
    for (const BoundDescriptor& desc : rule.antecedent) {
        const std::string& token = row[desc.column];
        if (token == kMissingToken) return false;
        if (desc.negated ? token == desc.value : token != desc.value) return false;
    }
    return true;
}

bool contradicts(const BoundRule& rule, const std::string& label) {
    return rule.negated ? label == rule.value : label != rule.value;
}

void check_batch(const LabeledBatch& batch) {
    if (batch.rows.size() != batch.labels.size()) {
        throw LengthMismatch("batch has " + std::to_string(batch.rows.size()) + " rows but " +
                             std::to_string(batch.labels.size()) + " labels");
    }
    const std::size_t width = batch.schema.condition_names.size();
    for (const auto& row : batch.rows) {
        if (row.size() != width) {
            throw SchemaError("batch row width " + std::to_string(row.size()) +
                              " does not match schema width " + std::to_string(width));
        }
    }
}

}  // namespace

long long violation_count(const LabeledBatch& batch, const KnowledgeBase& kb) {
    check_batch(batch);
    const std::vector<BoundRule> bound = bind_rules(batch.schema, kb);
    long long count = 0;
    for (std::size_t i = 0; i < batch.rows.size(); ++i) {
        for (const BoundRule& rule : bound) {
            if (fires(rule, batch.rows[i]) && contradicts(rule, batch.labels[i])) ++count;
        }
    }
    return count;
}

Ratio consistency_score(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("label lists differ in length: " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
    }
    if (a.empty()) {
        throw EmptyBatch("consistency of empty label lists");
    }
    long long agree = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) ++agree;
    }
    return Ratio(agree, static_cast<long long>(a.size()));
}

LabeledBatch abduce(const LabeledBatch& batch, const KnowledgeBase& kb,
                    const std::vector<ScoreMap>& scores) {
    check_batch(batch);
    if (scores.size() != batch.rows.size()) {
        throw LengthMismatch("score list length " + std::to_string(scores.size()) +
                             " does not match batch size " + std::to_string(batch.rows.size()));
    }
    const std::vector<BoundRule> bound = bind_rules(batch.schema, kb);

    LabeledBatch out = batch;
    out.origin = BatchOrigin::Revised;
    std::vector<const BoundRule*> fired;
    for (std::size_t i = 0; i < batch.rows.size(); ++i) {
        fired.clear();
        for (const BoundRule& rule : bound) {
            if (fires(rule, batch.rows[i])) fired.push_back(&rule);
        }
        auto violations = [&](const std::string& label) {
            long long v = 0;
            for (const BoundRule* rule : fired) {
                if (contradicts(*rule, label)) ++v;
            }
            return v;
        };

        const std::string& current = batch.labels[i];
        if (violations(current) == 0) continue;

        ScoreMap candidates = scores[i];
        candidates.emplace(current, 0.0);
        std::string best;
        long long best_v = 0;
        double best_score = 0.0;
        bool have = false;
        for (const auto& [label, score] : candidates) {
            const long long v = violations(label);
            if (!have || v < best_v || (v == best_v && score > best_score)) {
                have = true;
                best = label;
                best_v = v;
                best_score = score;
            }
        }
        out.labels[i] = best;
    }
    return out;
}

DecisionTable batch_table(const LabeledBatch& batch) {
    if (batch.rows.empty()) {
        throw EmptyBatch("cannot build a table from an empty batch");
    }
    return DecisionTable::from_rows(batch.schema, batch.rows, batch.labels);
}

}  // namespace rsabl
