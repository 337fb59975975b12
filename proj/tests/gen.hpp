#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "rsabl/abduction.hpp"
#include "rsabl/rules.hpp"
#include "rsabl/table.hpp"

// Seeded random inputs for the property tests. Sizes stay small so that the
// brute-force oracle and exhaustive searches remain instant.
namespace gen {

inline int pick(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// Up to 12 objects, 5 condition attributes with at most 3 values each,
// at most 3 decision classes, occasional missing cells.
inline rsabl::DecisionTable table(std::mt19937_64& rng) {
    const int n = 1 + pick(rng, 12);
    const int m = 1 + pick(rng, 5);
    const int classes = 1 + pick(rng, 3);
    std::vector<int> widths(static_cast<std::size_t>(m));
    for (int& w : widths) w = 1 + pick(rng, 3);

    rsabl::Schema schema;
    for (int a = 0; a < m; ++a) schema.condition_names.push_back("a" + std::to_string(a));
    schema.decision_name = "d";

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) {
        std::vector<std::string> row;
        for (int a = 0; a < m; ++a) {
            if (pick(rng, 12) == 0) {
                row.push_back(rsabl::kMissingToken);
            } else {
                row.push_back(std::string(1, static_cast<char>('0' + pick(rng, widths[static_cast<std::size_t>(a)]))));
            }
        }
        rows.push_back(std::move(row));
        labels.push_back(std::string(1, static_cast<char>('p' + pick(rng, classes))));
    }
    return rsabl::DecisionTable::from_rows(schema, rows, labels);
}

inline rsabl::ObjectSet object_subset(std::mt19937_64& rng, int n) {
    rsabl::ObjectSet out;
    for (int x = 0; x < n; ++x) {
        if (rng() % 2) out.push_back(x);
    }
    return out;
}

inline std::vector<rsabl::AttrId> attr_subset(std::mt19937_64& rng,
                                              const rsabl::DecisionTable& t) {
    std::vector<rsabl::AttrId> out;
    for (rsabl::AttrId a : t.condition_ids()) {
        if (rng() % 2) out.push_back(a);
    }
    return out;
}

inline rsabl::LabeledBatch batch(std::mt19937_64& rng) {
    const int m = 1 + pick(rng, 4);
    const int n = 1 + pick(rng, 10);
    const int classes = 1 + pick(rng, 3);

    rsabl::LabeledBatch out;
    for (int a = 0; a < m; ++a) out.schema.condition_names.push_back("a" + std::to_string(a));
    out.schema.decision_name = "d";
    out.origin = rsabl::BatchOrigin::Pseudo;
    for (int x = 0; x < n; ++x) {
        std::vector<std::string> row;
        for (int a = 0; a < m; ++a) {
            if (pick(rng, 12) == 0) {
                row.push_back(rsabl::kMissingToken);
            } else {
                row.push_back(std::string(1, static_cast<char>('0' + pick(rng, 3))));
            }
        }
        out.rows.push_back(std::move(row));
        out.labels.push_back(std::string(1, static_cast<char>('p' + pick(rng, classes))));
    }
    return out;
}

inline std::vector<std::string> label_pool() { return {"p", "q", "r"}; }

inline rsabl::KnowledgeBase kb(std::mt19937_64& rng, const rsabl::Schema& schema) {
    const std::vector<std::string> labels = label_pool();
    rsabl::KnowledgeBase out;
    const int count = pick(rng, 6);
    for (int r = 0; r < count; ++r) {
        rsabl::Rule rule;
        const int m = static_cast<int>(schema.condition_names.size());
        const int width = 1 + pick(rng, std::min(2, m));
        std::vector<int> cols;
        while (static_cast<int>(cols.size()) < width) {
            const int c = pick(rng, m);
            if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
        }
        for (int c : cols) {
            rule.antecedent.push_back({schema.condition_names[static_cast<std::size_t>(c)],
                                       std::string(1, static_cast<char>('0' + pick(rng, 3))),
                                       rng() % 2 == 0});
        }
        std::sort(rule.antecedent.begin(), rule.antecedent.end());
        rule.consequent = {"", labels[static_cast<std::size_t>(pick(rng, 3))], rng() % 2 == 0};
        rule.certainty = rsabl::Ratio(1);
        rule.support_count = 1;

        bool duplicate = false;
        for (const rsabl::Rule& kept : out.rules) {
            if (kept.same_shape(rule)) duplicate = true;
        }
        if (!duplicate) out.rules.push_back(std::move(rule));
    }
    return out;
}

inline std::vector<rsabl::ScoreMap> scores(std::mt19937_64& rng, std::size_t rows) {
    std::vector<rsabl::ScoreMap> out(rows);
    for (rsabl::ScoreMap& row : out) {
        double total = 0.0;
        for (const std::string& label : label_pool()) {
            const double s = static_cast<double>(1 + pick(rng, 1000));
            row[label] = s;
            total += s;
        }
        for (auto& [label, s] : row) s /= total;
    }
    return out;
}

}  // namespace gen
