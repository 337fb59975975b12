#pragma once

#include <map>
#include <string>
#include <vector>

#include "rsabl/ratio.hpp"
#include "rsabl/rules.hpp"
#include "rsabl/table.hpp"

namespace rsabl {

enum class BatchOrigin { Labeled, Pseudo, Revised };

// Rows of condition-attribute tokens paired with decision labels. The
// schema travels with the batch; every row must have one token per
// condition attribute ("*" allowed), labels are never missing.
struct LabeledBatch {
    Schema schema;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> labels;
    BatchOrigin origin = BatchOrigin::Labeled;

    std::size_t size() const { return rows.size(); }
};

// label -> classifier score for one row.
using ScoreMap = std::map<std::string, double>;

// Number of (row, rule) pairs where the row satisfies the rule's antecedent
// but its label contradicts the consequent.
long long violation_count(const LabeledBatch& batch, const KnowledgeBase& kb);

// Fraction of positions where two equal-length label lists agree.
Ratio consistency_score(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Per-row revision of pseudo-labels against the knowledge base: a label
// with zero violations is kept; otherwise it is replaced by the candidate
// minimizing that row's violation count, ties broken by higher classifier
// score, then lexicographically.
LabeledBatch abduce(const LabeledBatch& batch, const KnowledgeBase& kb,
                    const std::vector<ScoreMap>& scores);

// DecisionTable over the batch's rows; labels become the decision column.
DecisionTable batch_table(const LabeledBatch& batch);

}  // namespace rsabl
