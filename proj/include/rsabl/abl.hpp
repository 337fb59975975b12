#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsabl/abduction.hpp"
#include "rsabl/learner.hpp"
#include "rsabl/rules.hpp"

namespace rsabl {

struct AblConfig {
    int epochs = 15;   // E; 0 runs the setup phase only
    double theta = 0.95;
    std::uint64_t seed = 0;
    double cer_threshold = 0.8;
    // Emission threshold for generated rules; defaults to cer_threshold.
    std::optional<double> min_cer;

    double effective_min_cer() const { return min_cer.value_or(cer_threshold); }
};

struct EpochRecord {
    int epoch = 0;
    double top1 = 0.0;
    double eq6_con_labeled = 0.0;
    double eq6_con_revised = 0.0;
    double eq6_notcon = 0.0;
    long long rule_count = 0;
    double theta_score = 0.0;
    // Not serialized: raw violation total and whether the revised labels
    // changed relative to the previous epoch.
    long long violations = 0;
    bool labels_changed = false;
};

struct AblOutcome {
    KnowledgeBase kb;
    std::vector<EpochRecord> history;
};

// One pass of the rule processor: build a table from the batch, then
// correction, per-rule reduction, generation of positive and negative
// rules, and a merge, in that order.
KnowledgeBase rule_processor(const LabeledBatch& batch, const KnowledgeBase& kb,
                             std::optional<double> min_cer = std::nullopt);

// Mean of labeled-prediction consistency and one minus the normalized
// violation rate of unlabeled predictions against the knowledge base
// (violations / (rows * max(1, rules))).
double stopping_score(const LabeledBatch& labeled,
                      const std::vector<std::vector<std::string>>& unlabeled,
                      const Learner& learner, const KnowledgeBase& kb);

// The training loop: fit on labeled data, process the knowledge base, then
// per epoch pseudo-label the unlabeled rows, revise them against the
// knowledge base, refit on labeled + revised and reprocess, stopping early
// once the stopping score exceeds theta. The learner is left holding the
// final model. heldout, when given, is only used for the top1 metric.
AblOutcome run_abl(const LabeledBatch& labeled,
                   const std::vector<std::vector<std::string>>& unlabeled,
                   const KnowledgeBase& kb, const AblConfig& config, Learner& learner,
                   const LabeledBatch* heldout = nullptr);

// Metrics history as JSON lines, one epoch record per line.
std::string metrics_jsonl(const std::vector<EpochRecord>& history);

}  // namespace rsabl
