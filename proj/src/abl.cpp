#include "rsabl/abl.hpp"

#include <algorithm>

#include "json.hpp"

namespace rsabl {

KnowledgeBase rule_processor(const LabeledBatch& batch, const KnowledgeBase& kb,
                             std::optional<double> min_cer) {
    const DecisionTable table = batch_table(batch);

    KnowledgeBase corrected = correct_rules(table, kb);

    KnowledgeBase reduced;
    reduced.cer_threshold = corrected.cer_threshold;
    reduced.version = corrected.version;
    bool changed = false;
    for (const Rule& rule : corrected.rules) {
        Rule red = reduce_rule(table, rule);
        if (!red.same_shape(rule)) {
            red.provenance = Provenance::Corrected;
            changed = true;
        } else if (!(red == rule)) {
            changed = true;
        }
        bool duplicate = false;
        for (const Rule& kept : reduced.rules) {
            if (kept.same_shape(red)) {
                duplicate = true;
                changed = true;
                break;
            }
        }
        if (!duplicate) reduced.rules.push_back(std::move(red));
    }
    if (changed) ++reduced.version;

    const std::vector<Rule> fresh =
        generate_rules(table, true, min_cer.value_or(kb.cer_threshold));
    return merge_kb(reduced, fresh);
}

double stopping_score(const LabeledBatch& labeled,
                      const std::vector<std::vector<std::string>>& unlabeled,
                      const Learner& learner, const KnowledgeBase& kb) {
    const double labeled_part = learner.accuracy(labeled);
    double unlabeled_part = 1.0;
    if (!unlabeled.empty()) {
        LabeledBatch pseudo;
        pseudo.schema = labeled.schema;
        pseudo.rows = unlabeled;
        pseudo.labels = learner.predict_labels(unlabeled);
        pseudo.origin = BatchOrigin::Pseudo;
        const long long v = violation_count(pseudo, kb);
        const double denom = static_cast<double>(unlabeled.size()) *
                             static_cast<double>(std::max<std::size_t>(1, kb.rules.size()));
        unlabeled_part = 1.0 - static_cast<double>(v) / denom;
    }
    return 0.5 * (labeled_part + unlabeled_part);
}

namespace {

double violation_rate(std::size_t rows, std::size_t rules, long long violations) {
    if (rows == 0) return 0.0;
    return static_cast<double>(violations) /
           (static_cast<double>(rows) * static_cast<double>(std::max<std::size_t>(1, rules)));
}

}  // namespace

AblOutcome run_abl(const LabeledBatch& labeled,
                   const std::vector<std::vector<std::string>>& unlabeled,
                   const KnowledgeBase& kb, const AblConfig& config, Learner& learner,
                   const LabeledBatch* heldout) {
    if (config.epochs < 0) {
        throw ConfigError("epochs must be >= 0");
    }
    if (config.theta < 0.0 || config.theta > 1.0) {
        throw ConfigError("theta must lie in [0, 1]");
    }
    if (config.cer_threshold < 0.0 || config.cer_threshold > 1.0) {
        throw ConfigError("cer_threshold must lie in [0, 1]");
    }
    if (config.min_cer && (*config.min_cer < 0.0 || *config.min_cer > 1.0)) {
        throw ConfigError("min_cer must lie in [0, 1]");
    }
    if (labeled.rows.empty()) {
        throw EmptyBatch("the labeled batch is empty");
    }
    if (heldout && heldout->schema != labeled.schema) {
        throw SchemaError("heldout schema does not match the labeled schema");
    }

    KnowledgeBase current = kb;
    current.cer_threshold = config.cer_threshold;

    learner.fit(labeled);
    current = rule_processor(labeled, current, config.effective_min_cer());

    AblOutcome outcome;
    auto record_epoch = [&](int epoch, double con_revised, long long violations,
                            bool labels_changed) {
        EpochRecord rec;
        rec.epoch = epoch;
        rec.top1 = heldout ? learner.accuracy(*heldout) : learner.accuracy(labeled);
        rec.eq6_con_labeled = learner.accuracy(labeled);
        rec.eq6_con_revised = con_revised;
        rec.eq6_notcon = violation_rate(unlabeled.size(), current.rules.size(), violations);
        rec.rule_count = static_cast<long long>(current.rules.size());
        rec.theta_score = stopping_score(labeled, unlabeled, learner, current);
        rec.violations = violations;
        rec.labels_changed = labels_changed;
        outcome.history.push_back(rec);
        return rec.theta_score;
    };

    long long violations0 = 0;
    if (!unlabeled.empty()) {
        LabeledBatch pseudo;
        pseudo.schema = labeled.schema;
        pseudo.rows = unlabeled;
        pseudo.labels = learner.predict_labels(unlabeled);
        pseudo.origin = BatchOrigin::Pseudo;
        violations0 = violation_count(pseudo, current);
    }
    record_epoch(0, 1.0, violations0, !unlabeled.empty());

    std::vector<std::string> previous_revised;
    bool have_previous = false;
    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        bool labels_changed = false;
        long long violations = 0;
        double con_revised = 1.0;
        LabeledBatch trainset = labeled;

        std::vector<std::string> revised_labels;
        if (!unlabeled.empty()) {
            const std::vector<ScoreMap> scores = learner.predict(unlabeled);
            LabeledBatch pseudo;
            pseudo.schema = labeled.schema;
            pseudo.rows = unlabeled;
            pseudo.origin = BatchOrigin::Pseudo;
            pseudo.labels.reserve(scores.size());
            for (const ScoreMap& row : scores) {
                auto best = row.begin();
                for (auto it = std::next(row.begin()); it != row.end(); ++it) {
                    if (it->second > best->second) best = it;
                }
                pseudo.labels.push_back(best->first);
            }

            const LabeledBatch revised = abduce(pseudo, current, scores);
            revised_labels = revised.labels;
            labels_changed = !have_previous || revised_labels != previous_revised;

            trainset.origin = BatchOrigin::Revised;
            trainset.rows.insert(trainset.rows.end(), unlabeled.begin(), unlabeled.end());
            trainset.labels.insert(trainset.labels.end(), revised_labels.begin(),
                                   revised_labels.end());

            learner.fit(trainset);
            current = rule_processor(trainset, current, config.effective_min_cer());

            violations = violation_count(pseudo, current);
            con_revised = to_double(
                consistency_score(learner.predict_labels(unlabeled), revised_labels));
        } else {
            learner.fit(trainset);
            current = rule_processor(trainset, current, config.effective_min_cer());
        }

        const double score = record_epoch(epoch, con_revised, violations, labels_changed);
        previous_revised = std::move(revised_labels);
        have_previous = true;
        if (score > config.theta) break;
    }

    outcome.kb = current;
    return outcome;
}

std::string metrics_jsonl(const std::vector<EpochRecord>& history) {
    std::string out;
    for (const EpochRecord& rec : history) {
        nlohmann::ordered_json j;
        j["epoch"] = rec.epoch;
        j["top1"] = rec.top1;
        j["eq6_con_labeled"] = rec.eq6_con_labeled;
        j["eq6_con_revised"] = rec.eq6_con_revised;
        j["eq6_notcon"] = rec.eq6_notcon;
        j["rule_count"] = rec.rule_count;
        j["theta_score"] = rec.theta_score;
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace rsabl
