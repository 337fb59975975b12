#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rsabl/abduction.hpp"

namespace rsabl {

// Classifier plugged into the training loop. fit replaces any previous
// state; predict returns one normalized label->score map per row and must
// be defined for every schema-conformant row. Implementations are
// deterministic given their seed.
class Learner {
public:
    virtual ~Learner() = default;
    virtual void fit(const LabeledBatch& batch) = 0;
    virtual std::vector<ScoreMap> predict(
        const std::vector<std::vector<std::string>>& rows) const = 0;

    std::vector<std::string> predict_labels(
        const std::vector<std::vector<std::string>>& rows) const;
    double accuracy(const LabeledBatch& batch) const;
};

// Per-class attribute-value frequency model with add-one smoothing. A row
// scores, for each label, the product of its per-attribute smoothed value
// frequencies; scores are normalized per row. "*" counts as an ordinary
// token. Training is counting, so the seed only fixes the contract.
class FrequencyModel {
public:
    FrequencyModel() = default;

    static FrequencyModel train(const LabeledBatch& batch, std::uint64_t seed);

    std::vector<ScoreMap> predict(const std::vector<std::vector<std::string>>& rows) const;
    const std::vector<std::string>& labels() const { return labels_; }
    const Schema& schema() const { return schema_; }

    bool operator==(const FrequencyModel&) const = default;

private:
    Schema schema_;
    std::vector<std::string> labels_;                 // sorted
    std::vector<long long> label_counts_;             // per label
    // per label, per attribute: token -> count over training rows
    std::vector<std::vector<std::map<std::string, long long>>> counts_;
    std::vector<long long> domain_sizes_;              // distinct tokens per attribute
    std::uint64_t seed_ = 0;
};

FrequencyModel train_builtin(const LabeledBatch& batch, std::uint64_t seed);

class BuiltinLearner : public Learner {
public:
    explicit BuiltinLearner(std::uint64_t seed = 0) : seed_(seed) {}

    void fit(const LabeledBatch& batch) override { model_ = FrequencyModel::train(batch, seed_); }
    std::vector<ScoreMap> predict(
        const std::vector<std::vector<std::string>>& rows) const override {
        return model_.predict(rows);
    }

    const FrequencyModel& model() const { return model_; }

private:
    FrequencyModel model_;
    std::uint64_t seed_;
};

}  // namespace rsabl
