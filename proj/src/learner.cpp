#include "rsabl/learner.hpp"

#include <algorithm>
#include <set>

namespace rsabl {

std::vector<std::string> Learner::predict_labels(
    const std::vector<std::vector<std::string>>& rows) const {
    const std::vector<ScoreMap> scores = predict(rows);
    std::vector<std::string> labels;
    labels.reserve(scores.size());
    for (const ScoreMap& row : scores) {
        if (row.empty()) {
            throw EmptyBatch("classifier produced an empty score map");
        }
        auto best = row.begin();
        for (auto it = std::next(row.begin()); it != row.end(); ++it) {
            if (it->second > best->second) best = it;
        }
        labels.push_back(best->first);
    }
    return labels;
}

double Learner::accuracy(const LabeledBatch& batch) const {
    if (batch.rows.size() != batch.labels.size()) {
        throw LengthMismatch("batch rows/labels length mismatch");
    }
    if (batch.rows.empty()) {
        throw EmptyBatch("accuracy of an empty batch");
    }
    const std::vector<std::string> predicted = predict_labels(batch.rows);
    return to_double(consistency_score(predicted, batch.labels));
}

FrequencyModel FrequencyModel::train(const LabeledBatch& batch, std::uint64_t seed) {
    if (batch.rows.empty()) {
        throw EmptyBatch("cannot train on an empty batch");
    }
    if (batch.rows.size() != batch.labels.size()) {
        throw LengthMismatch("batch rows/labels length mismatch");
    }
    const std::size_t width = batch.schema.condition_names.size();
    for (const auto& row : batch.rows) {
        if (row.size() != width) {
            throw SchemaError("training row width does not match schema");
        }
    }

    FrequencyModel model;
    model.schema_ = batch.schema;
    model.seed_ = seed;

    std::set<std::string> label_set(batch.labels.begin(), batch.labels.end());
    model.labels_.assign(label_set.begin(), label_set.end());
    model.label_counts_.assign(model.labels_.size(), 0);
    model.counts_.assign(model.labels_.size(),
                         std::vector<std::map<std::string, long long>>(width));

    std::vector<std::set<std::string>> tokens(width);
    for (std::size_t r = 0; r < batch.rows.size(); ++r) {
        const std::size_t li = static_cast<std::size_t>(
            std::lower_bound(model.labels_.begin(), model.labels_.end(), batch.labels[r]) -
            model.labels_.begin());
        ++model.label_counts_[li];
        for (std::size_t a = 0; a < width; ++a) {
            ++model.counts_[li][a][batch.rows[r][a]];
            tokens[a].insert(batch.rows[r][a]);
        }
    }
    model.domain_sizes_.resize(width);
    for (std::size_t a = 0; a < width; ++a) {
        model.domain_sizes_[a] = std::max<long long>(1, static_cast<long long>(tokens[a].size()));
    }
    return model;
}

std::vector<ScoreMap> FrequencyModel::predict(
    const std::vector<std::vector<std::string>>& rows) const {
    if (labels_.empty()) {
        throw EmptyBatch("classifier has not been trained");
    }
    const std::size_t width = schema_.condition_names.size();
    std::vector<ScoreMap> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != width) {
            throw SchemaError("row width does not match classifier schema");
        }
        ScoreMap scores;
        double total = 0.0;
        for (std::size_t li = 0; li < labels_.size(); ++li) {
            double p = 1.0;
            for (std::size_t a = 0; a < width; ++a) {
                const auto& table = counts_[li][a];
                auto it = table.find(row[a]);
                const long long count = (it == table.end()) ? 0 : it->second;
                p *= static_cast<double>(count + 1) /
                     static_cast<double>(label_counts_[li] + domain_sizes_[a]);
            }
            scores[labels_[li]] = p;
            total += p;
        }
        for (auto& [label, score] : scores) score /= total;
        out.push_back(std::move(scores));
    }
    return out;
}

FrequencyModel train_builtin(const LabeledBatch& batch, std::uint64_t seed) {
    return FrequencyModel::train(batch, seed);
}

}  // namespace rsabl
