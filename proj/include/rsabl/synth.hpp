#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsabl/abduction.hpp"
#include "rsabl/table.hpp"

namespace rsabl {

// Synthetic classification data: one binary attribute signature per class,
// rows are signatures with each cell independently flipped with probability
// noise, split deterministically into labeled / unlabeled / test.
struct SynthParams {
    int classes = 10;
    int attrs = 11;
    int values = 2;  // domain size per attribute
    int rows = 2000;
    double noise = 0.1;
    double label_fraction = 0.1;
    double test_fraction = 0.5;
    std::uint64_t seed = 0;
};

struct SynthData {
    Schema schema;
    LabeledBatch labeled;
    std::vector<std::vector<std::string>> unlabeled;  // rows without labels
    std::vector<std::string> unlabeled_truth;          // ground truth, kept aside
    LabeledBatch test;
    std::vector<std::vector<int>> signatures;          // per class
};

SynthData make_synth(const SynthParams& params);

// CSV with the batch's schema (decision column last).
std::string batch_csv(const LabeledBatch& batch);
// CSV of condition columns only, for unlabeled rows.
std::string rows_csv(const Schema& schema, const std::vector<std::vector<std::string>>& rows);

// Header + condition rows without a decision column; the complement of
// DecisionTable::load_csv for unlabeled inputs.
std::pair<std::vector<std::string>, std::vector<std::vector<std::string>>> parse_rows_csv(
    const std::string& text);

}  // namespace rsabl
