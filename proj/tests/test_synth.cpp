#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rsabl/rough.hpp"
#include "rsabl/synth.hpp"
#include "rsabl/table.hpp"

using namespace rsabl;

namespace {

SynthParams base_params() {
    SynthParams p;
    p.classes = 4;
    p.attrs = 6;
    p.values = 3;
    p.rows = 100;
    p.noise = 0.1;
    p.label_fraction = 0.5;
    p.test_fraction = 0.3;
    p.seed = 5;
    return p;
}

}  // namespace

TEST_CASE("generation is reproducible per seed") {
    const SynthData a = make_synth(base_params());
    const SynthData b = make_synth(base_params());
    CHECK(batch_csv(a.labeled) == batch_csv(b.labeled));
    CHECK(rows_csv(a.schema, a.unlabeled) == rows_csv(b.schema, b.unlabeled));
    CHECK(batch_csv(a.test) == batch_csv(b.test));
    CHECK(a.unlabeled_truth == b.unlabeled_truth);
    CHECK(a.signatures == b.signatures);

    SynthParams other = base_params();
    other.seed = 6;
    const SynthData c = make_synth(other);
    CHECK(batch_csv(a.labeled) != batch_csv(c.labeled));
}

TEST_CASE("split sizes follow the fractions") {
    const SynthData data = make_synth(base_params());
    CHECK(data.test.rows.size() == 30);
    CHECK(data.labeled.rows.size() == 35);
    CHECK(data.unlabeled.size() == 35);
    CHECK(data.unlabeled_truth.size() == data.unlabeled.size());
    CHECK(data.labeled.labels.size() == data.labeled.rows.size());
    CHECK(data.test.labels.size() == data.test.rows.size());

    SynthParams all_labeled = base_params();
    all_labeled.label_fraction = 1.0;
    const SynthData full = make_synth(all_labeled);
    CHECK(full.unlabeled.empty());
    CHECK(full.labeled.rows.size() == 70);
}

TEST_CASE("noiseless data is consistent") {
    SynthParams clean = base_params();
    clean.noise = 0.0;
    const SynthData data = make_synth(clean);

    LabeledBatch combined = data.labeled;
    for (std::size_t i = 0; i < data.unlabeled.size(); ++i) {
        combined.rows.push_back(data.unlabeled[i]);
        combined.labels.push_back(data.unlabeled_truth[i]);
    }
    for (std::size_t i = 0; i < data.test.rows.size(); ++i) {
        combined.rows.push_back(data.test.rows[i]);
        combined.labels.push_back(data.test.labels[i]);
    }
    const DecisionTable table = batch_table(combined);
    CHECK(gamma(table, attr_ids(table, table.schema().condition_names)) == Ratio(1));
}

TEST_CASE("invalid parameters are rejected") {
    auto expect_config_error = [](auto mutate) {
        SynthParams p = base_params();
        mutate(p);
        CHECK_THROWS_AS(make_synth(p), ConfigError);
    };
    expect_config_error([](SynthParams& p) { p.classes = 1; });
    expect_config_error([](SynthParams& p) { p.attrs = 0; });
    expect_config_error([](SynthParams& p) { p.rows = 0; });
    expect_config_error([](SynthParams& p) { p.noise = 0.5; });
    expect_config_error([](SynthParams& p) { p.noise = -0.01; });
    expect_config_error([](SynthParams& p) { p.label_fraction = 0.0; });
    expect_config_error([](SynthParams& p) { p.label_fraction = 1.01; });
    expect_config_error([](SynthParams& p) { p.test_fraction = 1.0; });
    expect_config_error([](SynthParams& p) { p.test_fraction = -0.1; });
    expect_config_error([](SynthParams& p) { p.values = 1; });
    expect_config_error([](SynthParams& p) {
        p.classes = 10;
        p.attrs = 2;
        p.values = 2;
    });
}

TEST_CASE("labeled rows are stratified by class") {
    SynthParams p;
    p.classes = 10;
    p.attrs = 11;
    p.values = 4;
    p.rows = 2000;
    p.noise = 0.1;
    p.label_fraction = 0.1;
    p.test_fraction = 0.9;
    p.seed = 1;
    const SynthData data = make_synth(p);

    REQUIRE(data.labeled.rows.size() == 20);
    std::map<std::string, int> counts;
    for (const std::string& label : data.labeled.labels) ++counts[label];
    CHECK(counts.size() == 10);
    for (const auto& [label, count] : counts) CHECK(count == 2);
}

TEST_CASE("class signatures are pairwise distinct") {
    const SynthData data = make_synth(base_params());
    REQUIRE(data.signatures.size() == 4);
    std::set<std::vector<int>> unique(data.signatures.begin(), data.signatures.end());
    CHECK(unique.size() == data.signatures.size());
    for (const auto& sig : data.signatures) {
        CHECK(sig.size() == data.schema.condition_names.size());
    }
}

TEST_CASE("csv helpers round-trip") {
    const SynthData data = make_synth(base_params());

    const std::string csv = rows_csv(data.schema, data.unlabeled);
    const auto [names, rows] = parse_rows_csv(csv);
    CHECK(names == data.schema.condition_names);
    CHECK(rows == data.unlabeled);

    const DecisionTable parsed =
        DecisionTable::parse_csv(batch_csv(data.labeled), data.schema.decision_name);
    CHECK(parsed.schema().condition_names == data.schema.condition_names);
    CHECK(parsed.schema().decision_name == data.schema.decision_name);
    CHECK(parsed.num_objects() == static_cast<int>(data.labeled.rows.size()));
}
