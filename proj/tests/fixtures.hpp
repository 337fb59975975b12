#pragma once

#include <string>
#include <vector>

#include "rsabl/abduction.hpp"
#include "rsabl/table.hpp"

namespace fixtures {

// Six objects, two attributes, inconsistent: the last bear shares the
// otters' condition values.
inline const std::string kInconsistentAnimalsCsv =
    "flys,swims,d\n"
    "1,0,bat\n"
    "1,0,bat\n"
    "0,1,otter\n"
    "0,1,otter\n"
    "0,0,bear\n"
    "0,1,bear\n";

// Five objects, three attributes, consistent; furry is redundant.
inline const std::string kConsistentAnimalsCsv =
    "flys,swims,furry,d\n"
    "1,0,0,bat\n"
    "1,0,0,bat\n"
    "0,1,1,otter\n"
    "0,1,1,otter\n"
    "0,0,1,bear\n";

inline rsabl::DecisionTable inconsistent_animals() {
    return rsabl::DecisionTable::parse_csv(kInconsistentAnimalsCsv, "d");
}

inline rsabl::DecisionTable consistent_animals() {
    return rsabl::DecisionTable::parse_csv(kConsistentAnimalsCsv, "d");
}

inline rsabl::LabeledBatch to_batch(const rsabl::DecisionTable& table) {
    rsabl::LabeledBatch batch;
    batch.schema = table.schema();
    for (int x = 0; x < table.num_objects(); ++x) {
        std::vector<std::string> row;
        for (int a = 0; a < table.num_condition_attrs(); ++a) {
            row.push_back(table.token(x, a));
        }
        batch.rows.push_back(std::move(row));
        batch.labels.push_back(table.token(x, table.decision_attr()));
    }
    return batch;
}

}  // namespace fixtures
