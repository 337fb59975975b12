#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rsabl/errors.hpp"

namespace rsabl {

using ObjectId = int;
using AttrId = int;

// Cell code for the "*" token. Missing is indiscernible only from Missing.
inline constexpr int kMissingCode = -1;
inline const std::string kMissingToken = "*";

// Attribute names shared by tables and batches: the ordered condition
// attributes plus a single decision attribute.
struct Schema {
    std::vector<std::string> condition_names;
    std::string decision_name;

    bool operator==(const Schema&) const = default;
};

// Partition of the universe induced by the indiscernibility relation of an
// attribute subset: two objects share a block iff they agree on every
// attribute in source_attrs. Blocks are ordered by smallest member and each
// block lists its members in ascending order.
struct Partition {
    std::vector<std::vector<ObjectId>> blocks;
    std::vector<AttrId> source_attrs;
    std::vector<int> block_of;  // object -> index into blocks

    const std::vector<ObjectId>& block_containing(ObjectId x) const {
        return blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(x)])];
    }
};

// Immutable decision information table. Objects are dense row indices
// 0..n-1; attributes are the condition columns (ids 0..m-1) followed by the
// decision column (id m). Values are opaque discrete tokens; "*" marks a
// missing condition value. Decision cells are never missing.
class DecisionTable {
public:
    static DecisionTable load_csv(const std::filesystem::path& path,
                                  const std::string& decision_column);
    static DecisionTable parse_csv(const std::string& text,
                                   const std::string& decision_column);
    static DecisionTable from_rows(Schema schema,
                                   const std::vector<std::vector<std::string>>& rows,
                                   const std::vector<std::string>& labels);

    int num_objects() const { return num_objects_; }
    int num_condition_attrs() const { return static_cast<int>(schema_.condition_names.size()); }
    AttrId decision_attr() const { return num_condition_attrs(); }
    const Schema& schema() const { return schema_; }

    const std::string& attr_name(AttrId a) const;
    // Throws UnknownAttribute for names not in the schema.
    AttrId attr_id(const std::string& name) const;
    std::optional<AttrId> find_attr(const std::string& name) const;
    std::vector<AttrId> condition_ids() const;

    // Sorted value tokens observed for attribute a ("*" is not a value).
    const std::vector<std::string>& domain(AttrId a) const;
    std::optional<int> value_code(AttrId a, const std::string& token) const;

    int code(ObjectId x, AttrId a) const;
    const std::string& token(ObjectId x, AttrId a) const;

    std::vector<ObjectId> universe() const;
    // Decision classes in domain (token-sorted) order; class index == code.
    std::vector<std::vector<ObjectId>> decision_classes() const;

    // Emits the table in the CSV format accepted by load_csv (decision last).
    std::string to_csv() const;

    bool operator==(const DecisionTable&) const = default;

private:
    void check_attr(AttrId a) const;

    Schema schema_;
    std::vector<std::vector<std::string>> domains_;  // per attr, sorted tokens
    std::vector<std::vector<int>> columns_;          // per attr, code per object
    int num_objects_ = 0;
};

// Equivalence classes of the indiscernibility relation over attrs, which may
// include the decision attribute. An empty attrs set relates everything and
// yields the single universe block.
Partition make_partition(const DecisionTable& table, const std::vector<AttrId>& attrs);

std::vector<AttrId> attr_ids(const DecisionTable& table, const std::vector<std::string>& names);

}  // namespace rsabl
