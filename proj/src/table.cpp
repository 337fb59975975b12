#include "rsabl/table.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rsabl {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

void check_token(const std::string& token) {
    if (token.empty()) {
        throw ParseError("empty cell");
    }
    if (token.find_first_of(",\n\r") != std::string::npos) {
        throw DomainError("token not representable in CSV: '" + token + "'");
    }
}

}  // namespace

DecisionTable DecisionTable::load_csv(const std::filesystem::path& path,
                                      const std::string& decision_column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), decision_column);
}

DecisionTable DecisionTable::parse_csv(const std::string& text,
                                       const std::string& decision_column) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                if (!cur.empty() && cur.back() == '\r') cur.pop_back();
                lines.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        if (!cur.empty()) lines.push_back(cur);
    }
    if (lines.empty()) {
        throw ParseError("empty CSV input");
    }

    const std::vector<std::string> header = split_line(lines[0]);
    for (const auto& name : header) {
        if (name.empty()) throw ParseError("empty attribute name in header");
    }
    auto dec_it = std::find(header.begin(), header.end(), decision_column);
    if (dec_it == header.end()) {
        throw SchemaError("decision column '" + decision_column + "' not found");
    }
    const std::size_t dec_idx = static_cast<std::size_t>(dec_it - header.begin());

    Schema schema;
    schema.decision_name = decision_column;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i != dec_idx) schema.condition_names.push_back(header[i]);
    }

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> labels;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        std::vector<std::string> cells = split_line(lines[li]);
        if (cells.size() != header.size()) {
            throw ParseError("row " + std::to_string(li) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
        }
        for (const auto& cell : cells) {
            if (cell.empty()) throw ParseError("empty cell in row " + std::to_string(li));
        }
        std::vector<std::string> row;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i == dec_idx) {
                labels.push_back(cells[i]);
            } else {
                row.push_back(cells[i]);
            }
        }
        rows.push_back(std::move(row));
    }
    return from_rows(std::move(schema), rows, labels);
}

DecisionTable DecisionTable::from_rows(Schema schema,
                                       const std::vector<std::vector<std::string>>& rows,
                                       const std::vector<std::string>& labels) {
    if (schema.condition_names.empty()) {
        throw SchemaError("table needs at least one condition attribute");
    }
    if (schema.decision_name.empty()) {
        throw SchemaError("decision attribute name is empty");
    }
    {
        std::set<std::string> seen;
        for (const auto& name : schema.condition_names) {
            if (!seen.insert(name).second) {
                throw SchemaError("duplicate attribute name '" + name + "'");
            }
        }
        if (seen.count(schema.decision_name)) {
            throw SchemaError("decision column duplicates condition attribute '" +
                              schema.decision_name + "'");
        }
    }
    if (rows.empty()) {
        throw SchemaError("table has no objects");
    }
    if (rows.size() != labels.size()) {
        throw SchemaError("row/label count mismatch");
    }

    const std::size_t m = schema.condition_names.size();
    DecisionTable table;
    table.schema_ = std::move(schema);
    table.num_objects_ = static_cast<int>(rows.size());
    table.domains_.resize(m + 1);
    table.columns_.assign(m + 1, std::vector<int>(rows.size(), kMissingCode));

    std::vector<std::set<std::string>> observed(m + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m) {
            throw SchemaError("row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) + " attribute values, expected " +
                              std::to_string(m));
        }
        for (std::size_t a = 0; a < m; ++a) {
            if (rows[r][a] != kMissingToken) observed[a].insert(rows[r][a]);
        }
        if (labels[r] == kMissingToken) {
            throw DomainError("decision cell is missing for object " + std::to_string(r));
        }
        observed[m].insert(labels[r]);
    }
    for (std::size_t a = 0; a <= m; ++a) {
        table.domains_[a].assign(observed[a].begin(), observed[a].end());
    }

    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t a = 0; a < m; ++a) {
            if (rows[r][a] == kMissingToken) continue;
            table.columns_[a][r] = static_cast<int>(
                std::lower_bound(table.domains_[a].begin(), table.domains_[a].end(), rows[r][a]) -
                table.domains_[a].begin());
        }
        table.columns_[m][r] = static_cast<int>(
            std::lower_bound(table.domains_[m].begin(), table.domains_[m].end(), labels[r]) -
            table.domains_[m].begin());
    }
    return table;
}

void DecisionTable::check_attr(AttrId a) const {
    if (a < 0 || a > decision_attr()) {
        throw UnknownAttribute("attribute id " + std::to_string(a) + " out of range");
    }
}

const std::string& DecisionTable::attr_name(AttrId a) const {
    check_attr(a);
    if (a == decision_attr()) return schema_.decision_name;
    return schema_.condition_names[static_cast<std::size_t>(a)];
}

AttrId DecisionTable::attr_id(const std::string& name) const {
    if (auto id = find_attr(name)) return *id;
    throw UnknownAttribute("unknown attribute '" + name + "'");
}

std::optional<AttrId> DecisionTable::find_attr(const std::string& name) const {
    for (std::size_t i = 0; i < schema_.condition_names.size(); ++i) {
        if (schema_.condition_names[i] == name) return static_cast<AttrId>(i);
    }
    if (name == schema_.decision_name) return decision_attr();
    return std::nullopt;
}

std::vector<AttrId> DecisionTable::condition_ids() const {
    std::vector<AttrId> ids(static_cast<std::size_t>(num_condition_attrs()));
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<AttrId>(i);
    return ids;
}

const std::vector<std::string>& DecisionTable::domain(AttrId a) const {
    check_attr(a);
    return domains_[static_cast<std::size_t>(a)];
}

std::optional<int> DecisionTable::value_code(AttrId a, const std::string& token) const {
    check_attr(a);
    const auto& dom = domains_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(dom.begin(), dom.end(), token);
    if (it == dom.end() || *it != token) return std::nullopt;
    return static_cast<int>(it - dom.begin());
}

int DecisionTable::code(ObjectId x, AttrId a) const {
    check_attr(a);
    if (x < 0 || x >= num_objects_) {
        throw UnknownObject("object id " + std::to_string(x) + " out of range");
    }
    return columns_[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
}

const std::string& DecisionTable::token(ObjectId x, AttrId a) const {
    const int c = code(x, a);
    if (c == kMissingCode) return kMissingToken;
    return domains_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
}

std::vector<ObjectId> DecisionTable::universe() const {
    std::vector<ObjectId> all(static_cast<std::size_t>(num_objects_));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ObjectId>(i);
    return all;
}

std::vector<std::vector<ObjectId>> DecisionTable::decision_classes() const {
    std::vector<std::vector<ObjectId>> classes(domains_[static_cast<std::size_t>(decision_attr())].size());
    const auto& col = columns_[static_cast<std::size_t>(decision_attr())];
    for (int x = 0; x < num_objects_; ++x) {
        classes[static_cast<std::size_t>(col[static_cast<std::size_t>(x)])].push_back(x);
    }
    return classes;
}

std::string DecisionTable::to_csv() const {
    std::string out;
    for (const auto& name : schema_.condition_names) {
        check_token(name);
        out += name;
        out += ',';
    }
    check_token(schema_.decision_name);
    out += schema_.decision_name;
    out += '\n';
    for (int x = 0; x < num_objects_; ++x) {
        for (AttrId a = 0; a <= decision_attr(); ++a) {
            const std::string& tok = token(x, a);
            check_token(tok);
            out += tok;
            out += (a == decision_attr()) ? '\n' : ',';
        }
    }
    return out;
}

Partition make_partition(const DecisionTable& table, const std::vector<AttrId>& attrs) {
    std::vector<AttrId> sorted = attrs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (AttrId a : sorted) {
        if (a < 0 || a > table.decision_attr()) {
            throw UnknownAttribute("attribute id " + std::to_string(a) + " out of range");
        }
    }

    Partition part;
    part.source_attrs = sorted;
    part.block_of.assign(static_cast<std::size_t>(table.num_objects()), -1);

    std::map<std::vector<int>, int> index;
    std::vector<int> key(sorted.size());
    for (int x = 0; x < table.num_objects(); ++x) {
        for (std::size_t i = 0; i < sorted.size(); ++i) key[i] = table.code(x, sorted[i]);
        auto [it, inserted] = index.try_emplace(key, static_cast<int>(part.blocks.size()));
        if (inserted) part.blocks.emplace_back();
        part.blocks[static_cast<std::size_t>(it->second)].push_back(x);
        part.block_of[static_cast<std::size_t>(x)] = it->second;
    }
    return part;
}

std::vector<AttrId> attr_ids(const DecisionTable& table, const std::vector<std::string>& names) {
    std::vector<AttrId> ids;
    ids.reserve(names.size());
    for (const auto& name : names) ids.push_back(table.attr_id(name));
    return ids;
}

}  // namespace rsabl
