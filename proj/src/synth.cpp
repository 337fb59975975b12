#include "rsabl/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace rsabl {

namespace {

std::string padded_name(const std::string& prefix, int i, int count) {
    int width = 1;
    for (int v = count - 1; v >= 10; v /= 10) ++width;
    std::string digits = std::to_string(i);
    while (static_cast<int>(digits.size()) < width) digits.insert(digits.begin(), '0');
    return prefix + digits;
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_csv_token(const std::string& token) {
    if (token.empty() || token.find_first_of(",\n\r") != std::string::npos) {
        throw DomainError("token not representable in CSV: '" + token + "'");
    }
}

std::vector<std::string> split_cells(const std::string& line) {
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

}  // namespace

SynthData make_synth(const SynthParams& params) {
    if (params.classes < 2) throw ConfigError("classes must be >= 2");
    if (params.attrs < 1) throw ConfigError("attrs must be >= 1");
    if (params.rows < 1) throw ConfigError("rows must be >= 1");
    if (params.noise < 0.0 || params.noise >= 0.5) {
        throw ConfigError("noise must lie in [0, 0.5)");
    }
    if (params.label_fraction <= 0.0 || params.label_fraction > 1.0) {
        throw ConfigError("label_fraction must lie in (0, 1]");
    }
    if (params.test_fraction < 0.0 || params.test_fraction >= 1.0) {
        throw ConfigError("test_fraction must lie in [0, 1)");
    }
    if (params.values < 2) throw ConfigError("values must be >= 2");
    {
        long long capacity = 1;
        for (int a = 0; a < params.attrs && capacity < params.classes; ++a) {
            capacity *= params.values;
        }
        if (capacity < params.classes) {
            throw ConfigError("not enough attribute patterns for the class count");
        }
    }

    SynthData data;
    for (int a = 0; a < params.attrs; ++a) {
        data.schema.condition_names.push_back(padded_name("a", a, params.attrs));
    }
    data.schema.decision_name = "d";

    std::mt19937_64 rng(params.seed);

    // Class signatures form a star: every class copies the background pattern
    // and rewrites one cell to a marker value, so classes share most attribute
    // values and differ on a single class-specific cell. The spacing floor
    // relaxes after repeated failures down to distinctness.
    for (int c = 0; c < params.classes; ++c) {
        std::vector<int> sig(static_cast<std::size_t>(params.attrs));
        int spacing = std::min(params.attrs, 2);
        int tries = 0;
        while (true) {
            if (c == 0) {
                for (auto& cell : sig) {
                    cell = static_cast<int>(rng() % static_cast<std::uint64_t>(params.values));
                }
            } else {
                sig = data.signatures[0];
                const auto a = static_cast<std::size_t>(
                    rng() % static_cast<std::uint64_t>(params.attrs));
                // Prefer a marker value unused at this attribute so far, so
                // classes overlapping on a cell stay distinguishable there.
                std::vector<char> used(static_cast<std::size_t>(params.values), 0);
                used[static_cast<std::size_t>(sig[a])] = 1;
                for (const auto& other : data.signatures) {
                    used[static_cast<std::size_t>(other[a])] = 1;
                }
                std::vector<int> fresh;
                for (int v = 0; v < params.values; ++v) {
                    if (!used[static_cast<std::size_t>(v)]) fresh.push_back(v);
                }
                if (fresh.empty()) {
                    for (int v = 0; v < params.values; ++v) {
                        if (v != sig[a]) fresh.push_back(v);
                    }
                }
                sig[a] = fresh[rng() % fresh.size()];
            }
            int closest = params.attrs + 1;
            for (const auto& other : data.signatures) {
                int dist = 0;
                for (int a = 0; a < params.attrs; ++a) {
                    dist += sig[static_cast<std::size_t>(a)] != other[static_cast<std::size_t>(a)];
                }
                closest = std::min(closest, dist);
            }
            if (closest >= spacing) break;
            if (++tries % 64 == 0 && spacing > 1) --spacing;
        }
        data.signatures.push_back(sig);
    }

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> labels;
    rows.reserve(static_cast<std::size_t>(params.rows));
    for (int r = 0; r < params.rows; ++r) {
        const int c = r % params.classes;
        std::vector<std::string> row(static_cast<std::size_t>(params.attrs));
        for (int a = 0; a < params.attrs; ++a) {
            int v = data.signatures[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)];
            if (unit_double(rng) < params.noise) {
                const int offset =
                    1 + static_cast<int>(rng() % static_cast<std::uint64_t>(params.values - 1));
                v = (v + offset) % params.values;
            }
            row[static_cast<std::size_t>(a)] = std::to_string(v);
        }
        rows.push_back(std::move(row));
        labels.push_back(padded_name("c", c, params.classes));
    }

    std::vector<int> order(static_cast<std::size_t>(params.rows));
    for (int i = 0; i < params.rows; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int i = params.rows - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }

    const int test_n = static_cast<int>(std::llround(params.test_fraction * params.rows));
    const int train_n = params.rows - test_n;
    if (train_n < 1) {
        throw ConfigError("test_fraction leaves no training rows");
    }
    int labeled_n = static_cast<int>(std::llround(params.label_fraction * train_n));
    labeled_n = std::clamp(labeled_n, 1, train_n);

    data.labeled.schema = data.schema;
    data.labeled.origin = BatchOrigin::Labeled;
    data.test.schema = data.schema;
    data.test.origin = BatchOrigin::Labeled;

    // The labeled slice is stratified: rows are drawn round-robin across
    // classes (in shuffled order within each class) so small label budgets
    // still touch every class the training pool contains.
    std::vector<std::vector<std::size_t>> pools(static_cast<std::size_t>(params.classes));
    for (int i = test_n; i < params.rows; ++i) {
        const std::size_t src = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
        pools[src % static_cast<std::size_t>(params.classes)].push_back(src);
    }
    std::vector<char> is_labeled(static_cast<std::size_t>(params.rows), 0);
    {
        int taken = 0;
        std::vector<std::size_t> cursor(pools.size(), 0);
        while (taken < labeled_n) {
            bool any = false;
            for (std::size_t c = 0; c < pools.size() && taken < labeled_n; ++c) {
                if (cursor[c] >= pools[c].size()) continue;
                is_labeled[pools[c][cursor[c]++]] = 1;
                ++taken;
                any = true;
            }
            if (!any) break;
        }
    }

    for (int i = 0; i < params.rows; ++i) {
        const std::size_t src = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
        if (i < test_n) {
            data.test.rows.push_back(rows[src]);
            data.test.labels.push_back(labels[src]);
        } else if (is_labeled[src]) {
            data.labeled.rows.push_back(rows[src]);
            data.labeled.labels.push_back(labels[src]);
        } else {
            data.unlabeled.push_back(rows[src]);
            data.unlabeled_truth.push_back(labels[src]);
        }
    }
    return data;
}

std::string batch_csv(const LabeledBatch& batch) {
    std::string out;
    for (const auto& name : batch.schema.condition_names) {
        check_csv_token(name);
        out += name;
        out += ',';
    }
    check_csv_token(batch.schema.decision_name);
    out += batch.schema.decision_name;
    out += '\n';
    if (batch.rows.size() != batch.labels.size()) {
        throw LengthMismatch("batch rows/labels length mismatch");
    }
    for (std::size_t r = 0; r < batch.rows.size(); ++r) {
        for (const auto& token : batch.rows[r]) {
            check_csv_token(token);
            out += token;
            out += ',';
        }
        check_csv_token(batch.labels[r]);
        out += batch.labels[r];
        out += '\n';
    }
    return out;
}

std::string rows_csv(const Schema& schema, const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < schema.condition_names.size(); ++i) {
        check_csv_token(schema.condition_names[i]);
        if (i) out += ',';
        out += schema.condition_names[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != schema.condition_names.size()) {
            throw SchemaError("row width does not match schema");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            check_csv_token(row[i]);
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

std::pair<std::vector<std::string>, std::vector<std::vector<std::string>>> parse_rows_csv(
    const std::string& text) {
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
    std::vector<std::string> header = split_cells(lines[0]);
    for (const auto& name : header) {
        if (name.empty()) throw ParseError("empty attribute name in header");
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        std::vector<std::string> cells = split_cells(lines[li]);
        if (cells.size() != header.size()) {
            throw ParseError("row " + std::to_string(li) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
        }
        for (const auto& cell : cells) {
            if (cell.empty()) throw ParseError("empty cell in row " + std::to_string(li));
        }
        rows.push_back(std::move(cells));
    }
    return {std::move(header), std::move(rows)};
}

}  // namespace rsabl
