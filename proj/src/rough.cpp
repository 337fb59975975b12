#include "rsabl/rough.hpp"

#include <algorithm>
#include <map>

namespace rsabl {

namespace {

ObjectSet normalize_target(const DecisionTable& table, const ObjectSet& target) {
    ObjectSet t = target;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (!t.empty() && (t.front() < 0 || t.back() >= table.num_objects())) {
        throw UnknownObject("target object id out of range");
    }
    return t;
}

std::vector<AttrId> normalize_condition_attrs(const DecisionTable& table,
                                              const std::vector<AttrId>& attrs) {
    std::vector<AttrId> a = attrs;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (AttrId id : a) {
        if (id < 0 || id >= table.num_condition_attrs()) {
            throw UnknownAttribute("condition attribute id " + std::to_string(id) +
                                   " out of range");
        }
    }
    return a;
}

bool block_inside(const std::vector<ObjectId>& block, const ObjectSet& target) {
    return std::includes(target.begin(), target.end(), block.begin(), block.end());
}

bool block_meets(const std::vector<ObjectId>& block, const ObjectSet& target) {
    auto bi = block.begin();
    auto ti = target.begin();
    while (bi != block.end() && ti != target.end()) {
        if (*bi < *ti) ++bi;
        else if (*ti < *bi) ++ti;
        else return true;
    }
    return false;
}

ObjectSet positive_region_of(const DecisionTable& table, const std::vector<AttrId>& attrs) {
    if (attrs.empty()) return {};
    const Partition part = make_partition(table, attrs);
    ObjectSet pos;
    for (const auto& block : part.blocks) {
        const int first_dec = table.code(block.front(), table.decision_attr());
        bool pure = true;
        for (ObjectId x : block) {
            if (table.code(x, table.decision_attr()) != first_dec) {
                pure = false;
                break;
            }
        }
        if (pure) pos.insert(pos.end(), block.begin(), block.end());
    }
    std::sort(pos.begin(), pos.end());
    return pos;
}

}  // namespace

ObjectSet lower_approx(const DecisionTable& table, const std::vector<AttrId>& attrs,
                       const ObjectSet& target) {
    const ObjectSet t = normalize_target(table, target);
    const std::vector<AttrId> a = normalize_condition_attrs(table, attrs);
    const Partition part = make_partition(table, a);
    ObjectSet out;
    for (const auto& block : part.blocks) {
        if (block_inside(block, t)) out.insert(out.end(), block.begin(), block.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

ObjectSet upper_approx(const DecisionTable& table, const std::vector<AttrId>& attrs,
                       const ObjectSet& target) {
    const ObjectSet t = normalize_target(table, target);
    const std::vector<AttrId> a = normalize_condition_attrs(table, attrs);
    const Partition part = make_partition(table, a);
    ObjectSet out;
    for (const auto& block : part.blocks) {
        if (block_meets(block, t)) out.insert(out.end(), block.begin(), block.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

RegionReport regions(const DecisionTable& table, const std::vector<AttrId>& attrs,
                     const ObjectSet& target) {
    const ObjectSet t = normalize_target(table, target);
    const std::vector<AttrId> a = normalize_condition_attrs(table, attrs);
    const Partition part = make_partition(table, a);

    ObjectSet lower;
    ObjectSet upper;
    for (const auto& block : part.blocks) {
        if (!block_meets(block, t)) continue;
        upper.insert(upper.end(), block.begin(), block.end());
        if (block_inside(block, t)) lower.insert(lower.end(), block.begin(), block.end());
    }
    std::sort(lower.begin(), lower.end());
    std::sort(upper.begin(), upper.end());

    RegionReport report;
    report.attrs = a;
    report.target = t;
    report.pos = lower;
    const ObjectSet all = table.universe();
    std::set_difference(all.begin(), all.end(), upper.begin(), upper.end(),
                        std::back_inserter(report.neg));
    std::set_difference(upper.begin(), upper.end(), lower.begin(), lower.end(),
                        std::back_inserter(report.bnd));
    return report;
}

ObjectSet decision_positive_region(const DecisionTable& table, const std::vector<AttrId>& attrs) {
    return positive_region_of(table, normalize_condition_attrs(table, attrs));
}

Ratio gamma(const DecisionTable& table, const std::vector<AttrId>& attrs) {
    const std::vector<AttrId> a = normalize_condition_attrs(table, attrs);
    if (a.empty()) return Ratio(0);
    const ObjectSet pos = positive_region_of(table, a);
    return Ratio(static_cast<long long>(pos.size()), table.num_objects());
}

Ratio significance(const DecisionTable& table, AttrId a, const std::vector<AttrId>& base) {
    std::vector<AttrId> b = normalize_condition_attrs(table, base);
    if (a < 0 || a >= table.num_condition_attrs()) {
        throw UnknownAttribute("condition attribute id " + std::to_string(a) + " out of range");
    }
    if (std::binary_search(b.begin(), b.end(), a)) {
        throw AttributeAlreadyInBase("attribute '" + table.attr_name(a) + "' already in base");
    }
    const Ratio before = gamma(table, b);
    b.push_back(a);
    return gamma(table, b) - before;
}

bool is_reduct(const DecisionTable& table, const std::vector<AttrId>& attrs) {
    const std::vector<AttrId> a = normalize_condition_attrs(table, attrs);
    const ObjectSet full = positive_region_of(table, table.condition_ids());
    if (positive_region_of(table, a) != full) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<AttrId> without = a;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        if (positive_region_of(table, without) == full) return false;
    }
    return true;
}

namespace {

// Attribute order used for tie-breaking: by name, then by id.
std::vector<AttrId> name_ordered_conditions(const DecisionTable& table) {
    std::vector<AttrId> ids = table.condition_ids();
    std::stable_sort(ids.begin(), ids.end(), [&](AttrId lhs, AttrId rhs) {
        return table.attr_name(lhs) < table.attr_name(rhs);
    });
    return ids;
}

}  // namespace

ReductResult greedy_reduct(const DecisionTable& table) {
    const ObjectSet full = positive_region_of(table, table.condition_ids());
    const std::vector<AttrId> order = name_ordered_conditions(table);

    std::vector<AttrId> chosen;
    ObjectSet pos;
    while (pos != full) {
        AttrId best = -1;
        std::size_t best_size = 0;
        for (AttrId a : order) {
            if (std::find(chosen.begin(), chosen.end(), a) != chosen.end()) continue;
            std::vector<AttrId> trial = chosen;
            trial.push_back(a);
            const std::size_t size = positive_region_of(table, trial).size();
            if (best == -1 || size > best_size) {
                best = a;
                best_size = size;
            }
        }
        chosen.push_back(best);
        pos = positive_region_of(table, chosen);
    }

    for (AttrId a : order) {
        auto it = std::find(chosen.begin(), chosen.end(), a);
        if (it == chosen.end()) continue;
        std::vector<AttrId> without = chosen;
        without.erase(std::find(without.begin(), without.end(), a));
        if (positive_region_of(table, without) == full) chosen.erase(it);
    }
    std::sort(chosen.begin(), chosen.end());

    ReductResult result;
    result.attrs = std::move(chosen);
    result.method = ReductMethod::Greedy;
    result.gamma_full = gamma(table, table.condition_ids());
    result.gamma_reduct = gamma(table, result.attrs);
    return result;
}

ReductResult exhaustive_min_reduct(const DecisionTable& table, int cap) {
    const int m = table.num_condition_attrs();
    if (m > cap) {
        throw CapExceeded("exhaustive search over " + std::to_string(m) +
                          " attributes exceeds cap " + std::to_string(cap));
    }
    const ObjectSet full = positive_region_of(table, table.condition_ids());

    ReductResult result;
    result.method = ReductMethod::Exhaustive;
    result.gamma_full = gamma(table, table.condition_ids());

    for (int size = 0; size <= m; ++size) {
        std::vector<AttrId> subset(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
        while (true) {
            if (positive_region_of(table, subset) == full) {
                result.attrs = subset;
                result.gamma_reduct = gamma(table, subset);
                return result;
            }
            int i = size - 1;
            while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - size + i) --i;
            if (i < 0) break;
            ++subset[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) {
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    result.attrs = table.condition_ids();
    result.gamma_reduct = result.gamma_full;
    return result;
}

Ratio rule_certainty(const DecisionTable& table, ObjectId x, const std::vector<AttrId>& attrs) {
    if (x < 0 || x >= table.num_objects()) {
        throw UnknownObject("object id " + std::to_string(x) + " out of range");
    }
    const std::vector<AttrId> a = normalize_condition_attrs(table, attrs);
    const Partition part = make_partition(table, a);
    const auto& block = part.block_containing(x);
    const int dec = table.code(x, table.decision_attr());
    long long agree = 0;
    for (ObjectId y : block) {
        if (table.code(y, table.decision_attr()) == dec) ++agree;
    }
    return Ratio(agree, static_cast<long long>(block.size()));
}

}  // namespace rsabl
