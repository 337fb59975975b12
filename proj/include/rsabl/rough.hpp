#pragma once

#include <string>
#include <vector>

#include "rsabl/ratio.hpp"
#include "rsabl/table.hpp"

namespace rsabl {

// Object sets are sorted ascending.
using ObjectSet = std::vector<ObjectId>;

// Positive / negative / boundary regions of a target set under the
// indiscernibility relation of attrs. pos, neg and bnd partition the
// universe: pos = lower approximation, neg = universe minus upper,
// bnd = upper minus lower.
struct RegionReport {
    ObjectSet pos;
    ObjectSet neg;
    ObjectSet bnd;
    ObjectSet target;
    std::vector<AttrId> attrs;
};

enum class ReductMethod { Greedy, Exhaustive };

struct ReductResult {
    std::vector<AttrId> attrs;  // ascending ids
    ReductMethod method = ReductMethod::Greedy;
    Ratio gamma_full{0};
    Ratio gamma_reduct{0};
};

// Union of attrs-blocks fully contained in target.
ObjectSet lower_approx(const DecisionTable& table, const std::vector<AttrId>& attrs,
                       const ObjectSet& target);

// Union of attrs-blocks intersecting target.
ObjectSet upper_approx(const DecisionTable& table, const std::vector<AttrId>& attrs,
                       const ObjectSet& target);

RegionReport regions(const DecisionTable& table, const std::vector<AttrId>& attrs,
                     const ObjectSet& target);

// POS_attrs(D): union over all decision classes of their lower
// approximations. Empty attrs yields the empty region (the seed convention
// used by the greedy search).
ObjectSet decision_positive_region(const DecisionTable& table, const std::vector<AttrId>& attrs);

// |POS_attrs(D)| / |U|, exact. gamma of the empty set is 0 by convention.
Ratio gamma(const DecisionTable& table, const std::vector<AttrId>& attrs);

// gamma(base + {a}) - gamma(base).
Ratio significance(const DecisionTable& table, AttrId a, const std::vector<AttrId>& base);

// True iff attrs preserves the full positive region and every member is
// necessary for that (removing any single one strictly shrinks the region).
bool is_reduct(const DecisionTable& table, const std::vector<AttrId>& attrs);

// Forward greedy selection by significance, then a backward pruning pass so
// the result is irreducible. Ties are broken by attribute name.
ReductResult greedy_reduct(const DecisionTable& table);

// Enumerates condition subsets in size order (lexicographic within a size)
// and returns the first one preserving the positive region. Refuses tables
// with more than cap condition attributes.
ReductResult exhaustive_min_reduct(const DecisionTable& table, int cap = 16);

// Certainty of the decision rule read off object x under attrs:
// |[x]_attrs intersect [x]_D| / |[x]_attrs|.
Ratio rule_certainty(const DecisionTable& table, ObjectId x, const std::vector<AttrId>& attrs);

}  // namespace rsabl
