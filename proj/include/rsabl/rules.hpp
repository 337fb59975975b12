#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsabl/ratio.hpp"
#include "rsabl/rough.hpp"
#include "rsabl/table.hpp"

namespace rsabl {

enum class Provenance { Seeded, Generated, Corrected };

// A single-attribute test. Positive polarity reads f(x,attr) == value;
// negative polarity reads f(x,attr) is known and differs from value. An
// empty attr names the decision attribute (consequents written as bare
// decision values).
struct Descriptor {
    std::string attr;
    std::string value;
    bool negated = false;

    auto operator<=>(const Descriptor&) const = default;
};

// Descriptor conjunction -> decision literal. Antecedent descriptors are
// kept sorted and name pairwise distinct attributes. certainty and
// support_count reflect the table the rule was last evaluated on.
struct Rule {
    std::vector<Descriptor> antecedent;
    Descriptor consequent;
    Ratio certainty{0};
    long long support_count = 0;
    Provenance provenance = Provenance::Seeded;

    // Antecedent + consequent equality, ignoring evaluation state.
    bool same_shape(const Rule& other) const {
        return antecedent == other.antecedent && consequent == other.consequent;
    }
    bool operator==(const Rule&) const = default;
};

struct KnowledgeBase {
    std::vector<Rule> rules;
    double cer_threshold = 0.8;
    std::uint64_t version = 0;

    // Content equality; version is lineage, not content.
    bool same_rules(const KnowledgeBase& other) const {
        return rules == other.rules && cer_threshold == other.cer_threshold;
    }
};

// Objects matched by one descriptor. Missing cells satisfy no descriptor of
// either polarity.
ObjectSet support_set(const DecisionTable& table, const Descriptor& desc);

// (certainty, support): support is the antecedent support size, certainty
// the fraction of it that also satisfies the consequent. Empty antecedent
// support yields (0, 0).
std::pair<Ratio, long long> evaluate_rule(const DecisionTable& table, const Rule& rule);

// Re-evaluates every rule on the table, deletes those whose certainty falls
// below the knowledge base threshold and refreshes the survivors. The
// version is bumped iff anything changed.
KnowledgeBase correct_rules(const DecisionTable& table, const KnowledgeBase& kb);

// Greedily drops antecedent descriptors (in lexicographic order) whose
// removal does not decrease certainty and does not decrease support below
// the input rule's; the result admits no further drop.
Rule reduce_rule(const DecisionTable& table, const Rule& rule);

// Induces rules from the table: per decision class, a greedily selected and
// pruned attribute set whose class-restricted positive region matches the
// full condition set's, then one rule per block of that partition meeting
// min_cer. With negative set, additionally derives rules with negated
// consequents from negative descriptor conjunctions. Every emitted rule is
// passed through reduce_rule and duplicates are removed.
std::vector<Rule> generate_rules(const DecisionTable& table, bool negative, double min_cer);

// Union with duplicate elimination: an incoming rule with the same
// antecedent and consequent as an existing one keeps whichever copy has the
// higher support. Version bumped iff the content changed.
KnowledgeBase merge_kb(const KnowledgeBase& kb, const std::vector<Rule>& new_rules);

}  // namespace rsabl
