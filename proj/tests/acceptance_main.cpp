// Gate binary: each check prints one PASS/FAIL line and the process exits
// nonzero if anything failed. Time bounds are part of the pass condition.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gen.hpp"
#include "oracle.hpp"
#include "rsabl/abl.hpp"
#include "rsabl/rough.hpp"
#include "rsabl/rule_text.hpp"
#include "rsabl/synth.hpp"

using namespace rsabl;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

bool report(const char* name, double bound_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ok = outcome.ok && elapsed < bound_s;
    std::printf("%s  %s  (%s; %.2fs, bound %.0fs)\n", ok ? "PASS" : "FAIL", name,
                outcome.detail.c_str(), elapsed, bound_s);
    return ok;
}

std::string count_detail(const char* what, long n) {
    std::ostringstream out;
    out << n << " " << what;
    return out.str();
}

Outcome check_approximations() {
    std::mt19937_64 rng(101);
    long comparisons = 0;
    for (int i = 0; i < 200; ++i) {
        const DecisionTable t = gen::table(rng);
        const std::vector<AttrId> cond = t.condition_ids();
        const std::vector<AttrId> sub = gen::attr_subset(rng, t);
        for (const std::vector<ObjectId>& members : t.decision_classes()) {
            const ObjectSet target(members.begin(), members.end());
            for (const std::vector<AttrId>& attrs : {cond, sub}) {
                if (lower_approx(t, attrs, target) != oracle::lower(t, attrs, target))
                    return {false, "lower approximation mismatch"};
                if (upper_approx(t, attrs, target) != oracle::upper(t, attrs, target))
                    return {false, "upper approximation mismatch"};
                const RegionReport r = regions(t, attrs, target);
                const ObjectSet lo = oracle::lower(t, attrs, target);
                const ObjectSet up = oracle::upper(t, attrs, target);
                ObjectSet bnd;
                std::set_difference(up.begin(), up.end(), lo.begin(), lo.end(),
                                    std::back_inserter(bnd));
                if (r.pos != lo || r.neg != oracle::complement(t, up) || r.bnd != bnd)
                    return {false, "region mismatch"};
                comparisons += 3;
            }
        }
        if (gamma(t, cond) != oracle::gamma(t, cond) || gamma(t, sub) != oracle::gamma(t, sub))
            return {false, "gamma mismatch"};
        const ObjectId x = static_cast<ObjectId>(gen::pick(rng, t.num_objects()));
        if (rule_certainty(t, x, cond) != oracle::certainty(t, x, cond))
            return {false, "certainty mismatch"};
        comparisons += 3;
    }
    return {true, count_detail("exact comparisons over 200 tables", comparisons)};
}

Outcome check_reducts() {
    std::mt19937_64 rng(102);
    for (int i = 0; i < 200; ++i) {
        const DecisionTable t = gen::table(rng);
        const ReductResult g = greedy_reduct(t);
        if (!oracle::is_reduct(t, g.attrs)) return {false, "greedy result is not a reduct"};
        const ReductResult e = exhaustive_min_reduct(t);
        if (!oracle::is_reduct(t, e.attrs)) return {false, "exhaustive result is not a reduct"};
        if (e.attrs.size() != oracle::min_preserving_size(t))
            return {false, "exhaustive result is not minimum"};
        if (g.attrs.size() < e.attrs.size()) return {false, "greedy smaller than minimum"};
    }
    const DecisionTable demo = fixtures::consistent_animals();
    if (greedy_reduct(demo).attrs.size() != 2 || exhaustive_min_reduct(demo).attrs.size() != 2)
        return {false, "demo table reduct size is not 2"};
    return {true, "200 tables, both methods, plus the demo table"};
}

Outcome check_duality() {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 1000; ++i) {
        const DecisionTable t = gen::table(rng);
        const std::vector<AttrId> attrs = gen::attr_subset(rng, t);
        const ObjectSet x = gen::object_subset(rng, t.num_objects());
        const ObjectSet co_x = oracle::complement(t, x);
        if (lower_approx(t, attrs, x) != oracle::complement(t, upper_approx(t, attrs, co_x)))
            return {false, "duality violated"};
        const RegionReport r = regions(t, attrs, x);
        std::vector<ObjectId> all;
        all.insert(all.end(), r.pos.begin(), r.pos.end());
        all.insert(all.end(), r.bnd.begin(), r.bnd.end());
        all.insert(all.end(), r.neg.begin(), r.neg.end());
        std::sort(all.begin(), all.end());
        if (all != t.universe()) return {false, "regions do not partition the universe"};
    }
    return {true, "1000 random set/attribute pairs"};
}

Outcome check_seeded_processing() {
    const LabeledBatch batch = fixtures::to_batch(fixtures::consistent_animals());
    KnowledgeBase kb;
    kb.cer_threshold = 0.8;
    kb.rules = parse_rules("!bat <- !flys\n!bat <- !flys & !swims\nbat <- !flys\n");
    const KnowledgeBase out = rule_processor(batch, kb);

    const Rule kept = parse_rules("!bat <- !flys")[0];
    const Rule longer = parse_rules("!bat <- !flys & !swims")[0];
    const Rule contradiction = parse_rules("bat <- !flys")[0];
    int kept_count = 0;
    bool longer_survives = false;
    bool contradiction_survives = false;
    bool fresh_negative = false;
    for (const Rule& r : out.rules) {
        if (r.same_shape(kept)) ++kept_count;
        if (r.same_shape(longer)) longer_survives = true;
        if (r.same_shape(contradiction)) contradiction_survives = true;
        if (r.provenance == Provenance::Generated && r.consequent.negated &&
            r.certainty == Ratio(1)) {
            fresh_negative = true;
        }
    }
    if (contradiction_survives) return {false, "zero-certainty seed survived"};
    if (kept_count != 1 || longer_survives) return {false, "longer seed did not reduce away"};
    if (!fresh_negative) return {false, "no new negative rule with certainty 1"};
    return {true, "3 seed rules: one deleted, one reduced, new negatives added"};
}

Outcome check_fixpoint() {
    const LabeledBatch demo = fixtures::to_batch(fixtures::consistent_animals());
    KnowledgeBase kb;
    kb.cer_threshold = 0.8;
    kb.rules = parse_rules("!bat <- !flys\n!bat <- !flys & !swims\nbat <- !flys\n");
    const KnowledgeBase once = rule_processor(demo, kb);
    const KnowledgeBase twice = rule_processor(demo, once);
    if (!twice.same_rules(once) || twice.version != once.version)
        return {false, "second application changed the base"};

    SynthParams p;
    p.classes = 3;
    p.attrs = 5;
    p.values = 3;
    p.rows = 120;
    p.noise = 0.05;
    p.label_fraction = 0.2;
    p.test_fraction = 0.5;
    p.seed = 7;
    const SynthData data = make_synth(p);

    AblConfig cfg;
    cfg.epochs = 12;
    cfg.theta = 1.0;
    cfg.seed = 7;
    BuiltinLearner learner(cfg.seed);
    const AblOutcome run = run_abl(data.labeled, data.unlabeled, KnowledgeBase{}, cfg, learner);
    std::size_t settled = 0;
    for (std::size_t i = 1; i < run.history.size(); ++i) {
        if (!run.history[i].labels_changed) {
            settled = i;
            break;
        }
    }
    if (settled == 0) return {false, "revised labels never repeated"};
    for (std::size_t j = settled; j < run.history.size(); ++j) {
        if (run.history[j].labels_changed) return {false, "labels changed after settling"};
        if (run.history[j].rule_count != run.history[settled].rule_count)
            return {false, "rule count moved after labels settled"};
    }
    return {true, count_detail("stable epochs after settling",
                               static_cast<long>(run.history.size() - settled))};
}

Outcome check_training_gain() {
    double gain_sum = 0.0;
    double gap_sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SynthParams p;
        p.classes = 10;
        p.attrs = 11;
        p.values = 4;
        p.rows = 2000;
        p.noise = 0.1;
        p.label_fraction = 0.1;
        p.test_fraction = 0.9;
        p.seed = seed;
        const SynthData data = make_synth(p);

        AblConfig cfg;
        cfg.epochs = 15;
        cfg.theta = 0.95;
        cfg.seed = seed;
        cfg.cer_threshold = 1.0;

        BuiltinLearner baseline(seed);
        baseline.fit(data.labeled);
        BuiltinLearner learner(seed);
        const AblOutcome run =
            run_abl(data.labeled, data.unlabeled, KnowledgeBase{}, cfg, learner, &data.test);
        gain_sum += run.history.back().top1 - baseline.accuracy(data.test);

        SynthParams full = p;
        full.label_fraction = 1.0;
        const SynthData ceiling = make_synth(full);
        BuiltinLearner full_baseline(seed);
        full_baseline.fit(ceiling.labeled);
        BuiltinLearner full_learner(seed);
        const AblOutcome full_run = run_abl(ceiling.labeled, ceiling.unlabeled, KnowledgeBase{},
                                            cfg, full_learner, &ceiling.test);
        gap_sum += full_run.history.back().top1 - full_baseline.accuracy(ceiling.test);
    }
    const double mean_gain = gain_sum / 5.0;
    const double mean_gap = gap_sum / 5.0;
    std::ostringstream detail;
    detail << "mean gain " << mean_gain << ", fully-labeled gap " << mean_gap;
    if (mean_gain < 0.05) return {false, detail.str()};
    if (std::abs(mean_gap) > 0.02) return {false, detail.str()};
    return {true, detail.str()};
}

Outcome check_revision_contracts() {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 500; ++i) {
        const LabeledBatch batch = gen::batch(rng);
        const KnowledgeBase kb = gen::kb(rng, batch.schema);
        const std::vector<ScoreMap> scores = gen::scores(rng, batch.rows.size());

        const LabeledBatch revised = abduce(batch, kb, scores);
        if (revised.rows != batch.rows) return {false, "rows were edited"};
        if (violation_count(revised, kb) > violation_count(batch, kb))
            return {false, "violations increased"};
        const LabeledBatch again = abduce(revised, kb, scores);
        if (again.labels != revised.labels) return {false, "revision is not idempotent"};
        const LabeledBatch untouched = abduce(batch, KnowledgeBase{}, scores);
        if (untouched.labels != batch.labels || untouched.rows != batch.rows)
            return {false, "empty base changed the batch"};
    }
    return {true, "500 random batches"};
}

}  // namespace

int main() {
    bool all = true;
    all &= report("approximations, regions, gamma and certainty match the brute-force oracle",
                  10.0, check_approximations);
    all &= report("reduct search is verified against the oracle", 30.0, check_reducts);
    all &= report("duality and the region partition hold", 5.0, check_duality);
    all &= report("a seeded knowledge base is corrected, reduced and enriched", 1.0,
                  check_seeded_processing);
    all &= report("the rule processor reaches a fixpoint and the rule count stabilizes", 60.0,
                  check_fixpoint);
    all &= report("semi-supervised training beats the labeled-only baseline", 120.0,
                  check_training_gain);
    all &= report("label revision contracts hold", 5.0, check_revision_contracts);
    return all ? 0 : 1;
}
