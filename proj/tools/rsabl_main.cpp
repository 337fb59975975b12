#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsabl/abl.hpp"
#include "rsabl/rule_text.hpp"
#include "rsabl/synth.hpp"

namespace {

using namespace rsabl;

int exhaustive_cap() {
    if (const char* env = std::getenv("RSABL_EXHAUSTIVE_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw ConfigError("RSABL_EXHAUSTIVE_CAP is not an integer");
        }
    }
    return 16;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write file: " + path.string());
    }
    out << content;
}

LabeledBatch table_batch(const DecisionTable& table, BatchOrigin origin) {
    LabeledBatch batch;
    batch.schema = table.schema();
    batch.origin = origin;
    for (int x = 0; x < table.num_objects(); ++x) {
        std::vector<std::string> row;
        for (int a = 0; a < table.num_condition_attrs(); ++a) row.push_back(table.token(x, a));
        batch.rows.push_back(std::move(row));
        batch.labels.push_back(table.token(x, table.decision_attr()));
    }
    return batch;
}

struct ReductArgs {
    std::string table_path;
    std::string decision = "d";
    std::string method = "greedy";
};

void run_reduct(const ReductArgs& args) {
    const DecisionTable table = DecisionTable::load_csv(args.table_path, args.decision);
    ReductResult result;
    if (args.method == "greedy") {
        result = greedy_reduct(table);
    } else if (args.method == "exhaustive") {
        result = exhaustive_min_reduct(table, exhaustive_cap());
    } else {
        throw ConfigError("unknown method '" + args.method + "'");
    }
    std::cout << "method: " << (result.method == ReductMethod::Greedy ? "greedy" : "exhaustive")
              << "\n";
    std::cout << "reduct:";
    for (AttrId a : result.attrs) std::cout << ' ' << table.attr_name(a);
    std::cout << "\n";
    std::cout << "gamma_full: " << format_ratio(result.gamma_full) << "\n";
    std::cout << "gamma_reduct: " << format_ratio(result.gamma_reduct) << "\n";
}

struct RulesArgs {
    std::string table_path;
    std::string decision = "d";
    bool negative = false;
    double min_cer = 1.0;
};

void run_rules(const RulesArgs& args) {
    const DecisionTable table = DecisionTable::load_csv(args.table_path, args.decision);
    std::vector<Rule> rules = generate_rules(table, args.negative, args.min_cer);
    std::sort(rules.begin(), rules.end(), [](const Rule& lhs, const Rule& rhs) {
        if (lhs.consequent != rhs.consequent) return lhs.consequent < rhs.consequent;
        return lhs.antecedent < rhs.antecedent;
    });
    std::cout << format_rules(rules);
}

struct SynthArgs {
    SynthParams params;
    std::string out_dir = ".";
};

void run_synth(const SynthArgs& args) {
    const SynthData data = make_synth(args.params);
    const std::filesystem::path dir(args.out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "labeled.csv", batch_csv(data.labeled));
    write_file(dir / "unlabeled.csv", rows_csv(data.schema, data.unlabeled));
    write_file(dir / "test.csv", batch_csv(data.test));
    std::cout << "labeled: " << data.labeled.size() << "\n";
    std::cout << "unlabeled: " << data.unlabeled.size() << "\n";
    std::cout << "test: " << data.test.size() << "\n";
}

struct AblArgs {
    std::string labeled_path;
    std::string unlabeled_path;
    std::string test_path;
    std::string table_path;
    double label_fraction = 0.1;
    std::string kb_path;
    std::string decision = "d";
    std::string out_dir = ".";
    AblConfig config;
};

// Deterministic split of a single table into test (1/5), labeled and
// unlabeled parts, mirroring the synthetic generator's proportions.
void split_table(const DecisionTable& table, double label_fraction, std::uint64_t seed,
                 LabeledBatch& labeled, std::vector<std::vector<std::string>>& unlabeled,
                 LabeledBatch& test) {
    if (label_fraction <= 0.0 || label_fraction > 1.0) {
        throw ConfigError("label_fraction must lie in (0, 1]");
    }
    const LabeledBatch all = table_batch(table, BatchOrigin::Labeled);
    const int n = static_cast<int>(all.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    const int test_n = n / 5;
    const int train_n = n - test_n;
    if (train_n < 1) {
        throw ConfigError("table too small to split");
    }
    int labeled_n = static_cast<int>(std::llround(label_fraction * train_n));
    labeled_n = std::clamp(labeled_n, 1, train_n);

    labeled.schema = all.schema;
    labeled.origin = BatchOrigin::Labeled;
    test.schema = all.schema;
    test.origin = BatchOrigin::Labeled;
    for (int i = 0; i < n; ++i) {
        const std::size_t src = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
        if (i < test_n) {
            test.rows.push_back(all.rows[src]);
            test.labels.push_back(all.labels[src]);
        } else if (i < test_n + labeled_n) {
            labeled.rows.push_back(all.rows[src]);
            labeled.labels.push_back(all.labels[src]);
        } else {
            unlabeled.push_back(all.rows[src]);
        }
    }
}

void run_abl_cmd(const AblArgs& args) {
    LabeledBatch labeled;
    std::vector<std::vector<std::string>> unlabeled;
    LabeledBatch test;
    bool have_test = false;

    if (!args.table_path.empty()) {
        if (!args.labeled_path.empty() || !args.unlabeled_path.empty() || !args.test_path.empty()) {
            throw ConfigError("--table excludes --labeled/--unlabeled/--test");
        }
        const DecisionTable table = DecisionTable::load_csv(args.table_path, args.decision);
        split_table(table, args.label_fraction, args.config.seed, labeled, unlabeled, test);
        have_test = !test.rows.empty();
    } else {
        if (args.labeled_path.empty()) {
            throw ConfigError("either --table or --labeled is required");
        }
        labeled = table_batch(DecisionTable::load_csv(args.labeled_path, args.decision),
                              BatchOrigin::Labeled);
        if (!args.unlabeled_path.empty()) {
            std::ifstream in(args.unlabeled_path, std::ios::binary);
            if (!in) {
                throw ParseError("cannot open file: " + args.unlabeled_path);
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            auto [header, rows] = parse_rows_csv(buf.str());
            if (header != labeled.schema.condition_names) {
                throw SchemaError("unlabeled columns do not match the labeled schema");
            }
            unlabeled = std::move(rows);
        }
        if (!args.test_path.empty()) {
            test = table_batch(DecisionTable::load_csv(args.test_path, args.decision),
                               BatchOrigin::Labeled);
            if (test.schema != labeled.schema) {
                throw SchemaError("test columns do not match the labeled schema");
            }
            have_test = true;
        }
    }

    KnowledgeBase kb;
    kb.cer_threshold = args.config.cer_threshold;
    if (!args.kb_path.empty()) {
        kb.rules = load_rules(args.kb_path);
    }

    const LabeledBatch& eval = have_test ? test : labeled;

    BuiltinLearner baseline(args.config.seed);
    baseline.fit(labeled);
    const double top1_baseline = baseline.accuracy(eval);

    BuiltinLearner learner(args.config.seed);
    const AblOutcome outcome =
        run_abl(labeled, unlabeled, kb, args.config, learner, have_test ? &test : nullptr);

    const std::filesystem::path dir(args.out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "metrics.jsonl", metrics_jsonl(outcome.history));
    write_file(dir / "kb.rules", format_rules(outcome.kb.rules));

    nlohmann::ordered_json summary;
    summary["top1_final"] = outcome.history.back().top1;
    summary["top1_baseline"] = top1_baseline;
    summary["rule_count_final"] = outcome.history.back().rule_count;
    write_file(dir / "summary.json", summary.dump(2) + "\n");

    std::cout << summary.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rough-set rule induction and abductive semi-supervised training"};
    app.require_subcommand(1);

    ReductArgs reduct_args;
    CLI::App* reduct = app.add_subcommand("reduct", "Find an attribute reduct of a table");
    reduct->add_option("--table", reduct_args.table_path, "Decision table CSV")->required();
    reduct->add_option("--decision", reduct_args.decision, "Decision column name");
    reduct->add_option("--method", reduct_args.method, "greedy|exhaustive")
        ->check(CLI::IsMember({"greedy", "exhaustive"}));

    RulesArgs rules_args;
    CLI::App* rules = app.add_subcommand("rules", "Induce rules from a table");
    rules->add_option("--table", rules_args.table_path, "Decision table CSV")->required();
    rules->add_option("--decision", rules_args.decision, "Decision column name");
    rules->add_flag("--negative", rules_args.negative, "Also derive negated-consequent rules");
    rules->add_option("--min-cer", rules_args.min_cer, "Certainty threshold for emitted rules")
        ->check(CLI::Range(0.0, 1.0));

    SynthArgs synth_args;
    CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic dataset");
    synth->add_option("--classes", synth_args.params.classes, "Number of classes");
    synth->add_option("--attrs", synth_args.params.attrs, "Number of attributes");
    synth->add_option("--values", synth_args.params.values, "Domain size per attribute")
        ->check(CLI::Range(2, 64));
    synth->add_option("--rows", synth_args.params.rows, "Total rows before splitting");
    synth->add_option("--noise", synth_args.params.noise, "Per-cell flip probability");
    synth->add_option("--label-fraction", synth_args.params.label_fraction,
                      "Labeled share of the training split");
    synth->add_option("--test-fraction", synth_args.params.test_fraction,
                      "Held-out share of all rows");
    synth->add_option("--seed", synth_args.params.seed, "RNG seed");
    synth->add_option("--out", synth_args.out_dir, "Output directory");

    AblArgs abl_args;
    CLI::App* abl = app.add_subcommand("abl", "Run the abductive training loop");
    abl->add_option("--labeled", abl_args.labeled_path, "Labeled table CSV");
    abl->add_option("--unlabeled", abl_args.unlabeled_path, "Unlabeled rows CSV");
    abl->add_option("--test", abl_args.test_path, "Held-out table CSV");
    abl->add_option("--table", abl_args.table_path, "Single table to split automatically");
    abl->add_option("--label-fraction", abl_args.label_fraction,
                    "Labeled share in auto-split mode");
    abl->add_option("--kb", abl_args.kb_path, "Seed rule file");
    abl->add_option("--decision", abl_args.decision, "Decision column name");
    abl->add_option("--epochs", abl_args.config.epochs, "Training epochs");
    abl->add_option("--theta", abl_args.config.theta, "Early-stopping threshold");
    abl->add_option("--seed", abl_args.config.seed, "RNG seed");
    abl->add_option("--cer-threshold", abl_args.config.cer_threshold,
                    "Certainty threshold for rule correction");
    double min_cer_flag = -1.0;
    abl->add_option("--min-cer", min_cer_flag, "Certainty threshold for generated rules");
    abl->add_option("--out", abl_args.out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*reduct) {
            run_reduct(reduct_args);
        } else if (*rules) {
            run_rules(rules_args);
        } else if (*synth) {
            run_synth(synth_args);
        } else if (*abl) {
            if (min_cer_flag >= 0.0) abl_args.config.min_cer = min_cer_flag;
            run_abl_cmd(abl_args);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
