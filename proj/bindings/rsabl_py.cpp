#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>

#include "rsabl/abl.hpp"
#include "rsabl/rough.hpp"
#include "rsabl/rule_text.hpp"
#include "rsabl/synth.hpp"

namespace py = pybind11;
using namespace rsabl;

PYBIND11_MODULE(_rsabl, m) {
    m.doc() = "Rough-set rule induction and abductive semi-supervised training";

    const auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<UnknownAttribute>(m, "UnknownAttribute", base.ptr());
    py::register_exception<UnknownObject>(m, "UnknownObject", base.ptr());
    py::register_exception<AttributeAlreadyInBase>(m, "AttributeAlreadyInBase", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<LengthMismatch>(m, "LengthMismatch", base.ptr());
    py::register_exception<EmptyBatch>(m, "EmptyBatch", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    py::enum_<Provenance>(m, "Provenance")
        .value("SEEDED", Provenance::Seeded)
        .value("GENERATED", Provenance::Generated)
        .value("CORRECTED", Provenance::Corrected);

    py::enum_<BatchOrigin>(m, "BatchOrigin")
        .value("LABELED", BatchOrigin::Labeled)
        .value("PSEUDO", BatchOrigin::Pseudo)
        .value("REVISED", BatchOrigin::Revised);

    py::enum_<ReductMethod>(m, "ReductMethod")
        .value("GREEDY", ReductMethod::Greedy)
        .value("EXHAUSTIVE", ReductMethod::Exhaustive);

    py::class_<Schema>(m, "Schema")
        .def(py::init<>())
        .def(py::init([](std::vector<std::string> condition_names, std::string decision_name) {
            Schema s;
            s.condition_names = std::move(condition_names);
            s.decision_name = std::move(decision_name);
            return s;
        }), py::arg("condition_names"), py::arg("decision_name"))
        .def_readwrite("condition_names", &Schema::condition_names)
        .def_readwrite("decision_name", &Schema::decision_name)
        .def(py::self == py::self);

    py::class_<DecisionTable>(m, "DecisionTable")
        .def_static("parse_csv", &DecisionTable::parse_csv, py::arg("text"),
                    py::arg("decision_column"))
        .def_static("load_csv",
                    [](const std::string& path, const std::string& decision_column) {
                        return DecisionTable::load_csv(path, decision_column);
                    },
                    py::arg("path"), py::arg("decision_column"))
        .def_static("from_rows", &DecisionTable::from_rows, py::arg("schema"), py::arg("rows"),
                    py::arg("labels"))
        .def("num_objects", &DecisionTable::num_objects)
        .def("num_condition_attrs", &DecisionTable::num_condition_attrs)
        .def("decision_attr", &DecisionTable::decision_attr)
        .def("schema", &DecisionTable::schema, py::return_value_policy::copy)
        .def("attr_name", &DecisionTable::attr_name, py::return_value_policy::copy)
        .def("attr_id", &DecisionTable::attr_id)
        .def("condition_ids", &DecisionTable::condition_ids)
        .def("domain", &DecisionTable::domain, py::return_value_policy::copy)
        .def("code", &DecisionTable::code)
        .def("token", &DecisionTable::token, py::return_value_policy::copy)
        .def("universe", &DecisionTable::universe)
        .def("decision_classes", &DecisionTable::decision_classes)
        .def("to_csv", &DecisionTable::to_csv)
        .def(py::self == py::self);

    py::class_<Partition>(m, "Partition")
        .def_readonly("blocks", &Partition::blocks)
        .def_readonly("source_attrs", &Partition::source_attrs)
        .def_readonly("block_of", &Partition::block_of);

    m.def("make_partition", &make_partition, py::arg("table"), py::arg("attrs"));
    m.def("attr_ids", &attr_ids, py::arg("table"), py::arg("names"));

    py::class_<RegionReport>(m, "RegionReport")
        .def_readonly("pos", &RegionReport::pos)
        .def_readonly("neg", &RegionReport::neg)
        .def_readonly("bnd", &RegionReport::bnd)
        .def_readonly("target", &RegionReport::target)
        .def_readonly("attrs", &RegionReport::attrs);

    py::class_<ReductResult>(m, "ReductResult")
        .def_readonly("attrs", &ReductResult::attrs)
        .def_readonly("method", &ReductResult::method)
        .def_property_readonly("gamma_full",
                               [](const ReductResult& r) { return to_double(r.gamma_full); })
        .def_property_readonly("gamma_reduct",
                               [](const ReductResult& r) { return to_double(r.gamma_reduct); });

    m.def("lower_approx", &lower_approx, py::arg("table"), py::arg("attrs"), py::arg("target"));
    m.def("upper_approx", &upper_approx, py::arg("table"), py::arg("attrs"), py::arg("target"));
    m.def("regions", &regions, py::arg("table"), py::arg("attrs"), py::arg("target"));
    m.def("decision_positive_region", &decision_positive_region, py::arg("table"),
          py::arg("attrs"));
    m.def("gamma", [](const DecisionTable& t, const std::vector<AttrId>& attrs) {
              return to_double(gamma(t, attrs));
          },
          py::arg("table"), py::arg("attrs"));
    m.def("significance", [](const DecisionTable& t, AttrId a, const std::vector<AttrId>& b) {
              return to_double(significance(t, a, b));
          },
          py::arg("table"), py::arg("attr"), py::arg("base"));
    m.def("is_reduct", &is_reduct, py::arg("table"), py::arg("attrs"));
    m.def("greedy_reduct", &greedy_reduct, py::arg("table"));
    m.def("exhaustive_min_reduct", &exhaustive_min_reduct, py::arg("table"), py::arg("cap") = 16);
    m.def("rule_certainty", [](const DecisionTable& t, ObjectId x,
                               const std::vector<AttrId>& attrs) {
              return to_double(rule_certainty(t, x, attrs));
          },
          py::arg("table"), py::arg("object"), py::arg("attrs"));

    py::class_<Descriptor>(m, "Descriptor")
        .def(py::init<>())
        .def(py::init([](std::string attr, std::string value, bool negated) {
            Descriptor d;
            d.attr = std::move(attr);
            d.value = std::move(value);
            d.negated = negated;
            return d;
        }), py::arg("attr"), py::arg("value"), py::arg("negated") = false)
        .def_readwrite("attr", &Descriptor::attr)
        .def_readwrite("value", &Descriptor::value)
        .def_readwrite("negated", &Descriptor::negated)
        .def(py::self == py::self)
        .def("__repr__", &format_descriptor);

    py::class_<Rule>(m, "Rule")
        .def(py::init<>())
        .def_readwrite("antecedent", &Rule::antecedent)
        .def_readwrite("consequent", &Rule::consequent)
        .def_property_readonly("certainty", [](const Rule& r) { return to_double(r.certainty); })
        .def_readwrite("support_count", &Rule::support_count)
        .def_readwrite("provenance", &Rule::provenance)
        .def("same_shape", &Rule::same_shape)
        .def(py::self == py::self)
        .def("__str__", &format_rule)
        .def("__repr__", &format_rule);

    py::class_<KnowledgeBase>(m, "KnowledgeBase")
        .def(py::init<>())
        .def_readwrite("rules", &KnowledgeBase::rules)
        .def_readwrite("cer_threshold", &KnowledgeBase::cer_threshold)
        .def_readwrite("version", &KnowledgeBase::version)
        .def("same_rules", &KnowledgeBase::same_rules);

    m.def("support_set", &support_set, py::arg("table"), py::arg("descriptor"));
    m.def("evaluate_rule", [](const DecisionTable& t, const Rule& r) {
              const auto [cer, support] = evaluate_rule(t, r);
              return std::make_pair(to_double(cer), support);
          },
          py::arg("table"), py::arg("rule"));
    m.def("correct_rules", &correct_rules, py::arg("table"), py::arg("kb"));
    m.def("reduce_rule", &reduce_rule, py::arg("table"), py::arg("rule"));
    m.def("generate_rules", &generate_rules, py::arg("table"), py::arg("negative"),
          py::arg("min_cer"));
    m.def("merge_kb", &merge_kb, py::arg("kb"), py::arg("new_rules"));

    m.def("parse_rules", &parse_rules, py::arg("text"));
    m.def("load_rules",
          [](const std::string& path) { return load_rules(std::filesystem::path(path)); },
          py::arg("path"));
    m.def("format_descriptor", &format_descriptor, py::arg("descriptor"));
    m.def("format_rule", &format_rule, py::arg("rule"));
    m.def("format_rules", &format_rules, py::arg("rules"));

    py::class_<LabeledBatch>(m, "LabeledBatch")
        .def(py::init<>())
        .def_readwrite("schema", &LabeledBatch::schema)
        .def_readwrite("rows", &LabeledBatch::rows)
        .def_readwrite("labels", &LabeledBatch::labels)
        .def_readwrite("origin", &LabeledBatch::origin)
        .def("__len__", &LabeledBatch::size);

    m.def("violation_count", &violation_count, py::arg("batch"), py::arg("kb"));
    m.def("consistency_score", [](const std::vector<std::string>& a,
                                  const std::vector<std::string>& b) {
              return to_double(consistency_score(a, b));
          },
          py::arg("a"), py::arg("b"));
    m.def("abduce", &abduce, py::arg("batch"), py::arg("kb"), py::arg("scores"));
    m.def("batch_table", &batch_table, py::arg("batch"));

    py::class_<FrequencyModel>(m, "FrequencyModel")
        .def_static("train", &FrequencyModel::train, py::arg("batch"), py::arg("seed"))
        .def("predict", &FrequencyModel::predict, py::arg("rows"))
        .def("labels", &FrequencyModel::labels, py::return_value_policy::copy)
        .def(py::self == py::self);

    py::class_<Learner>(m, "Learner")
        .def("predict_labels", &Learner::predict_labels, py::arg("rows"))
        .def("accuracy", &Learner::accuracy, py::arg("batch"));

    py::class_<BuiltinLearner, Learner>(m, "BuiltinLearner")
        .def(py::init<std::uint64_t>(), py::arg("seed") = 0)
        .def("fit", &BuiltinLearner::fit, py::arg("batch"))
        .def("predict", &BuiltinLearner::predict, py::arg("rows"))
        .def("model", &BuiltinLearner::model, py::return_value_policy::copy);

    py::class_<AblConfig>(m, "AblConfig")
        .def(py::init<>())
        .def_readwrite("epochs", &AblConfig::epochs)
        .def_readwrite("theta", &AblConfig::theta)
        .def_readwrite("seed", &AblConfig::seed)
        .def_readwrite("cer_threshold", &AblConfig::cer_threshold)
        .def_readwrite("min_cer", &AblConfig::min_cer)
        .def("effective_min_cer", &AblConfig::effective_min_cer);

    py::class_<EpochRecord>(m, "EpochRecord")
        .def_readonly("epoch", &EpochRecord::epoch)
        .def_readonly("top1", &EpochRecord::top1)
        .def_readonly("eq6_con_labeled", &EpochRecord::eq6_con_labeled)
        .def_readonly("eq6_con_revised", &EpochRecord::eq6_con_revised)
        .def_readonly("eq6_notcon", &EpochRecord::eq6_notcon)
        .def_readonly("rule_count", &EpochRecord::rule_count)
        .def_readonly("theta_score", &EpochRecord::theta_score)
        .def_readonly("violations", &EpochRecord::violations)
        .def_readonly("labels_changed", &EpochRecord::labels_changed);

    py::class_<AblOutcome>(m, "AblOutcome")
        .def_readonly("kb", &AblOutcome::kb)
        .def_readonly("history", &AblOutcome::history);

    m.def("rule_processor", &rule_processor, py::arg("batch"), py::arg("kb"),
          py::arg("min_cer") = std::nullopt);
    m.def("stopping_score", &stopping_score, py::arg("labeled"), py::arg("unlabeled"),
          py::arg("learner"), py::arg("kb"));
    m.def("run_abl",
          [](const LabeledBatch& labeled, const std::vector<std::vector<std::string>>& unlabeled,
             const KnowledgeBase& kb, const AblConfig& config, Learner& learner,
             std::optional<LabeledBatch> heldout) {
              return run_abl(labeled, unlabeled, kb, config, learner,
                             heldout ? &*heldout : nullptr);
          },
          py::arg("labeled"), py::arg("unlabeled"), py::arg("kb"), py::arg("config"),
          py::arg("learner"), py::arg("heldout") = std::nullopt);
    m.def("metrics_jsonl", &metrics_jsonl, py::arg("history"));

    py::class_<SynthParams>(m, "SynthParams")
        .def(py::init<>())
        .def_readwrite("classes", &SynthParams::classes)
        .def_readwrite("attrs", &SynthParams::attrs)
        .def_readwrite("values", &SynthParams::values)
        .def_readwrite("rows", &SynthParams::rows)
        .def_readwrite("noise", &SynthParams::noise)
        .def_readwrite("label_fraction", &SynthParams::label_fraction)
        .def_readwrite("test_fraction", &SynthParams::test_fraction)
        .def_readwrite("seed", &SynthParams::seed);

    py::class_<SynthData>(m, "SynthData")
        .def_readonly("schema", &SynthData::schema)
        .def_readonly("labeled", &SynthData::labeled)
        .def_readonly("unlabeled", &SynthData::unlabeled)
        .def_readonly("unlabeled_truth", &SynthData::unlabeled_truth)
        .def_readonly("test", &SynthData::test)
        .def_readonly("signatures", &SynthData::signatures);

    m.def("make_synth", &make_synth, py::arg("params"));
    m.def("batch_csv", &batch_csv, py::arg("batch"));
    m.def("rows_csv", &rows_csv, py::arg("schema"), py::arg("rows"));
    m.def("parse_rows_csv", &parse_rows_csv, py::arg("text"));
}
