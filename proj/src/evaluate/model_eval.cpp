#include "fcgen/evaluate/model_eval.hpp"

#include <fstream>

#include "fcgen/core/error.hpp"
#include "fcgen/metrics/stats.hpp"
#include "fcgen/providers/catalog.hpp"

namespace fcgen {

EquivalenceVerdict judge_tool_call_equivalence(const std::string& query, const Json& schema,
                                               const Json& ground_truth_call, const Json& predicted_call,
                                               LlmProvider& llm, int max_attempts) {
    const auto out = call_signature(llm, signatures::get(signatures::kToolCallEquivalence),
                                    {{"user_query", query},
                                     {"tool_schema", schema.dump(2)},
                                     {"ground_truth_call", ground_truth_call.dump()},
                                     {"predicted_call", predicted_call.dump()}},
                                    max_attempts);
    return {verdict_is_yes(out.at("equivalent")), out.at("reasoning")};
}

PairedComparison paired_model_comparison(const std::vector<bool>& labels_a, const std::vector<bool>& labels_b,
                                         double alpha) {
    if (labels_a.size() != labels_b.size()) throw DomainError("paired comparison: label vectors differ in length");
    PairedComparison r;
    std::size_t right_a = 0, right_b = 0;
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        right_a += labels_a[i];
        right_b += labels_b[i];
        if (labels_a[i] && !labels_b[i]) ++r.b;
        if (!labels_a[i] && labels_b[i]) ++r.c;
    }
    if (!labels_a.empty()) {
        r.accuracy_a = static_cast<double>(right_a) / static_cast<double>(labels_a.size());
        r.accuracy_b = static_cast<double>(right_b) / static_cast<double>(labels_b.size());
    }
    r.p_value = mcnemar(r.b, r.c);
    r.significant = r.p_value < alpha;
    return r;
}

std::vector<CategoryComparison> paired_category_comparison(const std::vector<bool>& labels_a,
                                                           const std::vector<bool>& labels_b,
                                                           const std::vector<std::string>& categories, double alpha,
                                                           Correction correction) {
    if (labels_a.size() != labels_b.size() || labels_a.size() != categories.size()) {
        throw DomainError("paired comparison: labels and categories differ in length");
    }
    std::map<std::string, std::pair<std::vector<bool>, std::vector<bool>>> split;
    for (std::size_t i = 0; i < categories.size(); ++i) {
        split[categories[i]].first.push_back(labels_a[i]);
        split[categories[i]].second.push_back(labels_b[i]);
    }
    std::vector<CategoryComparison> out;
    std::vector<double> ps;
    for (const auto& [cat, pair] : split) {
        out.push_back({cat, paired_model_comparison(pair.first, pair.second, alpha)});
        ps.push_back(out.back().result.p_value);
    }
    if (correction == Correction::Holm) {
        const auto rejected = holm_bonferroni(ps, alpha);
        for (std::size_t i = 0; i < out.size(); ++i) out[i].result.significant = rejected[i];
    }
    return out;
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open predictions file " + path.string());
    std::vector<Prediction> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const Json j = Json::parse(line);
            Prediction p;
            p.id = j.at("id").get<std::string>();
            for (const auto& c : j.at("calls")) {
                if (!c.is_object() || !c.contains("name")) throw FormatError("call without name");
                p.calls.push_back(c);
            }
            out.push_back(std::move(p));
        } catch (const Json::exception& e) {
            throw FormatError("predictions line " + std::to_string(line_no) + ": " + e.what());
        } catch (const FormatError& e) {
            throw FormatError("predictions line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

bool prediction_correct(const GeneratedExample& reference, const Prediction* prediction,
                        const FunctionLibrary* library, LlmProvider* judge) {
    if (!prediction) return false;
    const bool abstain = reference.execution_type == ExecutionType::None ||
                         reference.execution_type == ExecutionType::MissingParams;
    if (abstain) return prediction->calls.empty();
    if (prediction->calls.size() != reference.target_invocations.size()) return false;
    for (std::size_t i = 0; i < prediction->calls.size(); ++i) {
        const auto& inv = reference.target_invocations[i];
        const Json& call = prediction->calls[i];
        if (call.at("name") != inv.function_name) return false;
        const Json args = call.contains("arguments") ? call.at("arguments") : Json::object();
        if (args == inv.arguments) continue;
        if (!judge) return false;
        Json schema = Json::object();
        if (library) {
            if (const auto* f = find_function(*library, inv.function_name)) {
                schema = {{"name", f->name}, {"description", f->description}};
            }
        }
        const Json truth{{"name", inv.function_name}, {"arguments", inv.arguments}};
        if (!judge_tool_call_equivalence(reference.query, schema, truth, call, *judge).equivalent) return false;
    }
    return true;
}

EvaluationReport evaluate_predictions(const std::vector<GeneratedExample>& references,
                                      const std::vector<Prediction>& predictions,
                                      const std::vector<Prediction>* baseline, const FunctionLibrary* library,
                                      LlmProvider* judge) {
    auto index = [](const std::vector<Prediction>& ps) {
        std::map<std::string, const Prediction*> m;
        for (const auto& p : ps) m[p.id] = &p;
        return m;
    };
    const auto pred = index(predictions);
    std::map<std::string, const Prediction*> base;
    if (baseline) base = index(*baseline);

    std::vector<bool> a, b;
    std::vector<std::string> types;
    for (const auto& ref : references) {
        const auto it = pred.find(ref.id);
        a.push_back(prediction_correct(ref, it == pred.end() ? nullptr : it->second, library, judge));
        if (baseline) {
            const auto jt = base.find(ref.id);
            b.push_back(prediction_correct(ref, jt == base.end() ? nullptr : jt->second, library, judge));
        } else {
            b.push_back(true);
        }
        types.emplace_back(to_string(ref.execution_type));
    }
    EvaluationReport r;
    r.items = references.size();
    r.overall = paired_model_comparison(a, b);
    r.accuracy = r.overall.accuracy_a;
    r.by_type = paired_category_comparison(a, b, types);
    for (const auto& c : r.by_type) r.accuracy_by_type[c.category] = c.result.accuracy_a;
    return r;
}

Json evaluation_to_json(const EvaluationReport& report) {
    auto paired = [](const PairedComparison& p) {
        return Json{{"accuracy_a", p.accuracy_a}, {"accuracy_b", p.accuracy_b}, {"b", p.b},
                    {"c", p.c},                   {"p_value", p.p_value},       {"significant", p.significant}};
    };
    Json by_type = Json::array();
    for (const auto& c : report.by_type) by_type.push_back({{"category", c.category}, {"test", paired(c.result)}});
    Json acc = Json::object();
    for (const auto& [k, v] : report.accuracy_by_type) acc[k] = v;
    return {{"items", report.items},
            {"accuracy", report.accuracy},
            {"accuracy_by_type", acc},
            {"mcnemar", paired(report.overall)},
            {"mcnemar_by_type_holm", by_type}};
}

}  // namespace fcgen
