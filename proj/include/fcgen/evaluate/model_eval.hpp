#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcgen/core/types.hpp"
#include "fcgen/providers/llm.hpp"

namespace fcgen {

struct EquivalenceVerdict {
    bool equivalent = false;
    std::string reasoning;
};

EquivalenceVerdict judge_tool_call_equivalence(const std::string& query, const Json& schema,
                                               const Json& ground_truth_call, const Json& predicted_call,
                                               LlmProvider& llm, int max_attempts = 3);

enum class Correction { None, Holm };

struct PairedComparison {
    double accuracy_a = 0.0;
    double accuracy_b = 0.0;
    std::size_t b = 0;  ///< A right, B wrong
    std::size_t c = 0;  ///< A wrong, B right
    double p_value = 1.0;
    bool significant = false;
};

struct CategoryComparison {
    std::string category;
    PairedComparison result;
};

/// McNemar on two equal-length correctness vectors over the same items.
PairedComparison paired_model_comparison(const std::vector<bool>& labels_a, const std::vector<bool>& labels_b,
                                         double alpha = 0.05);

/// One test per category, then the chosen correction across categories.
std::vector<CategoryComparison> paired_category_comparison(const std::vector<bool>& labels_a,
                                                           const std::vector<bool>& labels_b,
                                                           const std::vector<std::string>& categories,
                                                           double alpha = 0.05,
                                                           Correction correction = Correction::Holm);

/// Model output for one dataset item: the calls it made, in order.
struct Prediction {
    std::string id;
    std::vector<Json> calls;  ///< {"name": ..., "arguments": {...}}
};

std::vector<Prediction> read_predictions(const std::filesystem::path& path);

/// Exact match against the targets. NONE and MISSING_PARAMS items are right
/// only when no call is made. With a judge, a same-name call whose arguments
/// differ is sent to the equivalence judge.
bool prediction_correct(const GeneratedExample& reference, const Prediction* prediction,
                        const FunctionLibrary* library, LlmProvider* judge);

struct EvaluationReport {
    std::size_t items = 0;
    double accuracy = 0.0;
    std::map<std::string, double> accuracy_by_type;
    PairedComparison overall;
    std::vector<CategoryComparison> by_type;
};

/// Scores predictions against references. Without a baseline the comparison
/// runs against the all-correct reference labels.
EvaluationReport evaluate_predictions(const std::vector<GeneratedExample>& references,
                                      const std::vector<Prediction>& predictions,
                                      const std::vector<Prediction>* baseline, const FunctionLibrary* library,
                                      LlmProvider* judge);

Json evaluation_to_json(const EvaluationReport& report);

}  // namespace fcgen
