#pragma once

#include <string>
#include <vector>

#include "fcgen/core/config.hpp"
#include "fcgen/core/rng.hpp"
#include "fcgen/providers/embedder.hpp"
#include "fcgen/providers/llm.hpp"

namespace fcgen {

/// Inputs for one batch of candidate values.
struct ValueRequest {
    const FunctionSchema* function = nullptr;
    const ParameterSpec* parameter = nullptr;
    Json other_values = Json::object();  ///< arguments already chosen for this call
    std::vector<Json> existing;          ///< group tracker view
    std::string group_context;
    std::string previous_failures = "None";
};

/// Parses a generated_values field: a JSON list, or one value per line as a
/// fallback. NUMERICAL entries are converted to numbers (integers for integer
/// types); anything unconvertible throws GenerationFailure.
std::vector<Json> parse_value_list(const std::string& text, const ParameterSpec& parameter);

/// Normalizes one numeric value; integral values of integer types become integers.
Json coerce_numeric(const Json& value, const ParameterSpec& parameter);

/// Asks for config.value_candidates values, de-duplicates, and makes one
/// top-up call when short. Returns at most value_candidates values; fewer
/// than value_shown distinct values throws GenerationFailure.
std::vector<Json> generate_value_candidates(const ValueRequest& request, LlmProvider& llm, const RunConfig& config);

struct DiverseChoice {
    Json value;
    std::vector<std::size_t> shown;  ///< candidate indices exposed for selection, in draw order
    std::vector<double> entropies;   ///< augmented-group entropy per shown candidate
    std::size_t position = 0;        ///< winner's position within `shown`
};

/// Exposes `shown` uniformly drawn candidates, folds the rest into the group
/// values and returns the shown candidate maximizing cluster entropy (first on ties).
DiverseChoice select_diverse_value(const std::vector<Json>& candidates, const std::vector<Json>& group_values,
                                   ParameterCategory category, Embedder& embedder, Rng& rng, std::size_t shown = 5);

}  // namespace fcgen
