#pragma once

#include <string>
#include <vector>

#include "fcgen/core/config.hpp"
#include "fcgen/core/rng.hpp"
#include "fcgen/preprocess/graph.hpp"
#include "fcgen/preprocess/pools.hpp"
#include "fcgen/providers/embedder.hpp"
#include "fcgen/providers/llm.hpp"

namespace fcgen {

ExecutionType sample_execution_type(const RunConfig& config, Rng& rng);

/// Draws a pool uniformly (re-drawing while it is empty), then a function uniformly from it.
std::string sample_single_api(const ApiPools& pools, Rng& rng);

struct WalkSettings {
    double lambda = 0.75;
    double bias = 3.0;
    int retry_limit = 20;
};

/// Biased simple walk of length Poisson(lambda) + 2. PARALLEL favors P-P
/// edges, SEQUENTIAL favors P-R edges, which it may only follow forward, and
/// must use at least once. Throws GenerationFailure when no walk of the drawn
/// length is found within the retry budget.
std::vector<std::string> sample_walk(const ApiGraph& graph, ExecutionType type, const WalkSettings& settings, Rng& rng);

/// Walk with a fixed length; exposed for tests.
std::vector<std::string> sample_walk_of_length(const ApiGraph& graph, ExecutionType type, std::size_t length,
                                               const WalkSettings& settings, Rng& rng);

/// Text embedded for the pairwise-similarity check: "name: description".
std::string schema_summary(const FunctionSchema& function);

/// Mean cosine over unordered pairs of schema summaries; 1 for a single function.
double mean_pairwise_similarity(const std::vector<const FunctionSchema*>& functions, Embedder& embedder);
bool check_pairwise_similarity(const std::vector<const FunctionSchema*>& functions, Embedder& embedder,
                               double threshold);

/// Asks the LLM whether the ordered schemas can form a true sequential chain.
/// A response that cannot be parsed within the budget throws GenerationFailure.
Verdict validate_sequential_schema_compatibility(const std::vector<const FunctionSchema*>& schemas, LlmProvider& llm,
                                                 int max_attempts);

}  // namespace fcgen
