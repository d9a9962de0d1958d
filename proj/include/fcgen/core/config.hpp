#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "fcgen/core/types.hpp"

namespace fcgen {

struct LlmSettings {
    std::string kind = "mock";  ///< "mock" or "http"
    std::string endpoint;       ///< base URL of an OpenAI-style chat-completions server
    std::string model;
    std::string api_key_env = "FCGEN_LLM_API_KEY";
    std::string script;         ///< optional mock script file
    std::optional<double> temperature;
    std::optional<int> max_tokens;
    double timeout_seconds = 120.0;
};

struct EmbedderSettings {
    std::string kind = "hash";  ///< "hash" or "http"
    std::string endpoint;
    std::string model = "all-MiniLM-L6-v2";
    std::string api_key_env = "FCGEN_EMBED_API_KEY";
    std::size_t dimension = 384;
    double timeout_seconds = 60.0;
};

struct RunConfig {
    std::uint64_t rng_seed = 0;
    /// Indexed by ExecutionType order: SINGLE, PARALLEL, SEQUENTIAL, MISSING_PARAMS, NONE.
    std::array<double, 5> mixture_weights{1.0, 1.0, 1.0, 1.0, 1.0};

    double grouping_threshold = 0.6;
    double graph_edge_threshold = 0.6;
    double walk_lambda = 0.75;
    double walk_bias = 3.0;
    int walk_retry_limit = 20;
    double pair_similarity_threshold = 0.3;

    int query_rounds = 5;
    int candidates_per_round = 5;
    int reference_queries = 10;
    int rrf_k = 60;
    bool batch_judging = true;
    bool rank_cumulative_pool = true;
    int pattern_period = 50;
    int pattern_sample = 50;

    int retrieval_k = 20;

    int value_candidates = 25;
    int value_shown = 5;
    int retry_limit = 3;
    int diverse_apis_per_example = 1;
    double missing_binomial_p = 0.5;
    double optional_inclusion = 0.3;

    LlmSettings llm;
    EmbedderSettings embedder;

    double weight(ExecutionType type) const { return mixture_weights[static_cast<std::size_t>(type)]; }
    /// Throws ConfigError naming the first offending field.
    void validate() const;
};

RunConfig config_from_json(const Json& document);
Json config_to_json(const RunConfig& config);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace fcgen
