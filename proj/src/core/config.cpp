#include "fcgen/core/config.hpp"

#include <cmath>
#include <fstream>

#include "fcgen/core/error.hpp"

namespace fcgen {

void RunConfig::validate() const {
    auto positive = [](const char* name, double v) {
        if (!(v > 0)) throw ConfigError(std::string(name) + " must be positive");
    };
    double total = 0.0;
    for (double w : mixture_weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw ConfigError("mixture weights must be finite and >= 0");
        total += w;
    }
    if (!(total > 0.0)) throw ConfigError("mixture weights sum to zero");
    positive("walk_lambda", walk_lambda);
    positive("walk_bias", walk_bias);
    positive("walk_retry_limit", walk_retry_limit);
    positive("query_rounds", query_rounds);
    positive("candidates_per_round", candidates_per_round);
    positive("reference_queries", reference_queries);
    positive("rrf_k", rrf_k);
    positive("pattern_period", pattern_period);
    positive("pattern_sample", pattern_sample);
    positive("retrieval_k", retrieval_k);
    positive("value_candidates", value_candidates);
    positive("value_shown", value_shown);
    positive("retry_limit", retry_limit);
    positive("diverse_apis_per_example", diverse_apis_per_example);
    positive("embedder.dimension", static_cast<double>(embedder.dimension));
    if (value_shown > value_candidates) throw ConfigError("value_shown exceeds value_candidates");
    if (grouping_threshold < -1.0 || grouping_threshold > 1.0) {
        throw ConfigError("grouping_threshold must lie in [-1, 1]");
    }
    if (!(missing_binomial_p >= 0.0 && missing_binomial_p <= 1.0)) {
        throw ConfigError("missing_binomial_p must lie in [0, 1]");
    }
    if (!(optional_inclusion >= 0.0 && optional_inclusion <= 1.0)) {
        throw ConfigError("optional_inclusion must lie in [0, 1]");
    }
    if (llm.kind != "mock" && llm.kind != "http") throw ConfigError("llm.kind must be 'mock' or 'http'");
    if (embedder.kind != "hash" && embedder.kind != "http") {
        throw ConfigError("embedder.kind must be 'hash' or 'http'");
    }
}

namespace {

template <typename T>
void read(const Json& obj, const char* key, T& target) {
    if (auto it = obj.find(key); it != obj.end() && !it->is_null()) target = it->get<T>();
}

template <typename T>
void read(const Json& obj, const char* key, std::optional<T>& target) {
    if (auto it = obj.find(key); it != obj.end() && !it->is_null()) target = it->get<T>();
}

}  // namespace

RunConfig config_from_json(const Json& document) {
    if (!document.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig c;
    try {
        read(document, "rng_seed", c.rng_seed);
        if (auto it = document.find("mixture_weights"); it != document.end()) {
            if (it->is_array()) {
                if (it->size() != 5) throw ConfigError("mixture_weights needs 5 entries");
                for (std::size_t i = 0; i < 5; ++i) c.mixture_weights[i] = (*it)[i].get<double>();
            } else if (it->is_object()) {
                c.mixture_weights.fill(0.0);
                for (auto kv = it->begin(); kv != it->end(); ++kv) {
                    c.mixture_weights[static_cast<std::size_t>(parse_execution_type(kv.key()))] =
                        kv.value().get<double>();
                }
            } else {
                throw ConfigError("mixture_weights must be an array or an object");
            }
        }
        read(document, "grouping_threshold", c.grouping_threshold);
        read(document, "graph_edge_threshold", c.graph_edge_threshold);
        read(document, "walk_lambda", c.walk_lambda);
        read(document, "walk_bias", c.walk_bias);
        read(document, "walk_retry_limit", c.walk_retry_limit);
        read(document, "pair_similarity_threshold", c.pair_similarity_threshold);
        read(document, "query_rounds", c.query_rounds);
        read(document, "candidates_per_round", c.candidates_per_round);
        read(document, "reference_queries", c.reference_queries);
        read(document, "rrf_k", c.rrf_k);
        read(document, "batch_judging", c.batch_judging);
        read(document, "rank_cumulative_pool", c.rank_cumulative_pool);
        read(document, "pattern_period", c.pattern_period);
        read(document, "pattern_sample", c.pattern_sample);
        read(document, "retrieval_k", c.retrieval_k);
        read(document, "value_candidates", c.value_candidates);
        read(document, "value_shown", c.value_shown);
        read(document, "retry_limit", c.retry_limit);
        read(document, "diverse_apis_per_example", c.diverse_apis_per_example);
        read(document, "missing_binomial_p", c.missing_binomial_p);
        read(document, "optional_inclusion", c.optional_inclusion);
        if (auto it = document.find("llm"); it != document.end()) {
            read(*it, "kind", c.llm.kind);
            read(*it, "endpoint", c.llm.endpoint);
            read(*it, "model", c.llm.model);
            read(*it, "api_key_env", c.llm.api_key_env);
            read(*it, "script", c.llm.script);
            read(*it, "temperature", c.llm.temperature);
            read(*it, "max_tokens", c.llm.max_tokens);
            read(*it, "timeout_seconds", c.llm.timeout_seconds);
        }
        if (auto it = document.find("embedder"); it != document.end()) {
            read(*it, "kind", c.embedder.kind);
            read(*it, "endpoint", c.embedder.endpoint);
            read(*it, "model", c.embedder.model);
            read(*it, "api_key_env", c.embedder.api_key_env);
            read(*it, "dimension", c.embedder.dimension);
            read(*it, "timeout_seconds", c.embedder.timeout_seconds);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const FormatError& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

Json config_to_json(const RunConfig& c) {
    Json weights = Json::object();
    for (auto t : kAllExecutionTypes) weights[std::string(to_string(t))] = c.weight(t);
    Json llm = {{"kind", c.llm.kind},         {"endpoint", c.llm.endpoint}, {"model", c.llm.model},
                {"api_key_env", c.llm.api_key_env}, {"script", c.llm.script},
                {"timeout_seconds", c.llm.timeout_seconds}};
    if (c.llm.temperature) llm["temperature"] = *c.llm.temperature;
    if (c.llm.max_tokens) llm["max_tokens"] = *c.llm.max_tokens;
    Json embedder = {{"kind", c.embedder.kind},
                     {"endpoint", c.embedder.endpoint},
                     {"model", c.embedder.model},
                     {"api_key_env", c.embedder.api_key_env},
                     {"dimension", c.embedder.dimension},
                     {"timeout_seconds", c.embedder.timeout_seconds}};
    return Json{{"rng_seed", c.rng_seed},
                {"mixture_weights", weights},
                {"grouping_threshold", c.grouping_threshold},
                {"graph_edge_threshold", c.graph_edge_threshold},
                {"walk_lambda", c.walk_lambda},
                {"walk_bias", c.walk_bias},
                {"walk_retry_limit", c.walk_retry_limit},
                {"pair_similarity_threshold", c.pair_similarity_threshold},
                {"query_rounds", c.query_rounds},
                {"candidates_per_round", c.candidates_per_round},
                {"reference_queries", c.reference_queries},
                {"rrf_k", c.rrf_k},
                {"batch_judging", c.batch_judging},
                {"rank_cumulative_pool", c.rank_cumulative_pool},
                {"pattern_period", c.pattern_period},
                {"pattern_sample", c.pattern_sample},
                {"retrieval_k", c.retrieval_k},
                {"value_candidates", c.value_candidates},
                {"value_shown", c.value_shown},
                {"retry_limit", c.retry_limit},
                {"diverse_apis_per_example", c.diverse_apis_per_example},
                {"missing_binomial_p", c.missing_binomial_p},
                {"optional_inclusion", c.optional_inclusion},
                {"llm", llm},
                {"embedder", embedder}};
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    try {
        return config_from_json(Json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
}

}  // namespace fcgen
