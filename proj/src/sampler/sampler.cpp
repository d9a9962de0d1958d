#include "fcgen/sampler/sampler.hpp"

#include <algorithm>
#include <map>

#include "fcgen/core/error.hpp"
#include "fcgen/core/library.hpp"
#include "fcgen/providers/catalog.hpp"

namespace fcgen {

ExecutionType sample_execution_type(const RunConfig& config, Rng& rng) {
    double total = 0.0;
    for (double w : config.mixture_weights) {
        if (w < 0.0) throw ConfigError("mixture weights must be nonnegative");
        total += w;
    }
    if (total <= 0.0) throw ConfigError("mixture weights sum to zero");
    return kAllExecutionTypes[rng.categorical(config.mixture_weights)];
}

std::string sample_single_api(const ApiPools& pools, Rng& rng) {
    if (pools.general.empty() && pools.focused.empty() && pools.other.empty()) {
        throw GenerationFailure("all API pools are empty");
    }
    for (;;) {
        const auto& pool = pools.pool(rng.uniform_index(3));
        if (!pool.empty()) return pool[rng.uniform_index(pool.size())];
    }
}

namespace {

struct Move {
    std::size_t to;
    double weight;
    bool forward_return;
};

std::vector<std::vector<Move>> adjacency(const ApiGraph& graph, ExecutionType type, double bias) {
    std::map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) id[graph.vertices[i]] = i;
    std::vector<std::vector<Move>> adj(graph.vertices.size());
    const bool parallel = type == ExecutionType::Parallel;
    for (const auto& e : graph.edges) {
        const auto u = id.at(e.from), v = id.at(e.to);
        if (e.kind == EdgeKind::ParamParam) {
            const double w = e.weight * (parallel ? bias : 1.0);
            adj[u].push_back({v, w, false});
            adj[v].push_back({u, w, false});
        } else if (parallel) {
            adj[u].push_back({v, e.weight, false});
            adj[v].push_back({u, e.weight, false});
        } else {
            adj[u].push_back({v, e.weight * bias, true});
        }
    }
    return adj;
}

}  // namespace

std::vector<std::string> sample_walk_of_length(const ApiGraph& graph, ExecutionType type, std::size_t length,
                                               const WalkSettings& settings, Rng& rng) {
    if (type != ExecutionType::Parallel && type != ExecutionType::Sequential) {
        throw InvariantError("walks are only defined for PARALLEL and SEQUENTIAL");
    }
    const auto adj = adjacency(graph, type, settings.bias);
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < adj.size(); ++i) {
        if (!adj[i].empty()) starts.push_back(i);
    }
    if (starts.empty()) throw GenerationFailure("graph has no usable edges for " + std::string(to_string(type)));

    for (int attempt = 0; attempt < std::max(1, settings.retry_limit); ++attempt) {
        std::vector<std::size_t> walk{starts[rng.uniform_index(starts.size())]};
        bool used_return_edge = false;
        while (walk.size() < length) {
            std::vector<const Move*> options;
            std::vector<double> weights;
            for (const auto& m : adj[walk.back()]) {
                if (std::find(walk.begin(), walk.end(), m.to) != walk.end()) continue;
                options.push_back(&m);
                weights.push_back(m.weight);
            }
            if (options.empty()) break;
            const Move* chosen = options[rng.categorical(weights)];
            used_return_edge = used_return_edge || chosen->forward_return;
            walk.push_back(chosen->to);
        }
        if (walk.size() < length) continue;
        if (type == ExecutionType::Sequential && !used_return_edge) continue;
        std::vector<std::string> names;
        for (auto v : walk) names.push_back(graph.vertices[v]);
        return names;
    }
    throw GenerationFailure("no " + std::string(to_string(type)) + " walk of length " + std::to_string(length));
}

std::vector<std::string> sample_walk(const ApiGraph& graph, ExecutionType type, const WalkSettings& settings, Rng& rng) {
    const auto length = static_cast<std::size_t>(rng.poisson(settings.lambda)) + 2;
    return sample_walk_of_length(graph, type, length, settings, rng);
}

std::string schema_summary(const FunctionSchema& function) { return function.name + ": " + function.description; }

double mean_pairwise_similarity(const std::vector<const FunctionSchema*>& functions, Embedder& embedder) {
    if (functions.size() < 2) return 1.0;
    std::vector<std::string> texts;
    for (const auto* f : functions) texts.push_back(schema_summary(*f));
    const auto v = embedder.embed(texts);
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            sum += cosine_similarity(v[i], v[j]);
            ++pairs;
        }
    }
    return sum / static_cast<double>(pairs);
}

bool check_pairwise_similarity(const std::vector<const FunctionSchema*>& functions, Embedder& embedder,
                               double threshold) {
    return functions.size() < 2 || mean_pairwise_similarity(functions, embedder) >= threshold;
}

Verdict validate_sequential_schema_compatibility(const std::vector<const FunctionSchema*>& schemas, LlmProvider& llm,
                                                 int max_attempts) {
    if (schemas.size() < 2) throw InvariantError("sequential compatibility needs at least two schemas");
    Json list = Json::array();
    for (const auto* s : schemas) list.push_back(function_to_json(*s));
    try {
        const auto out = call_signature(llm, signatures::get(signatures::kValidateSequentialSchemaCompatibility),
                                        {{"api_schemas", list.dump(2)}}, max_attempts);
        return {verdict_is_yes(out.at("is_compatible")), out.at("reasoning")};
    } catch (const SignatureParseError& e) {
        throw GenerationFailure(std::string("schema compatibility: ") + e.what());
    }
}

}  // namespace fcgen
