#include "fcgen/preprocess/graph.hpp"

#include <algorithm>

#include "fcgen/core/error.hpp"
#include "fcgen/preprocess/grouping.hpp"

namespace fcgen {

std::string_view to_string(EdgeKind kind) { return kind == EdgeKind::ParamParam ? "P-P" : "P-R"; }

EdgeKind parse_edge_kind(std::string_view text) {
    if (text == "P-P") return EdgeKind::ParamParam;
    if (text == "P-R") return EdgeKind::ParamReturn;
    throw FormatError("unknown edge kind '" + std::string(text) + "'");
}

ApiGraph build_similarity_graph(const FunctionLibrary& library, Embedder& embedder, double threshold) {
    ApiGraph graph;
    std::vector<std::vector<EmbeddingVector>> inputs(library.size()), outputs(library.size());
    std::vector<std::string> texts;
    for (const auto& f : library) {
        graph.vertices.push_back(f.name);
        for (const auto& p : f.parameters) texts.push_back(describe_parameter(p));
        for (const auto& r : f.return_fields()) texts.push_back(describe_return_field(r));
    }
    if (!texts.empty()) {
        const auto vectors = embedder.embed(texts);
        std::size_t k = 0;
        for (std::size_t i = 0; i < library.size(); ++i) {
            for (std::size_t p = 0; p < library[i].parameters.size(); ++p) inputs[i].push_back(vectors[k++]);
            for (std::size_t r = 0; r < library[i].return_fields().size(); ++r) outputs[i].push_back(vectors[k++]);
        }
    }
    auto best = [](const std::vector<EmbeddingVector>& a, const std::vector<EmbeddingVector>& b) {
        double m = -2.0;
        for (const auto& x : a) {
            for (const auto& y : b) m = std::max(m, cosine_similarity(x, y));
        }
        return m;
    };
    for (std::size_t u = 0; u < library.size(); ++u) {
        for (std::size_t v = u + 1; v < library.size(); ++v) {
            const double s = best(inputs[u], inputs[v]);
            if (s >= threshold) graph.edges.push_back({library[u].name, library[v].name, EdgeKind::ParamParam, s});
        }
    }
    for (std::size_t u = 0; u < library.size(); ++u) {
        for (std::size_t v = 0; v < library.size(); ++v) {
            if (u == v) continue;
            const double s = best(outputs[u], inputs[v]);
            if (s >= threshold) graph.edges.push_back({library[u].name, library[v].name, EdgeKind::ParamReturn, s});
        }
    }
    return graph;
}

}  // namespace fcgen
