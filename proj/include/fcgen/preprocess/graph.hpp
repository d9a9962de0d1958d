#pragma once

#include <string>
#include <vector>

#include "fcgen/core/types.hpp"
#include "fcgen/providers/embedder.hpp"

namespace fcgen {

enum class EdgeKind { ParamParam, ParamReturn };

std::string_view to_string(EdgeKind kind);
EdgeKind parse_edge_kind(std::string_view text);

/// P-P edges are undirected and stored once with `from` earlier in library
/// order. P-R edges run from the producer to the consumer.
struct ApiEdge {
    std::string from;
    std::string to;
    EdgeKind kind = EdgeKind::ParamParam;
    double weight = 0.0;

    bool operator==(const ApiEdge&) const = default;
};

struct ApiGraph {
    std::vector<std::string> vertices;
    std::vector<ApiEdge> edges;

    bool operator==(const ApiGraph&) const = default;
};

ApiGraph build_similarity_graph(const FunctionLibrary& library, Embedder& embedder, double threshold = 0.6);

}  // namespace fcgen
