#pragma once

#include <string>
#include <vector>

#include "fcgen/core/types.hpp"
#include "fcgen/metrics/dbscan.hpp"
#include "fcgen/providers/embedder.hpp"

namespace fcgen {

struct ClusterSettings {
    double eps;
    std::size_t min_samples;
    DistanceMetric metric;
};

inline constexpr ClusterSettings kNumericValueClusters{0.5, 2, DistanceMetric::Euclidean};
inline constexpr ClusterSettings kStringValueClusters{0.1, 2, DistanceMetric::Cosine};
inline constexpr ClusterSettings kQueryClusters{0.3, 2, DistanceMetric::Cosine};

/// Base-2 Shannon entropy of the size distribution. Zero sizes are ignored.
double entropy_bits(const std::vector<std::size_t>& sizes);

/// Entropy of a partition with every noise point counted as its own cluster.
double partition_entropy(const ClusterPartition& partition);

/// Reads a numeric argument value: a JSON number or a string holding one.
/// Throws DomainError naming the value otherwise.
double numeric_value(const Json& value);

/// Text used to embed a STRING argument value.
std::string value_text(const Json& value);

double numeric_cluster_entropy(const std::vector<double>& values);
double string_cluster_entropy(const std::vector<std::string>& values, Embedder& embedder);

/// Cluster entropy of argument values. Only NUMERICAL and STRING are defined.
double value_cluster_entropy(const std::vector<Json>& values, ParameterCategory category, Embedder& embedder);

double query_cluster_entropy(const std::vector<EmbeddingVector>& embeddings);

}  // namespace fcgen
