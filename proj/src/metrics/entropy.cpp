#include "fcgen/metrics/entropy.hpp"

#include <cmath>
#include <cstdlib>

#include "fcgen/core/error.hpp"

namespace fcgen {

double entropy_bits(const std::vector<std::size_t>& sizes) {
    double total = 0.0;
    for (auto s : sizes) total += static_cast<double>(s);
    if (total == 0.0) throw DomainError("entropy: empty distribution");
    double h = 0.0;
    for (auto s : sizes) {
        if (s == 0) continue;
        const double p = static_cast<double>(s) / total;
        h -= p * std::log2(p);
    }
    return h == 0.0 ? 0.0 : h;  // normalizes -0
}

double partition_entropy(const ClusterPartition& partition) {
    std::vector<std::size_t> sizes = partition.cluster_sizes;
    sizes.insert(sizes.end(), partition.noise_count, 1);
    return entropy_bits(sizes);
}

double numeric_value(const Json& value) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        const std::string text = value.get<std::string>();
        char* end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (!text.empty() && end && *end == '\0' && std::isfinite(v)) return v;
    }
    throw DomainError("not a numeric value: " + value.dump());
}

std::string value_text(const Json& value) { return value.is_string() ? value.get<std::string>() : value.dump(); }

double numeric_cluster_entropy(const std::vector<double>& values) {
    if (values.empty()) throw DomainError("value entropy: no values");
    std::vector<Point> points;
    points.reserve(values.size());
    for (double v : values) points.push_back({v});
    const auto& s = kNumericValueClusters;
    return partition_entropy(dbscan(points, s.eps, s.min_samples, s.metric));
}

double string_cluster_entropy(const std::vector<std::string>& values, Embedder& embedder) {
    if (values.empty()) throw DomainError("value entropy: no values");
    const auto& s = kStringValueClusters;
    return partition_entropy(dbscan(embedder.embed(values), s.eps, s.min_samples, s.metric));
}

double value_cluster_entropy(const std::vector<Json>& values, ParameterCategory category, Embedder& embedder) {
    if (values.empty()) throw DomainError("value entropy: no values");
    if (category == ParameterCategory::Numerical) {
        std::vector<double> nums;
        nums.reserve(values.size());
        for (const auto& v : values) nums.push_back(numeric_value(v));
        return numeric_cluster_entropy(nums);
    }
    if (category == ParameterCategory::String) {
        std::vector<std::string> texts;
        texts.reserve(values.size());
        for (const auto& v : values) texts.push_back(value_text(v));
        return string_cluster_entropy(texts, embedder);
    }
    throw DomainError("value entropy is defined for NUMERICAL and STRING only");
}

double query_cluster_entropy(const std::vector<EmbeddingVector>& embeddings) {
    if (embeddings.empty()) throw DomainError("query entropy: no queries");
    const auto& s = kQueryClusters;
    return partition_entropy(dbscan(embeddings, s.eps, s.min_samples, s.metric));
}

}  // namespace fcgen
