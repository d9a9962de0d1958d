#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fcgen/core/types.hpp"
#include "fcgen/providers/embedder.hpp"

namespace fcgen {

/// The eight ranking metrics followed by the four report-only ones.
inline constexpr std::array<std::string_view, 12> kLinguisticMetrics = {
    "ttr",    "compression_ratio",  "paraphrase_variety",    "parse_tree_entropy",
    "chamfer", "var_fkgl",          "var_length",            "vendi",
    "simpson", "tree_edit_distance", "query_cluster_entropy", "semantic_spread"};

struct MetricSummary {
    std::string metric;
    double value = 0.0;  ///< on the full corpus
    double std = 0.0;    ///< bootstrap
};

struct CorpusProfile {
    std::size_t size = 0;
    std::vector<MetricSummary> metrics;
};

struct MetricComparison {
    std::string metric;
    double value_a = 0.0, std_a = 0.0;
    double value_b = 0.0, std_b = 0.0;
    bool significant = false;
    int direction = 0;  ///< +1 when A is higher
};

struct DiversityReport {
    std::string label_a, label_b;
    std::size_t size_a = 0, size_b = 0;
    std::uint64_t seed = 0;
    std::vector<MetricComparison> rows;
};

/// All twelve metrics of one query corpus (needs at least 3 queries).
std::array<double, 12> linguistic_metrics(const std::vector<std::string>& corpus, Embedder& embedder);

CorpusProfile analyze_corpus(const std::vector<std::string>& corpus, Embedder& embedder, std::uint64_t seed);

DiversityReport compare_linguistic_diversity(const std::vector<std::string>& corpus_a,
                                             const std::vector<std::string>& corpus_b, Embedder& embedder,
                                             std::uint64_t seed, std::string label_a = "A",
                                             std::string label_b = "B");

std::vector<std::string> dataset_queries(const std::vector<GeneratedExample>& examples);

Json profile_to_json(const CorpusProfile& profile);
std::string profile_table(const CorpusProfile& profile);
Json report_to_json(const DiversityReport& report);
std::string report_table(const DiversityReport& report);

}  // namespace fcgen
