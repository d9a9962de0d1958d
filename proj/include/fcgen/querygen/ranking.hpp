#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fcgen/metrics/syntax.hpp"
#include "fcgen/providers/embedder.hpp"

namespace fcgen {

inline constexpr std::array<std::string_view, 8> kRankingMetrics = {
    "ttr", "compression_ratio", "paraphrase_variety", "parse_tree_entropy",
    "chamfer", "var_fkgl", "var_length", "vendi"};

/// The eight ranking metrics of one corpus, in kRankingMetrics order.
std::array<double, 8> ranking_metric_values(const std::vector<std::string>& corpus,
                                            const std::vector<EmbeddingVector>& embeddings,
                                            const SyntaxAnalyzer& analyzer = default_analyzer());

struct CandidateRanking {
    std::vector<std::size_t> order;               ///< candidate indices, most diverse first
    std::vector<double> fused;                    ///< RRF score per candidate
    std::vector<std::array<double, 8>> values;    ///< metric values of dataset + candidate
    std::vector<std::array<int, 8>> ranks;        ///< per-metric competition ranks
};

/// Scores every candidate by the metrics of dataset plus that candidate, ranks
/// per metric (higher is more diverse) and fuses with RRF.
CandidateRanking rank_candidates_by_diversity(const std::vector<std::string>& dataset,
                                              const std::vector<std::string>& candidates, Embedder& embedder,
                                              int rrf_k = 60, const SyntaxAnalyzer& analyzer = default_analyzer());

}  // namespace fcgen
