#include "fcgen/querygen/ranking.hpp"

#include "fcgen/core/error.hpp"
#include "fcgen/metrics/fusion.hpp"
#include "fcgen/metrics/lexical.hpp"
#include "fcgen/metrics/readability.hpp"
#include "fcgen/metrics/semantic.hpp"
#include "fcgen/metrics/text.hpp"

namespace fcgen {

std::array<double, 8> ranking_metric_values(const std::vector<std::string>& corpus,
                                            const std::vector<EmbeddingVector>& embeddings,
                                            const SyntaxAnalyzer& analyzer) {
    std::vector<double> grades, lengths;
    for (const auto& q : corpus) {
        const auto counts = readability_counts(q);
        if (counts.words > 0) grades.push_back(fkgl_from_counts(counts));
        lengths.push_back(static_cast<double>(tokenize(q).size()));
    }
    return {type_token_ratio(corpus),
            compression_ratio_diversity(corpus),
            paraphrase_variety(embeddings),
            parse_tree_entropy(corpus, analyzer),
            chamfer_distance_score(embeddings),
            grades.empty() ? 0.0 : variance(grades),
            variance(lengths),
            vendi_score(embeddings)};
}

CandidateRanking rank_candidates_by_diversity(const std::vector<std::string>& dataset,
                                              const std::vector<std::string>& candidates, Embedder& embedder,
                                              int rrf_k, const SyntaxAnalyzer& analyzer) {
    if (candidates.empty()) throw DomainError("ranking: no candidates");
    std::vector<std::string> all = dataset;
    all.insert(all.end(), candidates.begin(), candidates.end());
    const auto vectors = embedder.embed(all);
    const std::vector<EmbeddingVector> base(vectors.begin(), vectors.begin() + static_cast<long>(dataset.size()));

    CandidateRanking out;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        std::vector<std::string> corpus = dataset;
        corpus.push_back(candidates[c]);
        std::vector<EmbeddingVector> emb = base;
        emb.push_back(vectors[dataset.size() + c]);
        out.values.push_back(ranking_metric_values(corpus, emb, analyzer));
    }
    std::vector<std::vector<int>> ranks;
    for (std::size_t m = 0; m < kRankingMetrics.size(); ++m) {
        std::vector<double> column;
        for (const auto& v : out.values) column.push_back(v[m]);
        ranks.push_back(competition_ranks(column, true));
    }
    out.ranks.resize(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        for (std::size_t m = 0; m < kRankingMetrics.size(); ++m) out.ranks[c][m] = ranks[m][c];
    }
    const auto fused = rrf_fuse(ranks, rrf_k);
    out.order = fused.order;
    out.fused = fused.scores;
    return out;
}

}  // namespace fcgen
