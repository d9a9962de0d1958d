#include "fcgen/metrics/fusion.hpp"

#include <algorithm>
#include <numeric>

#include "fcgen/core/error.hpp"

namespace fcgen {

std::vector<int> competition_ranks(const std::vector<double>& scores, bool higher_is_better) {
    std::vector<int> ranks(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        int better = 0;
        for (double other : scores) {
            if (higher_is_better ? other > scores[i] : other < scores[i]) ++better;
        }
        ranks[i] = better + 1;
    }
    return ranks;
}

FusedRanking rrf_fuse(const std::vector<std::vector<int>>& ranks, int k) {
    if (ranks.empty()) throw DomainError("rrf: no rankings");
    const std::size_t n = ranks.front().size();
    FusedRanking out;
    out.scores.assign(n, 0.0);
    for (const auto& ranking : ranks) {
        if (ranking.size() != n) throw DomainError("rrf: rankings cover different candidate sets");
        for (std::size_t c = 0; c < n; ++c) {
            if (ranking[c] < 1) throw DomainError("rrf: ranks start at 1");
            out.scores[c] += 1.0 / static_cast<double>(k + ranking[c]);
        }
    }
    out.order.resize(n);
    std::iota(out.order.begin(), out.order.end(), 0);
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return out.scores[a] > out.scores[b]; });
    return out;
}

}  // namespace fcgen
