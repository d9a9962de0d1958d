#pragma once

#include <vector>

namespace fcgen {

/// 1-based competition ranks ("1224"): equal scores share the best rank.
/// `higher_is_better` puts the largest score at rank 1.
std::vector<int> competition_ranks(const std::vector<double>& scores, bool higher_is_better = true);

struct FusedRanking {
    std::vector<double> scores;      ///< per candidate, input order
    std::vector<std::size_t> order;  ///< candidate indices, best first
};

/// Reciprocal rank fusion. `ranks[m][c]` is candidate c's 1-based rank under
/// ranker m. Equal fused scores keep input order.
FusedRanking rrf_fuse(const std::vector<std::vector<int>>& ranks, int k = 60);

}  // namespace fcgen
