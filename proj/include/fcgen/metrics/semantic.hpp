#pragma once

#include <vector>

#include "fcgen/providers/embedder.hpp"

namespace fcgen {

/// Mean (1 - cosine) over unordered pairs; 0 for a single embedding.
double paraphrase_variety(const std::vector<EmbeddingVector>& embeddings);

/// Mean over points of the cosine distance to the nearest other point.
double chamfer_distance_score(const std::vector<EmbeddingVector>& embeddings);

/// Mean cosine distance to the centroid. Throws DomainError if the centroid is zero.
double semantic_spread(const std::vector<EmbeddingVector>& embeddings);

/// exp of the eigenvalue entropy of K/n, K the cosine-similarity matrix.
double vendi_score(const std::vector<EmbeddingVector>& embeddings);

}  // namespace fcgen
