#include "fcgen/metrics/semantic.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "fcgen/core/error.hpp"

namespace fcgen {

namespace {

void require_points(const std::vector<EmbeddingVector>& e, const char* what) {
    if (e.empty()) throw DomainError(std::string(what) + ": no embeddings");
}

}  // namespace

double paraphrase_variety(const std::vector<EmbeddingVector>& embeddings) {
    require_points(embeddings, "paraphrase variety");
    if (embeddings.size() < 2) return 0.0;
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
        for (std::size_t j = i + 1; j < embeddings.size(); ++j) {
            sum += 1.0 - cosine_similarity(embeddings[i], embeddings[j]);
            ++pairs;
        }
    }
    return sum / static_cast<double>(pairs);
}

double chamfer_distance_score(const std::vector<EmbeddingVector>& embeddings) {
    require_points(embeddings, "chamfer");
    if (embeddings.size() < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < embeddings.size(); ++j) {
            if (i != j) best = std::min(best, 1.0 - cosine_similarity(embeddings[i], embeddings[j]));
        }
        sum += best;
    }
    return sum / static_cast<double>(embeddings.size());
}

double semantic_spread(const std::vector<EmbeddingVector>& embeddings) {
    require_points(embeddings, "semantic spread");
    EmbeddingVector centroid(embeddings.front().size(), 0.0);
    for (const auto& e : embeddings) {
        for (std::size_t k = 0; k < e.size(); ++k) centroid[k] += e[k];
    }
    for (double& c : centroid) c /= static_cast<double>(embeddings.size());
    if (norm(centroid) < 1e-12) throw DomainError("semantic spread: centroid has zero norm");
    double sum = 0.0;
    for (const auto& e : embeddings) sum += 1.0 - cosine_similarity(e, centroid);
    return sum / static_cast<double>(embeddings.size());
}

double vendi_score(const std::vector<EmbeddingVector>& embeddings) {
    require_points(embeddings, "vendi");
    const auto n = static_cast<Eigen::Index>(embeddings.size());
    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double s = cosine_similarity(embeddings[static_cast<std::size_t>(i)], embeddings[static_cast<std::size_t>(j)]);
            k(i, j) = s;
            k(j, i) = s;
        }
    }
    k /= static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw DomainError("vendi: eigen decomposition failed");
    double h = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        double lambda = solver.eigenvalues()(i);
        if (lambda < 0.0) {
            if (lambda < -1e-9) throw DomainError("vendi: kernel is not positive semidefinite");
            lambda = 0.0;
        }
        if (lambda > 0.0) h -= lambda * std::log(lambda);
    }
    return std::exp(h);
}

}  // namespace fcgen
