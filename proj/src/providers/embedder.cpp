#include "fcgen/providers/embedder.hpp"

#include <cmath>
#include <cstdint>

#include "fcgen/core/error.hpp"
#include "fcgen/metrics/text.hpp"

namespace fcgen {

HashEmbedder::HashEmbedder(std::size_t dimension) : dimension_(dimension) {
    if (dimension == 0) throw ConfigError("embedding dimension must be positive");
}

std::size_t HashEmbedder::bucket(const std::string& token) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : token) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h % dimension_);
}

std::vector<EmbeddingVector> HashEmbedder::embed(const std::vector<std::string>& texts) {
    if (texts.empty()) throw DomainError("embed: empty text list");
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        EmbeddingVector v(dimension_, 0.0);
        auto tokens = tokenize(text);
        if (tokens.empty()) tokens.push_back(text);  // keeps punctuation-only text non-zero
        for (const auto& t : tokens) v[bucket(t)] += 1.0;
        const double n = norm(v);
        for (double& x : v) x /= n;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<EmbeddingVector> CachingEmbedder::embed(const std::vector<std::string>& texts) {
    if (texts.empty()) throw DomainError("embed: empty text list");
    std::vector<std::string> missing;
    {
        std::lock_guard lock(mutex_);
        for (const auto& t : texts) {
            if (!cache_.count(t)) missing.push_back(t);
        }
    }
    if (!missing.empty()) {
        auto fresh = inner_->embed(missing);
        std::lock_guard lock(mutex_);
        for (std::size_t i = 0; i < missing.size(); ++i) cache_[missing[i]] = std::move(fresh[i]);
    }
    std::lock_guard lock(mutex_);
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(cache_.at(t));
    return out;
}

double dot(const EmbeddingVector& a, const EmbeddingVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const EmbeddingVector& a) { return std::sqrt(dot(a, a)); }

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.size() != b.size()) throw DomainError("cosine: dimension mismatch");
    const double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0) throw DomainError("cosine: zero-norm vector");
    return dot(a, b) / (na * nb);
}

}  // namespace fcgen
