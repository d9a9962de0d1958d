#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace fcgen {

using EmbeddingVector = std::vector<double>;

class Embedder {
public:
    virtual ~Embedder() = default;
    /// One vector per text, in order. Throws DomainError on an empty list.
    virtual std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) = 0;
    virtual std::size_t dimension() const = 0;

    EmbeddingVector embed_one(const std::string& text) { return embed({text}).front(); }
};

/// Bag of hashed lowercase word tokens, L2-normalized. Token-disjoint texts
/// are orthogonal unless two tokens collide in a bucket.
class HashEmbedder final : public Embedder {
public:
    explicit HashEmbedder(std::size_t dimension = 384);
    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;
    std::size_t dimension() const override { return dimension_; }
    std::size_t bucket(const std::string& token) const;

private:
    std::size_t dimension_;
};

/// Memoizes another embedder by exact text.
class CachingEmbedder final : public Embedder {
public:
    explicit CachingEmbedder(std::shared_ptr<Embedder> inner) : inner_(std::move(inner)) {}
    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;
    std::size_t dimension() const override { return inner_->dimension(); }

private:
    std::shared_ptr<Embedder> inner_;
    std::mutex mutex_;
    std::map<std::string, EmbeddingVector> cache_;
};

double dot(const EmbeddingVector& a, const EmbeddingVector& b);
double norm(const EmbeddingVector& a);
/// Throws DomainError if either vector has zero norm or the sizes differ.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

}  // namespace fcgen
