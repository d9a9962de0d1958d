#pragma once

#include <memory>
#include <string>

#include "fcgen/core/config.hpp"
#include "fcgen/providers/embedder.hpp"
#include "fcgen/providers/llm.hpp"

namespace fcgen {

/// Client for an OpenAI-style `POST {endpoint}/v1/chat/completions` server.
/// The rendered signature goes out as a system and a user message.
class HttpChatLlm final : public LlmProvider {
public:
    explicit HttpChatLlm(LlmSettings settings);
    std::string complete(const ChatRequest& request) override;

private:
    LlmSettings settings_;
    std::string api_key_;
};

/// Client for an OpenAI-style `POST {endpoint}/v1/embeddings` server.
class HttpEmbedder final : public Embedder {
public:
    explicit HttpEmbedder(EmbedderSettings settings);
    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;
    std::size_t dimension() const override { return settings_.dimension; }

private:
    EmbedderSettings settings_;
    std::string api_key_;
};

/// Chat request body for one rendered prompt (exposed for tests).
Json chat_request_body(const std::string& model, const ChatRequest& request);
/// Extracts choices[0].message.content; throws ProviderError(BadResponse).
std::string parse_chat_response(const std::string& body);
/// Extracts data[i].embedding ordered by index; throws ProviderError(BadResponse).
std::vector<EmbeddingVector> parse_embedding_response(const std::string& body, std::size_t expected);

/// Builds the configured providers. The mock LLM is the simulated responder,
/// optionally overlaid with a script file.
std::shared_ptr<LlmProvider> make_llm(const LlmSettings& settings);
std::shared_ptr<Embedder> make_embedder(const EmbedderSettings& settings);

}  // namespace fcgen
