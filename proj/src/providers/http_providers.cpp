#include "fcgen/providers/http_providers.hpp"

#include <cstdlib>
#include <fstream>

#include <httplib.h>

#include "fcgen/core/error.hpp"
#include "fcgen/providers/scripted_llm.hpp"

namespace fcgen {

namespace {

struct Endpoint {
    std::string origin;  // scheme://host[:port]
    std::string prefix;  // path without trailing slash
};

Endpoint split_endpoint(const std::string& url) {
    if (url.empty()) throw ConfigError("http provider: endpoint is empty");
    const auto scheme = url.find("://");
    const auto path_start = url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    Endpoint e;
    e.origin = url.substr(0, path_start);
    if (path_start != std::string::npos) e.prefix = url.substr(path_start);
    while (!e.prefix.empty() && e.prefix.back() == '/') e.prefix.pop_back();
    return e;
}

std::string read_key(const std::string& env_name) {
    if (env_name.empty()) return {};
    const char* v = std::getenv(env_name.c_str());
    return v ? std::string(v) : std::string();
}

std::string send(const std::string& base, const std::string& path, const std::string& key, double timeout,
                 const Json& body) {
    const Endpoint e = split_endpoint(base);
    httplib::Client client(e.origin);
    const auto secs = static_cast<time_t>(timeout);
    client.set_connection_timeout(secs);
    client.set_read_timeout(secs);
    client.set_write_timeout(secs);
    httplib::Headers headers;
    if (!key.empty()) headers.emplace("Authorization", "Bearer " + key);
    auto res = client.Post(e.prefix + path, headers, body.dump(), "application/json");
    if (!res) {
        const auto err = res.error();
        const auto kind = (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read)
                              ? ProviderErrorKind::Timeout
                              : ProviderErrorKind::Transport;
        throw ProviderError(kind, "http " + path + ": " + httplib::to_string(err));
    }
    if (res->status == 429) throw ProviderError(ProviderErrorKind::RateLimited, "http " + path + ": rate limited");
    if (res->status >= 500) {
        throw ProviderError(ProviderErrorKind::Transport, "http " + path + ": status " + std::to_string(res->status));
    }
    if (res->status < 200 || res->status >= 300) {
        throw ProviderError(ProviderErrorKind::BadResponse,
                            "http " + path + ": status " + std::to_string(res->status) + ": " + res->body);
    }
    return res->body;
}

}  // namespace

Json chat_request_body(const std::string& model, const ChatRequest& request) {
    Json body = {{"model", model},
                 {"messages", Json::array({Json{{"role", "system"}, {"content", request.prompt.system}},
                                           Json{{"role", "user"}, {"content", request.prompt.user}}})}};
    if (request.decode.temperature) body["temperature"] = *request.decode.temperature;
    if (request.decode.max_tokens) body["max_tokens"] = *request.decode.max_tokens;
    return body;
}

std::string parse_chat_response(const std::string& body) {
    try {
        const Json doc = Json::parse(body);
        return doc.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const Json::exception& e) {
        throw ProviderError(ProviderErrorKind::BadResponse, std::string("chat response: ") + e.what());
    }
}

std::vector<EmbeddingVector> parse_embedding_response(const std::string& body, std::size_t expected) {
    try {
        const Json doc = Json::parse(body);
        const Json& data = doc.at("data");
        if (data.size() != expected) {
            throw ProviderError(ProviderErrorKind::BadResponse, "embedding response: expected " +
                                                                    std::to_string(expected) + " vectors, got " +
                                                                    std::to_string(data.size()));
        }
        std::vector<EmbeddingVector> out(expected);
        for (std::size_t i = 0; i < data.size(); ++i) {
            const std::size_t idx = data[i].contains("index") ? data[i].at("index").get<std::size_t>() : i;
            if (idx >= expected) throw ProviderError(ProviderErrorKind::BadResponse, "embedding index out of range");
            out[idx] = data[i].at("embedding").get<EmbeddingVector>();
        }
        return out;
    } catch (const Json::exception& e) {
        throw ProviderError(ProviderErrorKind::BadResponse, std::string("embedding response: ") + e.what());
    }
}

HttpChatLlm::HttpChatLlm(LlmSettings settings) : settings_(std::move(settings)), api_key_(read_key(settings_.api_key_env)) {
    split_endpoint(settings_.endpoint);
}

std::string HttpChatLlm::complete(const ChatRequest& request) {
    ChatRequest r = request;
    if (!r.decode.temperature) r.decode.temperature = settings_.temperature;
    if (!r.decode.max_tokens) r.decode.max_tokens = settings_.max_tokens;
    const std::string body =
        send(settings_.endpoint, "/v1/chat/completions", api_key_, settings_.timeout_seconds, chat_request_body(settings_.model, r));
    return parse_chat_response(body);
}

HttpEmbedder::HttpEmbedder(EmbedderSettings settings)
    : settings_(std::move(settings)), api_key_(read_key(settings_.api_key_env)) {
    split_endpoint(settings_.endpoint);
}

std::vector<EmbeddingVector> HttpEmbedder::embed(const std::vector<std::string>& texts) {
    if (texts.empty()) throw DomainError("embed: empty text list");
    const Json body = {{"model", settings_.model}, {"input", texts}};
    auto out = parse_embedding_response(
        send(settings_.endpoint, "/v1/embeddings", api_key_, settings_.timeout_seconds, body), texts.size());
    for (const auto& v : out) {
        if (v.size() != settings_.dimension) {
            throw ProviderError(ProviderErrorKind::BadResponse,
                                "embedding dimension " + std::to_string(v.size()) + " != configured " +
                                    std::to_string(settings_.dimension));
        }
    }
    return out;
}

std::shared_ptr<LlmProvider> make_llm(const LlmSettings& settings) {
    if (settings.kind == "http") return std::make_shared<HttpChatLlm>(settings);
    if (settings.kind != "mock") throw ConfigError("llm.kind must be 'mock' or 'http', got '" + settings.kind + "'");
    auto simulated = std::make_shared<SimulatedLlm>();
    if (settings.script.empty()) return simulated;
    std::ifstream in(settings.script);
    if (!in) throw ConfigError("cannot open mock script " + settings.script);
    Json script;
    try {
        script = Json::parse(in);
    } catch (const Json::exception& e) {
        throw FormatError("mock script " + settings.script + ": " + e.what());
    }
    return ScriptedLlm::from_json(script, simulated);
}

std::shared_ptr<Embedder> make_embedder(const EmbedderSettings& settings) {
    if (settings.kind == "http") return std::make_shared<CachingEmbedder>(std::make_shared<HttpEmbedder>(settings));
    if (settings.kind != "hash") throw ConfigError("embedder.kind must be 'hash' or 'http', got '" + settings.kind + "'");
    return std::make_shared<CachingEmbedder>(std::make_shared<HashEmbedder>(settings.dimension));
}

}  // namespace fcgen
