#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fcgen/core/types.hpp"
#include "fcgen/providers/llm.hpp"

namespace fcgen {

/// A canned answer for requests of one signature. `contains`, when set, must
/// occur in the request's user message. Responses are served in order; the
/// last one repeats. A handler, when present, replaces the response list.
struct ScriptRule {
    std::string signature;
    std::string contains;
    std::vector<std::string> responses;
    std::function<std::string(const ChatRequest&)> handler;
};

/// Test double that answers from a script. Requests that match no rule are
/// forwarded to the fallback provider, or rejected as unscripted.
class ScriptedLlm final : public LlmProvider {
public:
    explicit ScriptedLlm(std::shared_ptr<LlmProvider> fallback = nullptr) : fallback_(std::move(fallback)) {}

    ScriptedLlm& add(ScriptRule rule);
    ScriptedLlm& on(std::string signature, std::string response);
    ScriptedLlm& on(std::string signature, std::vector<std::string> responses);
    /// Scripts the rendered output blocks of the named catalog signature.
    ScriptedLlm& on_fields(std::string signature, const FieldValues& outputs);
    ScriptedLlm& on_fields(std::string signature, const std::vector<FieldValues>& outputs);
    ScriptedLlm& on_call(std::string signature, std::function<std::string(const ChatRequest&)> handler);

    std::string complete(const ChatRequest& request) override;

    /// Signature names of every request seen, in arrival order.
    std::vector<std::string> calls() const;
    std::size_t call_count(std::string_view signature) const;
    std::vector<ChatRequest> requests(std::string_view signature) const;

    /// Loads rules from `[{"signature", "contains"?, "responses": [str | {field: text}]}]`.
    static std::shared_ptr<ScriptedLlm> from_json(const Json& script, std::shared_ptr<LlmProvider> fallback);

private:
    struct Entry {
        ScriptRule rule;
        std::size_t served = 0;
    };
    mutable std::mutex mutex_;
    std::vector<Entry> entries_;
    std::vector<ChatRequest> log_;
    std::shared_ptr<LlmProvider> fallback_;
};

/// Deterministic rule-based responder covering every catalog signature.
/// Answers depend only on the request, so runs and resumed runs see identical
/// output. Values come from fixed well-separated pools; judges and validators
/// accept; relevance scores give targets 5 and other candidates 1-3.
class SimulatedLlm final : public LlmProvider {
public:
    std::string complete(const ChatRequest& request) override;
};

}  // namespace fcgen
