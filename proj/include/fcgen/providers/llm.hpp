#pragma once

#include <optional>
#include <string>

#include "fcgen/core/error.hpp"
#include "fcgen/providers/signature.hpp"

namespace fcgen {

struct DecodeParams {
    std::optional<double> temperature;
    std::optional<int> max_tokens;
};

/// One completion request. `inputs` mirrors the rendered input blocks so
/// in-process providers can answer without re-parsing the prompt.
struct ChatRequest {
    std::string signature;
    RenderedPrompt prompt;
    FieldValues inputs;
    DecodeParams decode;
    int attempt = 0;
};

enum class ProviderErrorKind { Transport, Timeout, RateLimited, Unscripted, BadResponse, Config };

class ProviderError : public Error {
public:
    ProviderError(ProviderErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
    ProviderErrorKind kind() const { return kind_; }
    bool retryable() const {
        return kind_ == ProviderErrorKind::Transport || kind_ == ProviderErrorKind::Timeout ||
               kind_ == ProviderErrorKind::RateLimited;
    }

private:
    ProviderErrorKind kind_;
};

/// Chat-completion backend. Implementations must be callable from several threads.
class LlmProvider {
public:
    virtual ~LlmProvider() = default;
    virtual std::string complete(const ChatRequest& request) = 0;
};

/// Renders `sig`, completes it and parses the response. A response missing
/// output markers is re-prompted with the missing-field list; retryable
/// provider errors are retried. Both share the `max_attempts` budget.
/// Throws SignatureParseError or ProviderError once the budget is spent.
FieldValues call_signature(LlmProvider& llm, const PromptSignature& sig, const FieldValues& inputs,
                           int max_attempts, const DecodeParams& decode = {});

/// Interprets a YES/NO verdict field; anything else counts as NO.
bool verdict_is_yes(const std::string& text);

/// Boolean judgement with the model's reasoning.
struct Verdict {
    bool accepted = false;
    std::string reasoning;
};

}  // namespace fcgen
