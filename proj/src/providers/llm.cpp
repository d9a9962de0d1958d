#include "fcgen/providers/llm.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <thread>

namespace fcgen {

FieldValues call_signature(LlmProvider& llm, const PromptSignature& sig, const FieldValues& inputs,
                           int max_attempts, const DecodeParams& decode) {
    ChatRequest request;
    request.signature = sig.name;
    request.prompt = render_signature_messages(sig, inputs);
    request.inputs = inputs;
    request.decode = decode;
    const std::string base_user = request.prompt.user;

    max_attempts = std::max(1, max_attempts);
    for (int attempt = 0;; ++attempt) {
        request.attempt = attempt;
        try {
            const std::string response = llm.complete(request);
            return parse_signature_output(response, sig);
        } catch (const SignatureParseError& e) {
            if (attempt + 1 >= max_attempts) throw;
            std::string reminder = "\n\nYour previous response was missing these output fields: ";
            for (std::size_t i = 0; i < e.missing_fields().size(); ++i) {
                reminder += (i ? ", " : "") + field_marker(e.missing_fields()[i]);
            }
            reminder += ". Answer again with every output field.";
            request.prompt.user = base_user + reminder;
        } catch (const ProviderError& e) {
            if (!e.retryable() || attempt + 1 >= max_attempts) throw;
            if (e.kind() == ProviderErrorKind::RateLimited) {
                std::this_thread::sleep_for(std::chrono::milliseconds(200 * (1 << std::min(attempt, 5))));
            }
        }
    }
}

bool verdict_is_yes(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (std::isalpha(static_cast<unsigned char>(c))) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        else if (!t.empty()) break;
    }
    return t == "YES";
}

}  // namespace fcgen
