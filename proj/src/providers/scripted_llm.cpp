#include "fcgen/providers/scripted_llm.hpp"

#include <algorithm>

#include "fcgen/providers/catalog.hpp"

namespace fcgen {

ScriptedLlm& ScriptedLlm::add(ScriptRule rule) {
    std::lock_guard lock(mutex_);
    entries_.push_back({std::move(rule), 0});
    return *this;
}

ScriptedLlm& ScriptedLlm::on(std::string signature, std::string response) {
    return add({std::move(signature), {}, {std::move(response)}, {}});
}

ScriptedLlm& ScriptedLlm::on(std::string signature, std::vector<std::string> responses) {
    return add({std::move(signature), {}, std::move(responses), {}});
}

ScriptedLlm& ScriptedLlm::on_fields(std::string signature, const FieldValues& outputs) {
    return on_fields(std::move(signature), std::vector<FieldValues>{outputs});
}

ScriptedLlm& ScriptedLlm::on_fields(std::string signature, const std::vector<FieldValues>& outputs) {
    const auto& sig = signatures::get(signature);
    std::vector<std::string> responses;
    for (const auto& o : outputs) responses.push_back(render_signature_output(sig, o));
    return on(std::move(signature), std::move(responses));
}

ScriptedLlm& ScriptedLlm::on_call(std::string signature, std::function<std::string(const ChatRequest&)> handler) {
    return add({std::move(signature), {}, {}, std::move(handler)});
}

std::string ScriptedLlm::complete(const ChatRequest& request) {
    std::function<std::string(const ChatRequest&)> handler;
    {
        std::lock_guard lock(mutex_);
        log_.push_back(request);
        for (auto& entry : entries_) {
            const auto& rule = entry.rule;
            if (rule.signature != request.signature && rule.signature != "*") continue;
            if (!rule.contains.empty() && request.prompt.user.find(rule.contains) == std::string::npos) continue;
            if (rule.handler) {
                handler = rule.handler;
                break;
            }
            if (rule.responses.empty()) continue;
            const std::size_t index = std::min(entry.served, rule.responses.size() - 1);
            ++entry.served;
            return rule.responses[index];
        }
    }
    if (handler) return handler(request);
    if (fallback_) return fallback_->complete(request);
    throw ProviderError(ProviderErrorKind::Unscripted, "unscripted prompt for signature '" + request.signature + "'");
}

std::vector<std::string> ScriptedLlm::calls() const {
    std::lock_guard lock(mutex_);
    std::vector<std::string> names;
    for (const auto& r : log_) names.push_back(r.signature);
    return names;
}

std::size_t ScriptedLlm::call_count(std::string_view signature) const {
    std::lock_guard lock(mutex_);
    return static_cast<std::size_t>(
        std::count_if(log_.begin(), log_.end(), [&](const ChatRequest& r) { return r.signature == signature; }));
}

std::vector<ChatRequest> ScriptedLlm::requests(std::string_view signature) const {
    std::lock_guard lock(mutex_);
    std::vector<ChatRequest> out;
    for (const auto& r : log_) {
        if (r.signature == signature) out.push_back(r);
    }
    return out;
}

std::shared_ptr<ScriptedLlm> ScriptedLlm::from_json(const Json& script, std::shared_ptr<LlmProvider> fallback) {
    if (!script.is_array()) throw FormatError("mock script must be a JSON array of rules");
    auto llm = std::make_shared<ScriptedLlm>(std::move(fallback));
    for (const auto& item : script) {
        ScriptRule rule;
        rule.signature = item.at("signature").get<std::string>();
        rule.contains = item.value("contains", std::string());
        for (const auto& response : item.at("responses")) {
            if (response.is_string()) {
                rule.responses.push_back(response.get<std::string>());
            } else {
                FieldValues fields;
                for (auto it = response.begin(); it != response.end(); ++it) {
                    fields[it.key()] = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
                }
                rule.responses.push_back(render_signature_output(signatures::get(rule.signature), fields));
            }
        }
        llm->add(std::move(rule));
    }
    return llm;
}

}  // namespace fcgen
