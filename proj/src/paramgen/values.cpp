#include "fcgen/paramgen/values.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "fcgen/core/error.hpp"
#include "fcgen/metrics/entropy.hpp"
#include "fcgen/providers/catalog.hpp"

namespace fcgen {

namespace {

constexpr std::size_t kExistingShown = 50;

bool integer_type(const std::string& t) {
    return t.find("int") != std::string::npos || t.find("long") != std::string::npos;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Json existing_json(const std::vector<Json>& values) {
    Json out = Json::array();
    const std::size_t start = values.size() > kExistingShown ? values.size() - kExistingShown : 0;
    for (std::size_t i = start; i < values.size(); ++i) out.push_back(values[i]);
    return out;
}

}  // namespace

Json coerce_numeric(const Json& value, const ParameterSpec& parameter) {
    double v = 0.0;
    try {
        v = numeric_value(value);
    } catch (const DomainError& e) {
        throw GenerationFailure(parameter.name + ": " + e.what());
    }
    if (integer_type(parameter.declared_type) && std::floor(v) == v && std::fabs(v) < 9e15) {
        return static_cast<long long>(v);
    }
    return v;
}

std::vector<Json> parse_value_list(const std::string& text, const ParameterSpec& parameter) {
    Json list;
    try {
        list = Json::parse(text);
    } catch (const Json::parse_error&) {
        list = Json::array();
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            line = trim(line);
            while (!line.empty() && (line[0] == '-' || line[0] == '*')) line = trim(line.substr(1));
            if (!line.empty()) list.push_back(line);
        }
    }
    if (!list.is_array()) list = Json::array({list});
    std::vector<Json> out;
    for (const auto& v : list) {
        if (parameter.category == ParameterCategory::Numerical) out.push_back(coerce_numeric(v, parameter));
        else out.push_back(v.is_string() ? v : Json(v.dump()));
    }
    return out;
}

std::vector<Json> generate_value_candidates(const ValueRequest& request, LlmProvider& llm, const RunConfig& config) {
    const auto& p = *request.parameter;
    std::string_view sig_name;
    if (p.category == ParameterCategory::Numerical) sig_name = signatures::kGenerateMultipleNumericalParameters;
    else if (p.category == ParameterCategory::String) sig_name = signatures::kGenerateMultipleStringParameters;
    else throw InvariantError("candidate batches are for NUMERICAL and STRING parameters");
    const auto& sig = signatures::get(sig_name);

    const auto wanted = static_cast<std::size_t>(config.value_candidates);
    std::vector<Json> values;
    std::set<std::string> seen;
    auto absorb = [&](const std::vector<Json>& batch) {
        for (const auto& v : batch) {
            if (values.size() >= wanted) break;
            if (seen.insert(v.dump()).second) values.push_back(v);
        }
    };
    auto ask = [&](std::size_t count, const std::vector<Json>& existing) {
        FieldValues in{{"parameter_name", p.name},
                       {"parameter_description", p.description},
                       {"parameter_type", p.declared_type},
                       {"function_name", request.function->name},
                       {"function_description", request.function->description},
                       {"other_parameter_values", request.other_values.dump()},
                       {"existing_values", existing_json(existing).dump()},
                       {"parameter_group_context", request.group_context},
                       {"num_candidates", std::to_string(count)},
                       {"previous_failures", request.previous_failures}};
        const auto out = call_signature(llm, sig, in, config.retry_limit);
        return parse_value_list(out.at("generated_values"), p);
    };

    try {
        absorb(ask(wanted, request.existing));
        if (values.size() < wanted) {
            std::vector<Json> existing = request.existing;
            existing.insert(existing.end(), values.begin(), values.end());
            absorb(ask(wanted - values.size(), existing));
        }
    } catch (const SignatureParseError& e) {
        throw GenerationFailure(p.name + ": " + e.what());
    }
    if (values.size() < static_cast<std::size_t>(config.value_shown)) {
        throw GenerationFailure(p.name + ": only " + std::to_string(values.size()) + " distinct candidate values");
    }
    return values;
}

DiverseChoice select_diverse_value(const std::vector<Json>& candidates, const std::vector<Json>& group_values,
                                   ParameterCategory category, Embedder& embedder, Rng& rng, std::size_t shown) {
    if (candidates.empty()) throw DomainError("select_diverse_value: no candidates");
    DiverseChoice choice;
    choice.shown = rng.sample_indices(candidates.size(), std::min(shown, candidates.size()));
    std::vector<bool> is_shown(candidates.size(), false);
    for (auto i : choice.shown) is_shown[i] = true;

    std::vector<Json> augmented = group_values;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!is_shown[i]) augmented.push_back(candidates[i]);
    }
    double best = -1.0;
    for (std::size_t k = 0; k < choice.shown.size(); ++k) {
        augmented.push_back(candidates[choice.shown[k]]);
        const double h = value_cluster_entropy(augmented, category, embedder);
        augmented.pop_back();
        choice.entropies.push_back(h);
        if (h > best) {
            best = h;
            choice.position = k;
        }
    }
    choice.value = candidates[choice.shown[choice.position]];
    return choice;
}

}  // namespace fcgen
