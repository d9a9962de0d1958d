#include "fcgen/paramgen/paramgen.hpp"

#include <algorithm>

#include "fcgen/core/error.hpp"
#include "fcgen/core/library.hpp"
#include "fcgen/providers/catalog.hpp"

namespace fcgen {

namespace sg = signatures;

namespace {

std::string failure_text(const std::vector<std::string>& failures) {
    if (failures.empty()) return "None";
    std::string out;
    for (std::size_t i = 0; i < failures.size(); ++i) {
        out += "Attempt " + std::to_string(i + 1) + ": " + failures[i];
        if (i + 1 < failures.size()) out += "\n";
    }
    return out;
}

bool is_sentinel(const Json& v) { return v.is_string() && v.get<std::string>() == kMissingSentinel; }

Json visible_arguments(const Json& args) {
    Json out = Json::object();
    for (auto it = args.begin(); it != args.end(); ++it) {
        if (!is_sentinel(it.value())) out[it.key()] = it.value();
    }
    return out;
}

Json parse_loose(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error&) {
        return Json(text);
    }
}

std::string parameter_schema(const FunctionSchema& api) { return function_to_json(api).at("parameters").dump(2); }

std::string return_schema(const FunctionSchema& api) {
    return api.return_schema ? api.return_schema->dump(2) : std::string("{}");
}

/// Runs `body` up to `limit` times; `body` returns an empty string on success
/// or the failure reason. Generation failures inside count as failed attempts.
template <typename Body>
void with_retries(int limit, const std::string& what, std::vector<std::string>& failures, Json& trace, Body body) {
    for (int attempt = 0; attempt < limit; ++attempt) {
        std::string reason;
        try {
            reason = body(failure_text(failures));
        } catch (const GenerationFailure& e) {
            reason = e.what();
        }
        if (reason.empty()) {
            trace["param_attempts"] = attempt + 1;
            trace["param_failures"] = failures;
            return;
        }
        failures.push_back(reason);
    }
    throw GenerationFailure(what + ": rejected after " + std::to_string(limit) + " attempts; last: " +
                            (failures.empty() ? std::string("none") : failures.back()));
}

}  // namespace

ParamGenerator::ParamGenerator(const FunctionLibrary& library, const std::vector<ParameterGroup>& groups,
                               const RunConfig& config, LlmProvider& llm, Embedder& embedder)
    : library_(library), groups_(groups), index_(groups), config_(config), llm_(llm), embedder_(embedder) {}

bool ParamGenerator::include_parameter(const ParameterSpec& parameter, Rng& rng) const {
    return parameter.required || rng.bernoulli(config_.optional_inclusion);
}

std::string ParamGenerator::group_context(const FunctionSchema& api, const ParameterSpec& parameter) const {
    const auto g = index_.find(api.name, parameter.name);
    if (!g) return "None";
    std::string out;
    for (const auto& m : groups_[*g].members) {
        if (m.function == api.name && m.parameter == parameter.name) continue;
        if (!out.empty()) out += ", ";
        out += m.function + "." + m.parameter;
    }
    return out.empty() ? std::string("None") : out;
}

std::vector<Json> ParamGenerator::group_values(const FunctionSchema& api, const ParameterSpec& parameter,
                                               const TrackerSet& trackers, const TrackerDelta& pending) const {
    const auto g = index_.find(api.name, parameter.name);
    if (!g || *g >= trackers.group_count()) return {};
    return tracker_view(trackers, pending, *g);
}

TrackerDelta ParamGenerator::delta_for(const std::vector<const FunctionSchema*>& apis,
                                       const std::vector<Json>& arguments) const {
    TrackerDelta delta;
    for (std::size_t i = 0; i < apis.size(); ++i) {
        for (auto it = arguments[i].begin(); it != arguments[i].end(); ++it) {
            if (is_sentinel(it.value())) continue;
            if (auto g = index_.find(apis[i]->name, it.key())) delta.add(*g, it.value());
        }
    }
    return delta;
}

DiverseChoice ParamGenerator::diverse_value(const FunctionSchema& api, const ParameterSpec& parameter,
                                            const Json& chosen_so_far, const std::vector<Json>& group_values,
                                            const std::string& failures, Rng& rng) {
    ValueRequest request;
    request.function = &api;
    request.parameter = &parameter;
    request.other_values = visible_arguments(chosen_so_far);
    request.existing = group_values;
    request.group_context = group_context(api, parameter);
    request.previous_failures = failures;
    const auto candidates = generate_value_candidates(request, llm_, config_);
    return select_diverse_value(candidates, group_values, parameter.category, embedder_, rng,
                                static_cast<std::size_t>(config_.value_shown));
}

Json ParamGenerator::single_value(std::string_view signature, const FunctionSchema& api,
                                  const ParameterSpec& parameter, FieldValues inputs,
                                  const std::vector<Json>& existing, const std::string& failures) {
    inputs["parameter_name"] = parameter.name;
    inputs["parameter_description"] = parameter.description;
    inputs["parameter_type"] = parameter.declared_type;
    inputs["function_name"] = api.name;
    inputs["function_description"] = api.description;
    Json recent = Json::array();
    for (std::size_t i = existing.size() > 50 ? existing.size() - 50 : 0; i < existing.size(); ++i) {
        recent.push_back(existing[i]);
    }
    inputs["existing_values"] = recent.dump();
    inputs["parameter_group_context"] = group_context(api, parameter);
    inputs["previous_failures"] = failures;
    FieldValues out;
    try {
        out = call_signature(llm_, sg::get(signature), inputs, config_.retry_limit);
    } catch (const SignatureParseError& e) {
        throw GenerationFailure(parameter.name + ": " + e.what());
    }
    const Json value = parse_loose(out.at("generated_value"));
    switch (parameter.category) {
        case ParameterCategory::Numerical: return coerce_numeric(value, parameter);
        case ParameterCategory::String: return value.is_string() ? value : Json(out.at("generated_value"));
        default: return value;
    }
}

Json ParamGenerator::diverse_arguments(const FunctionSchema& api, const TrackerSet& trackers, TrackerDelta& pending,
                                       const std::vector<std::string>& omitted, const std::string& failures,
                                       Rng& rng) {
    Json args = Json::object();
    for (const auto& p : api.parameters) {
        if (std::find(omitted.begin(), omitted.end(), p.name) != omitted.end()) {
            args[p.name] = std::string(kMissingSentinel);
            continue;
        }
        if (!include_parameter(p, rng)) continue;
        switch (p.category) {
            case ParameterCategory::Enum:
                args[p.name] = p.enum_values[rng.uniform_index(p.enum_values.size())];
                break;
            case ParameterCategory::Other:
                args[p.name] = single_value(sg::kGenerateOtherParameter, api, p,
                                            {{"other_parameter_values", visible_arguments(args).dump()}},
                                            group_values(api, p, trackers, pending), failures);
                break;
            default: {
                auto choice = diverse_value(api, p, args, group_values(api, p, trackers, pending), failures, rng);
                args[p.name] = choice.value;
                if (auto g = index_.find(api.name, p.name)) pending.add(*g, choice.value);
            }
        }
    }
    return args;
}

Json ParamGenerator::cohesive_arguments(const FunctionSchema& api, const Json& context, const TrackerSet& trackers,
                                        const std::string& failures, Rng& rng) {
    Json args = Json::object();
    const TrackerDelta none;
    for (const auto& p : api.parameters) {
        if (!include_parameter(p, rng)) continue;
        if (p.category == ParameterCategory::Enum) {
            args[p.name] = p.enum_values[rng.uniform_index(p.enum_values.size())];
            continue;
        }
        const std::string_view sig = p.category == ParameterCategory::String      ? sg::kGenerateCohesiveStringParameter
                                     : p.category == ParameterCategory::Numerical ? sg::kGenerateCohesiveNumericalParameter
                                                                                  : sg::kGenerateCohesiveOtherParameter;
        args[p.name] = single_value(sig, api, p,
                                    {{"other_parameter_values", args.dump()},
                                     {"parallel_context_parameters", context.dump()}},
                                    group_values(api, p, trackers, none), failures);
    }
    return args;
}

Json ParamGenerator::sequential_arguments(const FunctionSchema& api, const Json& return_value,
                                          const Json& next_arguments, const Json& later_arguments,
                                          const TrackerSet& trackers, const std::string& failures, Rng& rng) {
    Json args = Json::object();
    const TrackerDelta none;
    for (const auto& p : api.parameters) {
        if (!include_parameter(p, rng)) continue;
        if (p.category == ParameterCategory::Enum) {
            args[p.name] = p.enum_values[rng.uniform_index(p.enum_values.size())];
            continue;
        }
        const std::string_view sig = p.category == ParameterCategory::String ? sg::kGenerateSequentialCohesiveStringParameter
                                     : p.category == ParameterCategory::Numerical
                                         ? sg::kGenerateSequentialCohesiveNumericalParameter
                                         : sg::kGenerateSequentialCohesiveOtherParameter;
        args[p.name] = single_value(sig, api, p,
                                    {{"other_parameter_values", args.dump()},
                                     {"return_value", return_value.dump()},
                                     {"next_api_parameters", next_arguments.dump()},
                                     {"later_api_parameters", later_arguments.dump()}},
                                    group_values(api, p, trackers, none), failures);
    }
    return args;
}

Json ParamGenerator::generate_return_value(const FunctionSchema& api, const FunctionSchema& next,
                                           const Json& next_arguments, const std::string& failures) {
    try {
        const auto out = call_signature(llm_, sg::get(sg::kGenerateReturnValue),
                                        {{"api_name", api.name},
                                         {"api_description", api.description},
                                         {"return_type_schema", return_schema(api)},
                                         {"next_api_name", next.name},
                                         {"next_api_description", next.description},
                                         {"next_api_parameters_schema", parameter_schema(next)},
                                         {"next_api_parameters_values", next_arguments.dump()},
                                         {"previous_failures", failures}},
                                        config_.retry_limit);
        return parse_loose(out.at("return_value"));
    } catch (const SignatureParseError& e) {
        throw GenerationFailure(api.name + " return value: " + e.what());
    }
}

Verdict ParamGenerator::validate_parameter_set(const FunctionSchema& api, const Json& arguments, bool partial) {
    const auto& sig = sg::get(partial ? sg::kPartialParameterSetValidator : sg::kParameterSetValidator);
    try {
        const auto out = call_signature(llm_, sig,
                                        {{"api_name", api.name},
                                         {"api_description", api.description},
                                         {"full_parameter_schema", parameter_schema(api)},
                                         {partial ? "provided_parameters" : "selected_parameters", arguments.dump()}},
                                        config_.retry_limit);
        return {verdict_is_yes(out.at("is_valid")), out.at("reasoning")};
    } catch (const SignatureParseError&) {
        return {false, "parse failure"};
    }
}

Verdict ParamGenerator::validate_return_value(const FunctionSchema& api, const Json& return_value,
                                              const Json& arguments, const FunctionSchema& next,
                                              const Json& next_arguments) {
    try {
        const auto out = call_signature(llm_, sg::get(sg::kValidateReturnValue),
                                        {{"api_name", api.name},
                                         {"api_description", api.description},
                                         {"return_type_schema", return_schema(api)},
                                         {"return_value", return_value.dump()},
                                         {"api_parameters", arguments.dump()},
                                         {"next_api_name", next.name},
                                         {"next_api_description", next.description},
                                         {"next_api_parameters", next_arguments.dump()}},
                                        config_.retry_limit);
        return {verdict_is_yes(out.at("is_valid")), out.at("reasoning")};
    } catch (const SignatureParseError&) {
        return {false, "parse failure"};
    }
}

Verdict ParamGenerator::validate_sequential_chain(const std::vector<const FunctionSchema*>& apis,
                                                  const std::vector<Json>& arguments,
                                                  const std::vector<Json>& return_values) {
    Json schemas = Json::array();
    for (const auto* a : apis) schemas.push_back(function_to_json(*a));
    try {
        const auto out = call_signature(llm_, sg::get(sg::kValidateSequentialChain),
                                        {{"api_schemas", schemas.dump(2)},
                                         {"parameters_list", Json(arguments).dump()},
                                         {"return_values_list", Json(return_values).dump()}},
                                        config_.retry_limit);
        return {verdict_is_yes(out.at("is_valid")), out.at("reasoning")};
    } catch (const SignatureParseError&) {
        return {false, "parse failure"};
    }
}

ParamOutcome ParamGenerator::single(const FunctionSchema& api, const TrackerSet& trackers, Rng& rng) {
    ParamOutcome outcome;
    std::vector<std::string> failures;
    with_retries(config_.retry_limit, "SINGLE " + api.name, failures, outcome.trace, [&](const std::string& prior) {
        TrackerDelta pending;
        Json args = diverse_arguments(api, trackers, pending, {}, prior, rng);
        const Verdict v = validate_parameter_set(api, args, false);
        if (!v.accepted) return v.reasoning;
        outcome.arguments = {args};
        outcome.trace["param_validation"] = v.reasoning;
        return std::string();
    });
    outcome.delta = delta_for({&api}, outcome.arguments);
    return outcome;
}

ParamOutcome ParamGenerator::missing(const FunctionSchema& api, const TrackerSet& trackers, Rng& rng) {
    std::vector<std::string> required;
    for (const auto& p : api.parameters) {
        if (p.required) required.push_back(p.name);
    }
    if (required.empty()) throw InvariantError("MISSING_PARAMS needs a function with required parameters: " + api.name);
    const int n = static_cast<int>(required.size());
    const int k = std::max(1, rng.binomial(n, config_.missing_binomial_p));
    auto picked = rng.sample_indices(required.size(), static_cast<std::size_t>(k));
    std::sort(picked.begin(), picked.end());
    ParamOutcome outcome;
    for (auto i : picked) outcome.missing.push_back(required[i]);

    std::vector<std::string> failures;
    with_retries(config_.retry_limit, "MISSING_PARAMS " + api.name, failures, outcome.trace,
                 [&](const std::string& prior) {
                     TrackerDelta pending;
                     Json args = diverse_arguments(api, trackers, pending, outcome.missing, prior, rng);
                     const Verdict v = validate_parameter_set(api, args, true);
                     if (!v.accepted) return v.reasoning;
                     outcome.arguments = {args};
                     outcome.trace["param_validation"] = v.reasoning;
                     return std::string();
                 });
    outcome.delta = delta_for({&api}, outcome.arguments);
    return outcome;
}

ParamOutcome ParamGenerator::parallel(const std::vector<const FunctionSchema*>& apis, const TrackerSet& trackers,
                                      Rng& rng) {
    if (apis.size() < 2) throw InvariantError("PARALLEL needs at least two functions");
    const std::size_t k =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::max(1, config_.diverse_apis_per_example)), 1, apis.size());
    auto diverse = rng.sample_indices(apis.size(), k);
    std::sort(diverse.begin(), diverse.end());
    std::vector<std::size_t> order = diverse;
    for (std::size_t i = 0; i < apis.size(); ++i) {
        if (std::find(diverse.begin(), diverse.end(), i) == diverse.end()) order.push_back(i);
    }

    ParamOutcome outcome;
    std::vector<std::string> failures;
    with_retries(config_.retry_limit, "PARALLEL", failures, outcome.trace, [&](const std::string& prior) {
        TrackerDelta pending;
        std::vector<Json> args(apis.size());
        Json context = Json::array();
        for (std::size_t i : order) {
            const bool is_diverse = std::find(diverse.begin(), diverse.end(), i) != diverse.end();
            args[i] = is_diverse ? diverse_arguments(*apis[i], trackers, pending, {}, prior, rng)
                                 : cohesive_arguments(*apis[i], context, trackers, prior, rng);
            context.push_back(Json{{"api_name", apis[i]->name}, {"parameters", args[i]}});
        }
        for (std::size_t i = 0; i < apis.size(); ++i) {
            const Verdict v = validate_parameter_set(*apis[i], args[i], false);
            if (!v.accepted) return apis[i]->name + ": " + v.reasoning;
        }
        outcome.arguments = args;
        return std::string();
    });
    Json names = Json::array();
    for (auto i : diverse) names.push_back(apis[i]->name);
    outcome.trace["diverse_apis"] = names;
    outcome.delta = delta_for(apis, outcome.arguments);
    return outcome;
}

ParamOutcome ParamGenerator::sequential(const std::vector<const FunctionSchema*>& apis, const TrackerSet& trackers,
                                        Rng& rng) {
    if (apis.size() < 2) throw InvariantError("SEQUENTIAL needs at least two functions");
    const std::size_t n = apis.size();
    ParamOutcome outcome;
    std::vector<std::string> failures;
    with_retries(config_.retry_limit, "SEQUENTIAL", failures, outcome.trace, [&](const std::string& prior) {
        TrackerDelta pending;
        std::vector<Json> args(n);
        std::vector<Json> rets(n - 1);
        args[n - 1] = diverse_arguments(*apis[n - 1], trackers, pending, {}, prior, rng);
        Verdict v = validate_parameter_set(*apis[n - 1], args[n - 1], false);
        if (!v.accepted) return apis[n - 1]->name + ": " + v.reasoning;
        for (std::size_t step = n - 1; step-- > 0;) {
            rets[step] = generate_return_value(*apis[step], *apis[step + 1], args[step + 1], prior);
            Json later = Json::array();
            for (std::size_t j = step + 1; j < n; ++j) later.push_back(args[j]);
            args[step] = sequential_arguments(*apis[step], rets[step], args[step + 1], later, trackers, prior, rng);
            v = validate_parameter_set(*apis[step], args[step], false);
            if (!v.accepted) return apis[step]->name + ": " + v.reasoning;
            v = validate_return_value(*apis[step], rets[step], args[step], *apis[step + 1], args[step + 1]);
            if (!v.accepted) return apis[step]->name + " return value: " + v.reasoning;
        }
        v = validate_sequential_chain(apis, args, rets);
        if (!v.accepted) return "chain: " + v.reasoning;
        outcome.arguments = args;
        outcome.return_values = rets;
        outcome.trace["chain_validation"] = v.reasoning;
        return std::string();
    });
    outcome.trace["diverse_apis"] = Json::array({apis.back()->name});
    outcome.delta = delta_for(apis, outcome.arguments);
    return outcome;
}

}  // namespace fcgen
