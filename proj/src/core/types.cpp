#include "fcgen/core/types.hpp"

#include <algorithm>
#include <set>

#include "fcgen/core/error.hpp"

namespace fcgen {

std::string_view to_string(ParameterCategory category) {
    switch (category) {
        case ParameterCategory::Numerical: return "NUMERICAL";
        case ParameterCategory::String: return "STRING";
        case ParameterCategory::Enum: return "ENUM";
        case ParameterCategory::Other: return "OTHER";
    }
    return "OTHER";
}

ParameterCategory parse_category(std::string_view text) {
    if (text == "NUMERICAL") return ParameterCategory::Numerical;
    if (text == "STRING") return ParameterCategory::String;
    if (text == "ENUM") return ParameterCategory::Enum;
    if (text == "OTHER") return ParameterCategory::Other;
    throw FormatError("unknown parameter category '" + std::string(text) + "'");
}

void ParameterSpec::validate() const {
    if (name.empty()) throw InvariantError("parameter with empty name");
    const bool is_enum = category == ParameterCategory::Enum;
    if (is_enum != !enum_values.empty()) {
        throw InvariantError("parameter '" + name +
                             "': ENUM category must coincide with a non-empty enum list");
    }
}

const ParameterSpec* FunctionSchema::find_parameter(std::string_view parameter_name) const {
    for (const auto& p : parameters) {
        if (p.name == parameter_name) return &p;
    }
    return nullptr;
}

std::size_t FunctionSchema::required_count() const {
    return static_cast<std::size_t>(
        std::count_if(parameters.begin(), parameters.end(), [](const auto& p) { return p.required; }));
}

namespace {

void collect_fields(const Json& node, const std::string& prefix, std::vector<ReturnField>& out) {
    if (!node.is_object()) return;
    auto props = node.find("properties");
    if (props == node.end() || !props->is_object()) {
        if (!prefix.empty()) {
            out.push_back({prefix, node.value("type", std::string("object")),
                           node.value("description", std::string())});
        }
        return;
    }
    for (auto it = props->begin(); it != props->end(); ++it) {
        const std::string name = prefix.empty() ? it.key() : prefix + "." + it.key();
        const Json& child = it.value();
        if (child.is_object() && child.contains("properties")) {
            collect_fields(child, name, out);
        } else {
            std::string type = "string";
            std::string description;
            if (child.is_object()) {
                type = child.value("type", std::string("string"));
                description = child.value("description", std::string());
            }
            out.push_back({name, type, description});
        }
    }
}

}  // namespace

std::vector<ReturnField> FunctionSchema::return_fields() const {
    std::vector<ReturnField> fields;
    if (return_schema) collect_fields(*return_schema, "", fields);
    return fields;
}

void FunctionSchema::validate() const {
    if (name.empty()) throw InvariantError("function with empty name");
    std::set<std::string> seen;
    for (const auto& p : parameters) {
        p.validate();
        if (!seen.insert(p.name).second) {
            throw InvariantError("function '" + name + "' declares parameter '" + p.name + "' twice");
        }
    }
}

const FunctionSchema* find_function(const FunctionLibrary& library, std::string_view name) {
    for (const auto& f : library) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

const FunctionSchema& require_function(const FunctionLibrary& library, std::string_view name) {
    if (const auto* f = find_function(library, name)) return *f;
    throw InvariantError("unknown function '" + std::string(name) + "'");
}

std::string_view to_string(ExecutionType type) {
    switch (type) {
        case ExecutionType::Single: return "SINGLE";
        case ExecutionType::Parallel: return "PARALLEL";
        case ExecutionType::Sequential: return "SEQUENTIAL";
        case ExecutionType::MissingParams: return "MISSING_PARAMS";
        case ExecutionType::None: return "NONE";
    }
    return "NONE";
}

ExecutionType parse_execution_type(std::string_view text) {
    for (auto t : kAllExecutionTypes) {
        if (to_string(t) == text) return t;
    }
    throw FormatError("unknown execution type '" + std::string(text) + "'");
}

std::vector<std::string> GeneratedExample::target_names() const {
    std::vector<std::string> names;
    names.reserve(target_invocations.size());
    for (const auto& inv : target_invocations) names.push_back(inv.function_name);
    return names;
}

void GeneratedExample::validate(const FunctionLibrary* library) const {
    auto fail = [this](const std::string& why) {
        throw InvariantError("example '" + id + "': " + why);
    };
    if (id.empty()) throw InvariantError("example with empty id");
    if (query.empty()) fail("empty query");

    const std::size_t n = target_invocations.size();
    switch (execution_type) {
        case ExecutionType::None:
            if (n != 0) fail("NONE example must not carry target invocations");
            break;
        case ExecutionType::Single:
        case ExecutionType::MissingParams:
            if (n != 1) fail("expected exactly one invocation");
            if (target_invocations[0].order_index != 0) fail("single invocation must have order_index 0");
            break;
        case ExecutionType::Parallel:
            if (n < 2) fail("PARALLEL needs at least two invocations");
            for (const auto& inv : target_invocations) {
                if (inv.order_index != 0) fail("PARALLEL invocations must all have order_index 0");
            }
            break;
        case ExecutionType::Sequential:
            if (n < 2) fail("SEQUENTIAL needs at least two invocations");
            for (std::size_t i = 0; i < n; ++i) {
                if (target_invocations[i].order_index != static_cast<int>(i)) {
                    fail("SEQUENTIAL order_index values must be consecutive from 0");
                }
            }
            break;
    }

    const std::size_t expected_returns = execution_type == ExecutionType::Sequential ? n - 1 : 0;
    if (return_values.size() != expected_returns) {
        fail("expected " + std::to_string(expected_returns) + " return values, found " +
             std::to_string(return_values.size()));
    }

    bool has_sentinel = false;
    for (const auto& inv : target_invocations) {
        if (!inv.arguments.is_object()) fail("arguments of '" + inv.function_name + "' are not an object");
        if (std::find(candidate_functions.begin(), candidate_functions.end(), inv.function_name) ==
            candidate_functions.end()) {
            fail("target '" + inv.function_name + "' missing from candidate functions");
        }
        for (auto it = inv.arguments.begin(); it != inv.arguments.end(); ++it) {
            if (it.value().is_string() && it.value().get_ref<const std::string&>() == kMissingSentinel) {
                has_sentinel = true;
            }
        }
        if (library != nullptr) {
            const auto& schema = require_function(*library, inv.function_name);
            for (auto it = inv.arguments.begin(); it != inv.arguments.end(); ++it) {
                if (schema.find_parameter(it.key()) == nullptr) {
                    fail("argument '" + it.key() + "' is not a parameter of '" + schema.name + "'");
                }
            }
        }
    }
    if (execution_type == ExecutionType::MissingParams && !has_sentinel) {
        fail("MISSING_PARAMS example has no omitted parameter");
    }
    if (execution_type != ExecutionType::MissingParams && has_sentinel) {
        fail("missing-parameter sentinel outside a MISSING_PARAMS example");
    }
    std::set<std::string> unique(candidate_functions.begin(), candidate_functions.end());
    if (unique.size() != candidate_functions.size()) fail("duplicate candidate functions");
}

}  // namespace fcgen
