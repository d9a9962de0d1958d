#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fcgen {

using Json = nlohmann::ordered_json;

/// Marks a required argument that was deliberately left out of a MISSING_PARAMS example.
inline constexpr std::string_view kMissingSentinel = "__MISSING__";

enum class ParameterCategory { Numerical, String, Enum, Other };

std::string_view to_string(ParameterCategory category);
ParameterCategory parse_category(std::string_view text);

struct ParameterSpec {
    std::string name;
    std::string description;
    std::string declared_type;
    ParameterCategory category = ParameterCategory::Other;
    std::vector<Json> enum_values;
    bool required = false;

    /// Throws InvariantError when the enum/category pairing or the name is broken.
    void validate() const;
    bool operator==(const ParameterSpec&) const = default;
};

/// One named leaf of a return schema.
struct ReturnField {
    std::string name;
    std::string declared_type;
    std::string description;
};

struct FunctionSchema {
    std::string name;
    std::string description;
    std::vector<ParameterSpec> parameters;
    std::optional<Json> return_schema;

    const ParameterSpec* find_parameter(std::string_view parameter_name) const;
    std::size_t required_count() const;
    /// Flattened return-schema leaves; nested object fields use dotted names.
    std::vector<ReturnField> return_fields() const;
    void validate() const;
    bool operator==(const FunctionSchema&) const = default;
};

using FunctionLibrary = std::vector<FunctionSchema>;

const FunctionSchema* find_function(const FunctionLibrary& library, std::string_view name);
const FunctionSchema& require_function(const FunctionLibrary& library, std::string_view name);

enum class ExecutionType { Single, Parallel, Sequential, MissingParams, None };

inline constexpr ExecutionType kAllExecutionTypes[] = {
    ExecutionType::Single, ExecutionType::Parallel, ExecutionType::Sequential,
    ExecutionType::MissingParams, ExecutionType::None};

std::string_view to_string(ExecutionType type);
ExecutionType parse_execution_type(std::string_view text);

struct Invocation {
    std::string function_name;
    Json arguments = Json::object();
    int order_index = 0;

    bool operator==(const Invocation&) const = default;
};

struct GeneratedExample {
    std::string id;
    ExecutionType execution_type = ExecutionType::Single;
    std::string query;
    std::vector<Invocation> target_invocations;
    std::vector<Json> return_values;
    std::vector<std::string> candidate_functions;
    Json metadata = Json::object();

    /// Structural invariants. When `library` is given, argument names are also
    /// checked against the referenced schemas.
    void validate(const FunctionLibrary* library = nullptr) const;
    std::vector<std::string> target_names() const;
    bool operator==(const GeneratedExample&) const = default;
};

}  // namespace fcgen
