#pragma once

#include <filesystem>
#include <string_view>

#include "fcgen/core/types.hpp"

namespace fcgen {

/// Four-way category of a parameter. Enum values dominate the declared type;
/// booleans, arrays and objects fall into OTHER.
ParameterCategory classify_parameter_type(std::string_view declared_type, bool has_enum_values);

/// Parses one raw parameter definition (`{"type":..., "description":..., "enum":[...]}`).
ParameterSpec parse_parameter(std::string name, const Json& raw, bool required);

/// Parses a function library document: a JSON array of
/// `{"name", "description", "parameters": {"properties": {...}, "required": [...]}, "returns"}`.
FunctionLibrary parse_function_library(const Json& document);
FunctionLibrary load_function_library(const std::filesystem::path& path);

Json function_to_json(const FunctionSchema& function);
Json library_to_json(const FunctionLibrary& library);

}  // namespace fcgen
