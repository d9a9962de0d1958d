#include "fcgen/core/library.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "fcgen/core/error.hpp"

namespace fcgen {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

// "array" + items.type -> "array of <type>" so the declared type stays descriptive.
std::string declared_type_of(const Json& raw) {
    if (!raw.contains("type")) return {};
    const Json& t = raw.at("type");
    if (t.is_array()) {
        std::string joined;
        for (const auto& part : t) {
            if (!joined.empty()) joined += " | ";
            joined += part.get<std::string>();
        }
        return joined;
    }
    std::string type = t.get<std::string>();
    if (type == "array" && raw.contains("items") && raw.at("items").is_object() &&
        raw.at("items").contains("type") && raw.at("items").at("type").is_string()) {
        type += " of " + raw.at("items").at("type").get<std::string>();
    }
    return type;
}

}  // namespace

ParameterCategory classify_parameter_type(std::string_view declared_type, bool has_enum_values) {
    if (has_enum_values) return ParameterCategory::Enum;
    const std::string t = lowercase(trim(declared_type));
    static const std::set<std::string> numerical = {"integer", "int", "number", "float", "double",
                                                    "long", "int32", "int64", "float32", "float64"};
    static const std::set<std::string> textual = {"string", "str", "text"};
    if (numerical.count(t)) return ParameterCategory::Numerical;
    if (textual.count(t)) return ParameterCategory::String;
    return ParameterCategory::Other;
}

ParameterSpec parse_parameter(std::string name, const Json& raw, bool required) {
    if (!raw.is_object()) throw FormatError("parameter '" + name + "' is not an object");
    ParameterSpec spec;
    spec.name = std::move(name);
    spec.description = raw.value("description", std::string());
    spec.declared_type = declared_type_of(raw);
    if (spec.declared_type.empty()) {
        throw FormatError("parameter '" + spec.name + "' has no declared type");
    }
    if (raw.contains("enum")) {
        const Json& values = raw.at("enum");
        if (!values.is_array()) throw FormatError("parameter '" + spec.name + "': enum must be an array");
        spec.enum_values.assign(values.begin(), values.end());
    }
    spec.category = classify_parameter_type(spec.declared_type, !spec.enum_values.empty());
    spec.required = required;
    spec.validate();
    return spec;
}

FunctionLibrary parse_function_library(const Json& document) {
    if (!document.is_array()) throw FormatError("function library must be a JSON array");
    FunctionLibrary library;
    std::set<std::string> names;
    for (std::size_t index = 0; index < document.size(); ++index) {
        const Json& entry = document[index];
        const std::string where = "function entry #" + std::to_string(index);
        try {
            if (!entry.is_object()) throw FormatError("not an object");
            if (!entry.contains("name") || !entry.at("name").is_string()) {
                throw FormatError("missing string field 'name'");
            }
            FunctionSchema fn;
            fn.name = entry.at("name").get<std::string>();
            fn.description = entry.value("description", std::string());
            if (entry.contains("parameters") && !entry.at("parameters").is_null()) {
                const Json& params = entry.at("parameters");
                if (!params.is_object()) throw FormatError("'parameters' must be an object");
                std::set<std::string> required;
                if (params.contains("required")) {
                    for (const auto& r : params.at("required")) required.insert(r.get<std::string>());
                }
                if (params.contains("properties")) {
                    const Json& props = params.at("properties");
                    if (!props.is_object()) throw FormatError("'properties' must be an object");
                    for (auto it = props.begin(); it != props.end(); ++it) {
                        fn.parameters.push_back(
                            parse_parameter(it.key(), it.value(), required.count(it.key()) > 0));
                    }
                }
                for (const auto& r : required) {
                    if (fn.find_parameter(r) == nullptr) {
                        throw FormatError("required parameter '" + r + "' is not declared");
                    }
                }
            }
            if (entry.contains("returns") && !entry.at("returns").is_null()) {
                fn.return_schema = entry.at("returns");
            }
            fn.validate();
            if (!names.insert(fn.name).second) {
                throw FormatError("duplicate function name '" + fn.name + "'");
            }
            library.push_back(std::move(fn));
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(where + ": " + e.what());
        } catch (const Error& e) {
            throw FormatError(where + ": " + e.what());
        }
    }
    return library;
}

FunctionLibrary load_function_library(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open function library '" + path.string() + "'");
    Json document;
    try {
        document = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_function_library(document);
}

Json function_to_json(const FunctionSchema& function) {
    Json properties = Json::object();
    Json required = Json::array();
    for (const auto& p : function.parameters) {
        Json prop = Json::object();
        // Round-trip "array of X" back into JSON-schema form.
        const std::string prefix = "array of ";
        if (p.declared_type.rfind(prefix, 0) == 0) {
            prop["type"] = "array";
            prop["items"] = Json{{"type", p.declared_type.substr(prefix.size())}};
        } else {
            prop["type"] = p.declared_type;
        }
        prop["description"] = p.description;
        if (!p.enum_values.empty()) prop["enum"] = p.enum_values;
        properties[p.name] = std::move(prop);
        if (p.required) required.push_back(p.name);
    }
    Json out = Json::object();
    out["name"] = function.name;
    out["description"] = function.description;
    out["parameters"] = Json{{"type", "object"}, {"properties", properties}, {"required", required}};
    if (function.return_schema) out["returns"] = *function.return_schema;
    return out;
}

Json library_to_json(const FunctionLibrary& library) {
    Json out = Json::array();
    for (const auto& f : library) out.push_back(function_to_json(f));
    return out;
}

}  // namespace fcgen
