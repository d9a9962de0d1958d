#include "fcgen/core/dataset.hpp"

#include <fstream>
#include <istream>

#include "fcgen/core/error.hpp"

namespace fcgen {

namespace {

const char* const kFields[] = {"id",           "execution_type",      "query",   "target_invocations",
                               "return_values", "candidate_functions", "metadata"};

const Json& field(const Json& record, const char* name) {
    auto it = record.find(name);
    if (it == record.end()) throw FormatError(std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

Json example_to_json(const GeneratedExample& example) {
    Json invocations = Json::array();
    for (const auto& inv : example.target_invocations) {
        Json item = Json::object();
        item["function_name"] = inv.function_name;
        item["arguments"] = inv.arguments;
        item["order_index"] = inv.order_index;
        invocations.push_back(std::move(item));
    }
    Json record = Json::object();
    record["id"] = example.id;
    record["execution_type"] = std::string(to_string(example.execution_type));
    record["query"] = example.query;
    record["target_invocations"] = std::move(invocations);
    record["return_values"] = example.return_values;
    record["candidate_functions"] = example.candidate_functions;
    record["metadata"] = example.metadata;
    return record;
}

GeneratedExample example_from_json(const Json& record) {
    if (!record.is_object()) throw FormatError("record is not an object");
    for (auto it = record.begin(); it != record.end(); ++it) {
        bool known = false;
        for (const char* f : kFields) known = known || it.key() == f;
        if (!known) throw FormatError("unexpected field '" + it.key() + "'");
    }
    GeneratedExample ex;
    try {
        ex.id = field(record, "id").get<std::string>();
        ex.execution_type = parse_execution_type(field(record, "execution_type").get<std::string>());
        ex.query = field(record, "query").get<std::string>();
        for (const auto& item : field(record, "target_invocations")) {
            Invocation inv;
            inv.function_name = field(item, "function_name").get<std::string>();
            inv.arguments = field(item, "arguments");
            inv.order_index = field(item, "order_index").get<int>();
            ex.target_invocations.push_back(std::move(inv));
        }
        const Json& returns = field(record, "return_values");
        if (!returns.is_array()) throw FormatError("'return_values' must be an array");
        ex.return_values.assign(returns.begin(), returns.end());
        ex.candidate_functions = field(record, "candidate_functions").get<std::vector<std::string>>();
        ex.metadata = field(record, "metadata");
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(e.what());
    }
    return ex;
}

std::string serialize_example(const GeneratedExample& example) {
    return example_to_json(example).dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

std::size_t write_dataset(const std::vector<GeneratedExample>& examples, const std::filesystem::path& path,
                          const FunctionLibrary* library) {
    std::string buffer;
    for (const auto& ex : examples) {
        ex.validate(library);
        buffer += serialize_example(ex);
        buffer += '\n';
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write dataset '" + path.string() + "'");
    out << buffer;
    return examples.size();
}

void append_example(const GeneratedExample& example, const std::filesystem::path& path) {
    example.validate();
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw Error("cannot append to dataset '" + path.string() + "'");
    out << serialize_example(example) << '\n';
    out.flush();
}

std::vector<GeneratedExample> read_dataset(std::istream& in) {
    std::vector<GeneratedExample> examples;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        try {
            examples.push_back(example_from_json(Json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw FormatError("line " + std::to_string(line_number) + ": " + e.what());
        } catch (const Error& e) {
            throw FormatError("line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    return examples;
}

std::vector<GeneratedExample> read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open dataset '" + path.string() + "'");
    return read_dataset(in);
}

}  // namespace fcgen
