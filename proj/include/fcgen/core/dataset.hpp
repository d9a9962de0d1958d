#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fcgen/core/types.hpp"

namespace fcgen {

Json example_to_json(const GeneratedExample& example);
/// Strict inverse of example_to_json; every record field is mandatory.
GeneratedExample example_from_json(const Json& record);

/// One compact JSON record, no trailing newline.
std::string serialize_example(const GeneratedExample& example);

/// Writes one record per line. Each example is validated first; a violation is
/// reported with the offending id and nothing is written.
std::size_t write_dataset(const std::vector<GeneratedExample>& examples, const std::filesystem::path& path,
                          const FunctionLibrary* library = nullptr);
void append_example(const GeneratedExample& example, const std::filesystem::path& path);

/// Parses a dataset file; malformed lines raise FormatError carrying the 1-based line number.
std::vector<GeneratedExample> read_dataset(const std::filesystem::path& path);
std::vector<GeneratedExample> read_dataset(std::istream& in);

}  // namespace fcgen
