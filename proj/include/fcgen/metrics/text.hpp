#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fcgen {

/// Lowercased alphanumeric runs; everything else separates tokens.
std::vector<std::string> tokenize(std::string_view text);

/// Sentence split on '.', '!' and '?' runs. Text without a terminator is one sentence.
std::vector<std::string> split_sentences(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view separator);

}  // namespace fcgen
