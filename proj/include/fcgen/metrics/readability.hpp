#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fcgen {

/// Vowel-group count with a silent trailing 'e' rule; at least 1 per word.
int count_syllables(std::string_view word);

struct ReadabilityCounts {
    std::size_t sentences = 0;
    std::size_t words = 0;
    std::size_t syllables = 0;
};

ReadabilityCounts readability_counts(std::string_view text);

/// Flesch-Kincaid grade level. Throws DomainError for text without words.
double fkgl_grade(std::string_view text);
double fkgl_from_counts(const ReadabilityCounts& counts);

double mean(const std::vector<double>& values);
/// Population variance (divides by n). Throws DomainError on an empty input.
double variance(const std::vector<double>& values);

}  // namespace fcgen
