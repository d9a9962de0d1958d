#include "fcgen/metrics/readability.hpp"

#include <cctype>

#include "fcgen/core/error.hpp"
#include "fcgen/metrics/text.hpp"

namespace fcgen {

namespace {

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y'; }

}  // namespace

int count_syllables(std::string_view word) {
    std::string w;
    for (char c : word) {
        if (std::isalpha(static_cast<unsigned char>(c))) w.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (w.empty()) return 1;  // numbers and symbols read as one unit
    int groups = 0;
    bool in_vowel = false;
    for (char c : w) {
        const bool v = is_vowel(c);
        if (v && !in_vowel) ++groups;
        in_vowel = v;
    }
    const std::size_t n = w.size();
    if (groups > 1 && w[n - 1] == 'e' && !(n >= 3 && w[n - 2] == 'l' && !is_vowel(w[n - 3]))) --groups;
    return groups < 1 ? 1 : groups;
}

ReadabilityCounts readability_counts(std::string_view text) {
    ReadabilityCounts c;
    for (const auto& sentence : split_sentences(text)) {
        const auto words = tokenize(sentence);
        if (words.empty()) continue;
        ++c.sentences;
        c.words += words.size();
        for (const auto& w : words) c.syllables += static_cast<std::size_t>(count_syllables(w));
    }
    return c;
}

double fkgl_from_counts(const ReadabilityCounts& c) {
    if (c.words == 0 || c.sentences == 0) throw DomainError("fkgl: text has no words");
    const double w = static_cast<double>(c.words);
    return 0.39 * (w / static_cast<double>(c.sentences)) + 11.8 * (static_cast<double>(c.syllables) / w) - 15.59;
}

double fkgl_grade(std::string_view text) { return fkgl_from_counts(readability_counts(text)); }

double mean(const std::vector<double>& values) {
    if (values.empty()) throw DomainError("mean of an empty list");
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double variance(const std::vector<double>& values) {
    const double m = mean(values);
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return s / static_cast<double>(values.size());
}

}  // namespace fcgen
