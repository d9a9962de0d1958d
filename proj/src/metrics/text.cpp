#include "fcgen/metrics/text.hpp"

#include <cctype>

namespace fcgen {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    auto flush = [&] {
        std::size_t b = current.find_first_not_of(" \t\r\n");
        if (b != std::string::npos) {
            std::size_t e = current.find_last_not_of(" \t\r\n");
            out.push_back(current.substr(b, e - b + 1));
        }
        current.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        current.push_back(c);
        if (c == '.' || c == '!' || c == '?') {
            while (i + 1 < text.size() && (text[i + 1] == '.' || text[i + 1] == '!' || text[i + 1] == '?')) {
                current.push_back(text[++i]);
            }
            // A period inside a number or URL does not end a sentence.
            if (c == '.' && i + 1 < text.size() && !std::isspace(static_cast<unsigned char>(text[i + 1]))) continue;
            flush();
        }
    }
    flush();
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view separator) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += separator;
        out += parts[i];
    }
    return out;
}

}  // namespace fcgen
