#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fcgen {

struct Tree {
    std::string label;
    std::vector<Tree> children;

    std::size_t size() const;
    bool operator==(const Tree&) const = default;
};

/// Bracketed form, e.g. `(S(NP(DET)(NOUN))(VP(VERB)))`.
std::string serialize_tree(const Tree& tree);
/// Inverse of serialize_tree. Throws FormatError.
Tree parse_tree(std::string_view text);

/// Produces one rooted tree of category symbols per text.
class SyntaxAnalyzer {
public:
    virtual ~SyntaxAnalyzer() = default;
    virtual Tree analyze(std::string_view text) const = 0;
};

/// Rule-based chunker: tokens are tagged from a small closed-class lexicon and
/// suffix rules, then grouped into NP, VP and PP chunks under one clause node
/// per sentence (S, Q for questions, X for exclamations) below ROOT.
class ShallowChunker final : public SyntaxAnalyzer {
public:
    Tree analyze(std::string_view text) const override;
    static std::string tag(std::string_view token);
};

const SyntaxAnalyzer& default_analyzer();

/// Base-2 entropy over the distribution of serialized tree shapes.
double parse_tree_entropy(const std::vector<std::string>& corpus, const SyntaxAnalyzer& analyzer = default_analyzer());

/// Mean unit-cost tree edit distance over unordered pairs; 0 for fewer than two texts.
double avg_tree_edit_distance(const std::vector<std::string>& corpus,
                              const SyntaxAnalyzer& analyzer = default_analyzer());

}  // namespace fcgen
