#include "fcgen/metrics/syntax.hpp"

#include <cctype>
#include <map>
#include <set>

#include "fcgen/core/error.hpp"
#include "fcgen/metrics/entropy.hpp"
#include "fcgen/metrics/text.hpp"
#include "fcgen/metrics/tree_edit_distance.hpp"

namespace fcgen {

std::size_t Tree::size() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c.size();
    return n;
}

std::string serialize_tree(const Tree& tree) {
    std::string out = "(" + tree.label;
    for (const auto& c : tree.children) out += serialize_tree(c);
    return out + ")";
}

namespace {

Tree parse_node(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '(') throw FormatError("tree: expected '(' at " + std::to_string(pos));
    ++pos;
    Tree t;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')') t.label.push_back(text[pos++]);
    while (pos < text.size() && text[pos] == '(') t.children.push_back(parse_node(text, pos));
    if (pos >= text.size() || text[pos] != ')') throw FormatError("tree: expected ')' at " + std::to_string(pos));
    ++pos;
    return t;
}

const std::map<std::string, std::string>& lexicon() {
    static const std::map<std::string, std::string> m = [] {
        std::map<std::string, std::string> out;
        auto add = [&](const char* tag, std::initializer_list<const char*> words) {
            for (const char* w : words) out[w] = tag;
        };
        add("DET", {"a", "an", "the", "this", "that", "these", "those", "my", "your", "our", "their", "his", "her",
                    "its", "some", "any", "every", "each", "all", "no", "another"});
        add("PRON", {"i", "you", "he", "she", "it", "we", "they", "me", "us", "them", "him", "myself", "something",
                     "anything", "everything", "one"});
        add("PREP", {"in", "on", "at", "for", "with", "from", "to", "of", "by", "about", "into", "over", "under",
                     "between", "during", "before", "after", "near", "within", "without", "via", "using", "like",
                     "per", "through", "across", "around"});
        add("CONJ", {"and", "or", "but", "so", "because", "if", "then", "while", "also", "as"});
        add("AUX", {"can", "could", "would", "should", "will", "may", "might", "must", "do", "does", "did", "is",
                    "are", "was", "were", "be", "been", "am", "have", "has", "had", "need", "want", "let", "s"});
        add("WH", {"what", "which", "who", "whom", "where", "when", "why", "how", "whether"});
        add("INTJ", {"hi", "hey", "hello", "please", "thanks", "thank", "yo", "ok", "okay", "yes", "quick"});
        add("NEG", {"not", "t", "never"});
        add("VERB", {"get", "find", "show", "give", "tell", "book", "make", "check", "search", "list", "send",
                     "create", "convert", "look", "help", "pull", "fetch", "play", "buy", "set", "use", "know",
                     "see", "go", "run", "plan", "compare", "explain", "describe", "recommend", "summarize", "write",
                     "report", "decide", "pack", "stay", "cook", "start", "learn", "work", "prepare", "build",
                     "change", "train", "add", "remove", "open", "read", "watch", "try", "pick", "reserve", "stop"});
        return out;
    }();
    return m;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() > suffix.size() + 1 && s.substr(s.size() - suffix.size()) == suffix;
}

struct Chunk {
    std::string label;
    std::vector<std::string> tags;
};

}  // namespace

Tree parse_tree(std::string_view text) {
    std::size_t pos = 0;
    Tree t = parse_node(text, pos);
    if (pos != text.size()) throw FormatError("tree: trailing characters");
    return t;
}

std::string ShallowChunker::tag(std::string_view token) {
    const std::string t(token);
    if (auto it = lexicon().find(t); it != lexicon().end()) return it->second;
    if (std::isdigit(static_cast<unsigned char>(t[0]))) return "NUM";
    if (ends_with(t, "ly")) return "ADV";
    if (ends_with(t, "ing") || ends_with(t, "ed") || ends_with(t, "ize") || ends_with(t, "ise")) return "VERB";
    if (ends_with(t, "ous") || ends_with(t, "ful") || ends_with(t, "ive") || ends_with(t, "able") ||
        ends_with(t, "ible") || ends_with(t, "al") || ends_with(t, "est") || ends_with(t, "ic") ||
        ends_with(t, "less")) {
        return "ADJ";
    }
    return "NOUN";
}

Tree ShallowChunker::analyze(std::string_view text) const {
    Tree root{"ROOT", {}};
    for (const auto& sentence : split_sentences(text)) {
        const auto tokens = tokenize(sentence);
        if (tokens.empty()) continue;
        const char last = sentence.back();
        Tree clause{last == '?' ? "Q" : (last == '!' ? "X" : "S"), {}};

        std::vector<std::string> tags;
        for (const auto& tok : tokens) tags.push_back(tag(tok));

        std::vector<Chunk> chunks;
        std::size_t i = 0;
        auto take_np = [&](Chunk& c) {
            std::size_t start = i;
            if (i < tags.size() && tags[i] == "DET") c.tags.push_back(tags[i++]);
            while (i < tags.size() && (tags[i] == "ADJ" || tags[i] == "NUM")) c.tags.push_back(tags[i++]);
            bool head = false;
            while (i < tags.size() && (tags[i] == "NOUN" || tags[i] == "PRON" || (head && tags[i] == "NUM"))) {
                c.tags.push_back(tags[i++]);
                head = true;
            }
            return i > start;
        };
        while (i < tags.size()) {
            const std::string& t = tags[i];
            if (t == "DET" || t == "ADJ" || t == "NOUN" || t == "PRON" || t == "NUM") {
                Chunk c{"NP", {}};
                take_np(c);
                chunks.push_back(std::move(c));
            } else if (t == "AUX" || t == "VERB" || t == "NEG" || (t == "ADV" && i + 1 < tags.size() && tags[i + 1] == "VERB")) {
                Chunk c{"VP", {}};
                while (i < tags.size() && (tags[i] == "AUX" || tags[i] == "NEG" || tags[i] == "ADV")) c.tags.push_back(tags[i++]);
                while (i < tags.size() && tags[i] == "VERB") c.tags.push_back(tags[i++]);
                chunks.push_back(std::move(c));
            } else if (t == "PREP") {
                Chunk c{"PP", {tags[i++]}};
                take_np(c);
                chunks.push_back(std::move(c));
            } else {
                chunks.push_back(Chunk{t, {}});
                ++i;
            }
        }
        for (auto& c : chunks) {
            Tree node{c.label, {}};
            for (auto& leaf : c.tags) node.children.push_back(Tree{leaf, {}});
            clause.children.push_back(std::move(node));
        }
        root.children.push_back(std::move(clause));
    }
    return root;
}

const SyntaxAnalyzer& default_analyzer() {
    static const ShallowChunker chunker;
    return chunker;
}

double parse_tree_entropy(const std::vector<std::string>& corpus, const SyntaxAnalyzer& analyzer) {
    if (corpus.empty()) throw DomainError("parse tree entropy: empty corpus");
    std::map<std::string, std::size_t> counts;
    for (const auto& text : corpus) ++counts[serialize_tree(analyzer.analyze(text))];
    std::vector<std::size_t> sizes;
    for (const auto& [_, c] : counts) sizes.push_back(c);
    return entropy_bits(sizes);
}

double avg_tree_edit_distance(const std::vector<std::string>& corpus, const SyntaxAnalyzer& analyzer) {
    if (corpus.size() < 2) return 0.0;
    std::vector<Tree> trees;
    trees.reserve(corpus.size());
    for (const auto& text : corpus) trees.push_back(analyzer.analyze(text));
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i + 1; j < trees.size(); ++j) {
            sum += tree_edit_distance(trees[i], trees[j]);
            ++pairs;
        }
    }
    return sum / static_cast<double>(pairs);
}

}  // namespace fcgen
