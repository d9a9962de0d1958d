#include "fcgen/evaluate/linguistic.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "fcgen/core/error.hpp"
#include "fcgen/metrics/entropy.hpp"
#include "fcgen/metrics/lexical.hpp"
#include "fcgen/metrics/readability.hpp"
#include "fcgen/metrics/semantic.hpp"
#include "fcgen/metrics/stats.hpp"
#include "fcgen/metrics/syntax.hpp"
#include "fcgen/metrics/tree_edit_distance.hpp"
#include "fcgen/querygen/ranking.hpp"

namespace fcgen {

namespace {

// Embeddings and pairwise tree distances are computed once per corpus and
// reused by every bootstrap subsample.
struct CorpusCache {
    std::vector<std::string> texts;
    std::vector<EmbeddingVector> embeddings;
    std::vector<std::vector<int>> ted;
};

CorpusCache build_cache(const std::vector<std::string>& corpus, Embedder& embedder) {
    if (corpus.size() < 3) throw DomainError("linguistic metrics need at least 3 queries");
    CorpusCache c{corpus, embedder.embed(corpus), {}};
    std::vector<Tree> trees;
    for (const auto& t : corpus) trees.push_back(default_analyzer().analyze(t));
    c.ted.assign(corpus.size(), std::vector<int>(corpus.size(), 0));
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i + 1; j < trees.size(); ++j) c.ted[i][j] = c.ted[j][i] = tree_edit_distance(trees[i], trees[j]);
    }
    return c;
}

std::array<double, 12> subset_metrics(const CorpusCache& c, const std::vector<std::size_t>& idx) {
    std::vector<std::string> texts;
    std::vector<EmbeddingVector> emb;
    for (auto i : idx) {
        texts.push_back(c.texts[i]);
        emb.push_back(c.embeddings[i]);
    }
    const auto head = ranking_metric_values(texts, emb);
    double ted_sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            ted_sum += c.ted[idx[a]][idx[b]];
            ++pairs;
        }
    }
    std::array<double, 12> out{};
    std::copy(head.begin(), head.end(), out.begin());
    out[8] = simpson_index(texts);
    out[9] = pairs ? ted_sum / static_cast<double>(pairs) : 0.0;
    out[10] = query_cluster_entropy(emb);
    out[11] = semantic_spread(emb);
    return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::vector<MetricSummary> summarize(const std::vector<std::string>& corpus, Embedder& embedder, std::uint64_t seed) {
    const auto cache = build_cache(corpus, embedder);
    const auto full = subset_metrics(cache, all_indices(corpus.size()));
    std::vector<std::array<double, 12>> samples;
    bootstrap(
        corpus.size(),
        [&](const std::vector<std::size_t>& idx) {
            samples.push_back(subset_metrics(cache, idx));
            return samples.back()[0];
        },
        seed);
    std::vector<MetricSummary> out;
    for (std::size_t m = 0; m < kLinguisticMetrics.size(); ++m) {
        std::vector<double> column;
        for (const auto& s : samples) column.push_back(s[m]);
        out.push_back({std::string(kLinguisticMetrics[m]), full[m], std::sqrt(variance(column))});
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

}  // namespace

std::array<double, 12> linguistic_metrics(const std::vector<std::string>& corpus, Embedder& embedder) {
    return subset_metrics(build_cache(corpus, embedder), all_indices(corpus.size()));
}

CorpusProfile analyze_corpus(const std::vector<std::string>& corpus, Embedder& embedder, std::uint64_t seed) {
    return {corpus.size(), summarize(corpus, embedder, seed)};
}

DiversityReport compare_linguistic_diversity(const std::vector<std::string>& corpus_a,
                                             const std::vector<std::string>& corpus_b, Embedder& embedder,
                                             std::uint64_t seed, std::string label_a, std::string label_b) {
    DiversityReport r{std::move(label_a), std::move(label_b), corpus_a.size(), corpus_b.size(), seed, {}};
    const auto a = summarize(corpus_a, embedder, seed);
    const auto b = summarize(corpus_b, embedder, seed);
    for (std::size_t m = 0; m < a.size(); ++m) {
        const auto sig = significance(a[m].value, a[m].std, b[m].value, b[m].std);
        r.rows.push_back({a[m].metric, a[m].value, a[m].std, b[m].value, b[m].std, sig.significant, sig.direction});
    }
    return r;
}

std::vector<std::string> dataset_queries(const std::vector<GeneratedExample>& examples) {
    std::vector<std::string> out;
    out.reserve(examples.size());
    for (const auto& e : examples) out.push_back(e.query);
    return out;
}

Json profile_to_json(const CorpusProfile& profile) {
    Json metrics = Json::array();
    for (const auto& m : profile.metrics) metrics.push_back({{"metric", m.metric}, {"value", m.value}, {"std", m.std}});
    return {{"size", profile.size}, {"metrics", metrics}};
}

std::string profile_table(const CorpusProfile& profile) {
    std::ostringstream os;
    os << pad("metric", 24) << pad("value", 12) << "std\n";
    for (const auto& m : profile.metrics) os << pad(m.metric, 24) << pad(fmt(m.value), 12) << fmt(m.std) << '\n';
    return os.str();
}

Json report_to_json(const DiversityReport& report) {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"metric", r.metric},
                        {"value_a", r.value_a},
                        {"std_a", r.std_a},
                        {"value_b", r.value_b},
                        {"std_b", r.std_b},
                        {"significant", r.significant},
                        {"direction", r.direction}});
    }
    return {{"label_a", report.label_a}, {"label_b", report.label_b}, {"size_a", report.size_a},
            {"size_b", report.size_b},   {"seed", report.seed},       {"rows", rows}};
}

std::string report_table(const DiversityReport& report) {
    std::ostringstream os;
    os << pad("metric", 24) << pad(report.label_a, 26) << pad(report.label_b, 26) << "sig\n";
    for (const auto& r : report.rows) {
        const std::string sig = !r.significant ? "" : (r.direction > 0 ? report.label_a : report.label_b);
        os << pad(r.metric, 24) << pad(fmt(r.value_a) + " +/- " + fmt(r.std_a), 26)
           << pad(fmt(r.value_b) + " +/- " + fmt(r.std_b), 26) << sig << '\n';
    }
    return os.str();
}

}  // namespace fcgen
