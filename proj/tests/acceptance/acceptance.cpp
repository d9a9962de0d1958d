// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fcgen/core/dataset.hpp"
#include "fcgen/core/rng.hpp"
#include "fcgen/distractors/distractors.hpp"
#include "fcgen/evaluate/linguistic.hpp"
#include "fcgen/metrics/dbscan.hpp"
#include "fcgen/metrics/entropy.hpp"
#include "fcgen/metrics/fusion.hpp"
#include "fcgen/metrics/semantic.hpp"
#include "fcgen/metrics/stats.hpp"
#include "fcgen/paramgen/paramgen.hpp"
#include "fcgen/pipeline/generator.hpp"
#include "fcgen/providers/catalog.hpp"
#include "fcgen/providers/scripted_llm.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fcgen;
using fcgen::testing::fixture;
using fcgen::testing::fixture_library;
namespace sg = fcgen::signatures;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) detail = what;
        ok = ok && condition;
    }
};

std::string fmt(double v, int precision = 4) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(precision);
    s << v;
    return s.str();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1 --------------------------------------------------------------------------

Check cluster_entropy_maximum() {
    Check c;
    HashEmbedder e;
    std::vector<Json> numbers, same, strings;
    for (int i = 0; i < 20; ++i) {
        numbers.push_back(10.0 * i);
        same.push_back(3.5);
        const std::string s = std::to_string(i);
        strings.push_back("m" + s + "a m" + s + "b m" + s + "c m" + s + "d");
    }
    const double h = value_cluster_entropy(numbers, ParameterCategory::Numerical, e);
    const double hs = value_cluster_entropy(strings, ParameterCategory::String, e);
    c.expect(std::fabs(h - std::log2(20.0)) < 1e-9, "numeric entropy " + fmt(h, 12));
    c.expect(std::fabs(hs - std::log2(20.0)) < 1e-9, "string entropy " + fmt(hs, 12));
    c.expect(std::fabs(h - 4.3219) < 5e-5, "not 4.3219");
    c.expect(value_cluster_entropy(same, ParameterCategory::Numerical, e) == 0.0, "identical values not 0");
    c.expect(value_cluster_entropy(std::vector<Json>(20, "Paris"), ParameterCategory::String, e) == 0.0,
             "identical strings not 0");
    c.detail = c.ok ? "H(20 distant)=" + fmt(h, 10) + " bits, H(20 identical)=0" : c.detail;
    return c;
}

// 2 --------------------------------------------------------------------------

Check dbscan_oracle() {
    Check c;
    std::mt19937_64 gen(2024);
    int euclid = 0, cosine = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = std::uniform_int_distribution<int>(1, 50)(gen);
        const auto dim = std::uniform_int_distribution<int>(1, 4)(gen);
        const auto min_samples = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 4)(gen));
        const auto metric = trial % 2 ? DistanceMetric::Cosine : DistanceMetric::Euclidean;
        (metric == DistanceMetric::Cosine ? cosine : euclid)++;
        // A few blobs so that clusters, borders and noise all occur.
        std::normal_distribution<double> centre(0.0, 3.0), jitter(0.0, 0.4);
        std::vector<Point> centres(3, Point(static_cast<std::size_t>(dim)));
        for (auto& p : centres)
            for (auto& x : p) x = centre(gen);
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) {
            Point p = centres[static_cast<std::size_t>(i % 3)];
            for (auto& x : p) x += jitter(gen);
            if (metric == DistanceMetric::Cosine && std::all_of(p.begin(), p.end(), [](double x) { return x == 0.0; }))
                p[0] = 1.0;
            pts.push_back(std::move(p));
        }
        const double eps = metric == DistanceMetric::Cosine ? std::uniform_real_distribution<double>(0.01, 0.3)(gen)
                                                            : std::uniform_real_distribution<double>(0.2, 1.5)(gen);
        const auto got = dbscan(pts, eps, min_samples, metric);
        const auto want = oracle::dbscan(pts, eps, min_samples, metric);
        c.expect(got == want, "instance " + std::to_string(trial) + " differs");
    }
    if (c.ok) c.detail = "200/200 partitions identical (" + std::to_string(euclid) + " euclidean, " +
                         std::to_string(cosine) + " cosine)";
    return c;
}

// 3 --------------------------------------------------------------------------

Check vendi_exactness() {
    Check c;
    const std::size_t n = 7;
    std::vector<EmbeddingVector> same(n, EmbeddingVector{0.6, 0.8, 0.0}), basis;
    for (std::size_t i = 0; i < n; ++i) {
        EmbeddingVector v(n, 0.0);
        v[i] = 1.0;
        basis.push_back(v);
    }
    const EmbeddingVector a{1, 0, 0}, b{0, 0, 1};
    const double v1 = vendi_score(same), vn = vendi_score(basis), v2 = vendi_score({a, a, b, b});
    c.expect(std::fabs(v1 - 1.0) < 1e-6, "identical: " + fmt(v1, 9));
    c.expect(std::fabs(vn - static_cast<double>(n)) < 1e-6, "orthogonal: " + fmt(vn, 9));
    c.expect(std::fabs(v2 - 2.0) < 1e-6, "two pairs: " + fmt(v2, 9));
    if (c.ok) c.detail = "identical=" + fmt(v1, 9) + ", orthogonal(7)=" + fmt(vn, 9) + ", two pairs=" + fmt(v2, 9);
    return c;
}

// 4 --------------------------------------------------------------------------

FusedRanking fuse_scores(const std::vector<std::vector<double>>& scores) {
    std::vector<std::vector<int>> ranks;
    for (const auto& s : scores) ranks.push_back(competition_ranks(s));
    return rrf_fuse(ranks, 60);
}

Check rrf_properties() {
    Check c;
    std::mt19937_64 gen(61);
    std::uniform_int_distribution<int> level(0, 5);  // coarse levels so ties occur
    const std::vector<std::function<double(double)>> transforms{
        [](double x) { return std::exp(x); }, [](double x) { return x * x * x; },
        [](double x) { return 2.0 * x + 5.0; }, [](double x) { return std::atan(x); }};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t cands = 6;
        std::vector<std::vector<double>> scores(8, std::vector<double>(cands));
        for (auto& row : scores)
            for (auto& x : row) x = level(gen) - 2.5;
        const std::size_t dominant = static_cast<std::size_t>(trial) % cands;
        if (trial % 2 == 0)
            for (auto& row : scores) row[dominant] = 10.0;
        const auto base = fuse_scores(scores);
        if (trial % 2 == 0) c.expect(base.order.front() == dominant, "dominant candidate not first");
        auto mapped = scores;
        for (std::size_t m = 0; m < mapped.size(); ++m)
            for (auto& x : mapped[m]) x = transforms[(m + static_cast<std::size_t>(trial)) % transforms.size()](x);
        c.expect(fuse_scores(mapped).order == base.order, "ordering changed under monotone transform");
    }
    const auto top = rrf_fuse(std::vector<std::vector<int>>(8, std::vector<int>{1, 2}), 60);
    c.expect(std::fabs(top.scores[0] - 8.0 / 61.0) < 1e-12, "all-rank-1 score " + fmt(top.scores[0], 15));
    if (c.ok) c.detail = "200 random trials invariant, all-rank-1 score=" + fmt(top.scores[0], 15);
    return c;
}

// 5 --------------------------------------------------------------------------

/// Candidate value mock with 20 well-separated regions: each batch covers
/// every region once plus five repeats, shuffled.
class RegionMock {
public:
    explicit RegionMock(std::uint64_t seed) : rng_(seed) {}

    std::vector<std::string> batch(std::size_t size) {
        std::vector<int> regions;
        for (int r = 0; r < 20; ++r) regions.push_back(r);
        while (regions.size() < size) regions.push_back(static_cast<int>(rng_.uniform_index(20)));
        rng_.shuffle(regions);
        std::vector<std::string> out;
        for (int r : regions) out.push_back(value(r));
        return out;
    }

private:
    std::string value(int region) {
        std::string v;
        for (int k = 0; k < 12; ++k) v += "reg" + std::to_string(region) + "tok" + std::to_string(k) + " ";
        return v + "variant" + std::to_string(counter_++);
    }

    Rng rng_;
    std::size_t counter_ = 0;
};

Check greedy_uplift() {
    Check c;
    FunctionSchema f;
    f.name = "lookup_place";
    f.description = "looks up a place by name";
    ParameterSpec p;
    p.name = "place";
    p.description = "name of the place";
    p.declared_type = "string";
    p.category = ParameterCategory::String;
    p.required = true;
    f.parameters = {p};
    const FunctionLibrary lib{f};
    HashEmbedder embedder;
    const auto groups = group_parameters(lib, embedder);
    RunConfig config;
    const auto& gen_sig = sg::get(sg::kGenerateMultipleStringParameters);

    int wins = 0, reached = 0;
    double sum_greedy = 0.0, sum_random = 0.0, min_greedy = 99.0;
    for (int trial = 0; trial < 100; ++trial) {
        RegionMock mock(5000 + static_cast<std::uint64_t>(trial));
        ScriptedLlm llm;
        llm.on_call(gen_sig.name, [&](const ChatRequest& req) {
            const auto want = static_cast<std::size_t>(std::stoul(req.inputs.at("num_candidates")));
            return render_signature_output(gen_sig, {{"reasoning", "spread"}, {"generated_values", Json(mock.batch(want)).dump()}});
        });
        llm.on_fields(std::string(sg::kParameterSetValidator), FieldValues{{"reasoning", "fine"}, {"is_valid", "YES"}});
        ParamGenerator gen(lib, groups, config, llm, embedder);
        Rng rng(static_cast<std::uint64_t>(trial));
        TrackerSet greedy(groups.size());
        for (int step = 0; step < 20; ++step) commit_to_trackers(greedy, gen.single(f, greedy, rng).delta);

        RegionMock naive_mock(9000 + static_cast<std::uint64_t>(trial));
        Rng pick(static_cast<std::uint64_t>(trial) + 77);
        std::vector<Json> naive;
        for (int step = 0; step < 20; ++step) naive.push_back(naive_mock.batch(25)[pick.uniform_index(25)]);

        const double hg = value_cluster_entropy(greedy.values(0), ParameterCategory::String, embedder);
        const double hr = value_cluster_entropy(naive, ParameterCategory::String, embedder);
        sum_greedy += hg;
        sum_random += hr;
        min_greedy = std::min(min_greedy, hg);
        reached += hg >= 4.0;
        wins += hg > hr;
    }
    const double mean_greedy = sum_greedy / 100.0;
    c.expect(mean_greedy >= 4.0, "mean greedy entropy " + fmt(mean_greedy));
    c.expect(wins >= 95, "greedy beat random in " + std::to_string(wins) + "/100");
    c.detail = "mean greedy H=" + fmt(mean_greedy) + " bits (min " + fmt(min_greedy) + ", " + std::to_string(reached) +
               "/100 trials >= 4.0), mean random H=" + fmt(sum_random / 100.0) + ", greedy > random in " +
               std::to_string(wins) + "/100" + (c.ok ? "" : " [" + c.detail + "]");
    return c;
}

// 6 --------------------------------------------------------------------------

Check end_to_end_determinism() {
    Check c;
    RunConfig config = load_config(fixture("mock_config.json"));
    HashEmbedder embedder(config.embedder.dimension);
    SimulatedLlm llm;
    const auto artifact = run_preprocess(fixture_library(), embedder, config);
    fcgen::testing::TempDir dir("acceptance");
    auto run = [&](const std::string& name, bool resume, std::optional<std::size_t> stop) {
        Generator gen(artifact, config, llm, embedder);
        GenerateOptions o;
        o.n = 25;
        o.out = dir / name;
        o.resume = resume;
        o.stop_after = stop;
        return gen.run(o);
    };
    c.expect(run("a.jsonl", false, std::nullopt).complete, "first run incomplete");
    run("b.jsonl", false, std::nullopt);
    c.expect(!run("c.jsonl", false, 10).complete, "interrupted run claims completion");
    c.expect(run("c.jsonl", true, std::nullopt).complete, "resumed run incomplete");

    const auto a = slurp(dir / "a.jsonl");
    c.expect(a == slurp(dir / "b.jsonl"), "two runs differ");
    c.expect(a == slurp(dir / "c.jsonl"), "interrupted/resumed run differs");
    const auto ds = read_dataset(dir / "a.jsonl");
    c.expect(ds.size() == 25, "dataset has " + std::to_string(ds.size()) + " examples");
    std::set<ExecutionType> types;
    for (const auto& ex : ds) {
        types.insert(ex.execution_type);
        try {
            ex.validate(&fixture_library());
        } catch (const Error& e) {
            c.expect(false, ex.id + ": " + e.what());
        }
    }
    c.expect(types.size() == 5, "only " + std::to_string(types.size()) + " execution types");
    if (c.ok) c.detail = "25 examples, 5 types, valid, byte-identical across 2 runs and an interrupt at 10 + resume";
    return c;
}

// 7 --------------------------------------------------------------------------

Check statistics() {
    Check c;
    std::vector<double> xs;
    for (int i = 0; i < 60; ++i) xs.push_back(std::sin(i * 1.7) * 10.0);
    auto metric = [&](const std::vector<std::size_t>& idx) {
        double s = 0.0;
        for (auto i : idx) s += xs[i] * xs[i];
        return s / static_cast<double>(idx.size());
    };
    const auto r1 = bootstrap(xs.size(), metric, 99), r2 = bootstrap(xs.size(), metric, 99);
    Rng rng(99);
    std::vector<double> expect;
    for (int i = 0; i < 100; ++i) expect.push_back(metric(rng.sample_indices(60, 48)));
    double m = 0.0, v = 0.0;
    for (double s : expect) m += s / 100.0;
    for (double s : expect) v += (s - m) * (s - m) / 100.0;
    c.expect(r1.std == r2.std && r1.samples == expect && r1.std == std::sqrt(v), "bootstrap not reproducible");

    const auto sig = significance(4.32, 0.01, 3.40, 0.16);
    c.expect(sig.significant && sig.direction == 1, "significance verdict");
    const double p = mcnemar(5, 15);
    const double o = oracle::binomial_two_sided(5, 15);
    c.expect(std::fabs(p - 0.0414) <= 5e-4 && std::fabs(p - o) < 1e-12, "McNemar p=" + fmt(p, 6));
    const auto holm = holm_bonferroni({0.01, 0.03, 0.04});
    std::string decisions;
    for (bool d : holm) decisions += d ? "R" : "-";
    c.expect(holm_bonferroni({0.03, 0.03, 0.03}) == std::vector<bool>{false, false, false}, "Holm rejected {0.03 x3}");
    c.expect(holm == std::vector<bool>{true, true, true},
             "Holm on {0.01,0.03,0.04} gives " + decisions + ": 0.03 > 0.05/2 halts the step-down, expected RRR");
    const std::string summary = "bootstrap std=" + fmt(r1.std, 6) + " reproduced, (4.32,0.01) vs (3.40,0.16) significant, McNemar p=" +
                                fmt(p, 6) + " (oracle " + fmt(o, 6) + ")";
    c.detail = c.ok ? summary + ", Holm rejects 3/3" : summary + "; " + c.detail;
    return c;
}

// 8 --------------------------------------------------------------------------

Check metric_direction() {
    Check c;
    HashEmbedder e;
    const auto varied = dataset_queries(read_dataset(fixture("corpus_varied.jsonl")));
    const auto repetitive = dataset_queries(read_dataset(fixture("corpus_repetitive.jsonl")));
    const auto report = compare_linguistic_diversity(varied, repetitive, e, 8, "varied", "repetitive");
    int higher = 0;
    std::string losers;
    for (const auto& row : report.rows) {
        if (row.value_a > row.value_b) {
            ++higher;
        } else {
            losers += (losers.empty() ? "" : ",") + row.metric;
            if (row.metric != "var_length") c.expect(false, row.metric + " not higher for varied");
        }
    }
    c.expect(higher >= 11, "varied higher on " + std::to_string(higher) + "/12");
    if (c.ok) c.detail = "varied higher on " + std::to_string(higher) + "/12" + (losers.empty() ? "" : " (not: " + losers + ")");
    return c;
}

// 9 --------------------------------------------------------------------------

Check distractor_pipeline() {
    Check c;
    const auto sharp = elbow_cutoff({0.9, 0.88, 0.86, 0.5, 0.48}, 1);
    c.expect(sharp.elbow == 2 && sharp.keep == 3, "sharp-drop trace");
    const auto linear = elbow_cutoff({0.9, 0.8, 0.7, 0.6, 0.5}, 4);
    c.expect(linear.elbow == 1 && linear.keep == 4, "linear trace");

    const std::vector<std::string> names{"get_weather",        "search_hotels",    "get_hotel_reviews", "get_video_details",
                                         "book_restaurant",    "convert_currency", "get_stock_history", "create_playlist"};
    const std::vector<int> scripted{5, 1, 2, 3, 4, 1, 2, 5};
    std::vector<ScoredFunction> scored;
    for (std::size_t i = 0; i < names.size(); ++i) scored.push_back({names[i], 1.0 - 0.1 * static_cast<double>(i)});
    Json answer = Json::array();
    for (std::size_t i = 0; i < names.size(); ++i) answer.push_back(Json{{"api_name", names[i]}, {"score", scripted[i]}});
    ScriptedLlm llm;
    llm.on_fields(std::string(sg::kBatchApiRelevanceScorer), FieldValues{{"reasoning", "r"}, {"scores", answer.dump()}});
    const auto ratings = score_plausibility("q", names, {"get_weather"}, fixture_library(), llm, 2);
    c.expect(ratings == scripted, "scripted ratings not recovered");

    // Targets include a top-rated one and a lowest-rated one.
    const std::vector<std::string> targets{"get_weather", "convert_currency"};
    for (auto type : kAllExecutionTypes) {
        const auto kept = filter_by_plausibility(scored, ratings, targets, type);
        std::set<std::string> want;
        const int limit = type == ExecutionType::MissingParams ? 1 : 2;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (ratings[i] <= limit || std::count(targets.begin(), targets.end(), names[i])) want.insert(names[i]);
        std::set<std::string> got;
        for (const auto& k : kept) got.insert(k.name);
        c.expect(got == want, std::string("filter mismatch for ") + std::string(to_string(type)));
        c.expect(got.count("get_weather") == 1, "target filtered");
    }
    if (c.ok) c.detail = "elbow traces (e=2,keep=3) and (e=1,keep=4) exact, thresholds <=2 / <=1 (MISSING_PARAMS), targets kept";
    return c;
}

// 10 -------------------------------------------------------------------------

Check wire_format() {
    Check c;
    std::mt19937_64 gen(10);
    const std::string alphabet = "abcdefghijklmnopqrstuvwxyz_";
    const std::string text_chars = "abcXYZ 0123456789{}[]\"':,.!?#-_\n\t()";
    auto random_name = [&](std::set<std::string>& used) {
        for (;;) {
            std::string s(1, alphabet[gen() % 26]);
            const auto len = 1 + gen() % 12;
            for (std::size_t i = 0; i < len; ++i) s += alphabet[gen() % alphabet.size()];
            if (s != "completed" && used.insert(s).second) return s;
        }
    };
    auto random_text = [&]() {
        std::string s;
        const auto len = gen() % 120;
        for (std::size_t i = 0; i < len; ++i) s += text_chars[gen() % text_chars.size()];
        if (gen() % 4 == 0) s += "[[ not a marker ]]";
        const auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return std::string();
        return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
    };
    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        PromptSignature sig;
        sig.name = "Random" + std::to_string(trial);
        sig.objective = "objective " + random_text();
        std::set<std::string> used;
        FieldValues inputs, outputs;
        for (std::size_t i = 0, n = gen() % 4; i < n; ++i) {
            sig.inputs.push_back({random_name(used), random_text()});
            inputs[sig.inputs.back().name] = random_text();
        }
        for (std::size_t i = 0, n = 1 + gen() % 4; i < n; ++i) {
            sig.outputs.push_back({random_name(used), random_text()});
            outputs[sig.outputs.back().name] = random_text();
        }
        sig.validate();
        const auto prompt = render_signature(sig, inputs);
        for (const auto& [k, v] : inputs) c.expect(prompt.find(field_marker(k) + "\n" + v + "\n") != std::string::npos, "input block");
        c.expect(parse_signature_output(render_signature_output(sig, outputs), sig) == outputs,
                 "round trip failed for signature " + std::to_string(trial));
    }
    const auto compat = parse_signature_output(slurp(fixture("wire_schema_compatibility.txt")),
                                               sg::get(sg::kValidateSequentialSchemaCompatibility));
    c.expect(compat.at("is_compatible") == "NO", "is_compatible=" + compat.at("is_compatible"));
    c.expect(compat.at("reasoning").rfind("(1) convert_currency", 0) == 0, "compatibility reasoning");
    const auto judge = parse_signature_output(slurp(fixture("wire_api_query_judge.txt")), sg::get(sg::kApiQueryJudge));
    c.expect(judge.at("is_reasonable") == "YES", "is_reasonable=" + judge.at("is_reasonable"));
    const auto layout = render_signature_messages(sg::get(sg::kApiQueryJudge), {{"query", "q"}, {"api_schema", "s"}, {"target_parameters", "t"}});
    c.expect(layout.system.find("[[ ## query ## ]]\n{query}\n\n[[ ## api_schema ## ]]\n{api_schema}\n\n"
                                "[[ ## target_parameters ## ]]\n{target_parameters}\n\n[[ ## reasoning ## ]]\n{reasoning}\n\n"
                                "[[ ## is_reasonable ## ]]\n{is_reasonable}\n\n[[ ## completed ## ]]") != std::string::npos,
             "judge layout block differs");
    if (c.ok) c.detail = "1000 random signatures round-trip, is_compatible=NO, is_reasonable=YES recovered";
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Check()> run;
        double budget_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "cluster-entropy maximum", cluster_entropy_maximum, 1.0},
        {2, "DBSCAN oracle equivalence", dbscan_oracle, 30.0},
        {3, "Vendi exactness", vendi_exactness, 0.0},
        {4, "RRF properties", rrf_properties, 0.0},
        {5, "greedy diversity uplift", greedy_uplift, 60.0},
        {6, "end-to-end determinism", end_to_end_determinism, 120.0},
        {7, "statistics", statistics, 0.0},
        {8, "metric direction", metric_direction, 60.0},
        {9, "distractor pipeline", distractor_pipeline, 0.0},
        {10, "prompt wire format", wire_format, 0.0},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = cr.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.budget_seconds > 0.0 && secs >= cr.budget_seconds) {
            result.ok = false;
            result.detail += " [over the " + fmt(cr.budget_seconds, 0) + " s budget]";
        }
        failures += !result.ok;
        std::printf("criterion %2d %s  %-26s %8.3f s  %s\n", cr.id, result.ok ? "PASS" : "FAIL", cr.name, secs,
                    result.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
