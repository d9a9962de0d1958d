#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fcgen/core/error.hpp"
#include "fcgen/preprocess/artifact.hpp"
#include "fcgen/providers/catalog.hpp"
#include "fcgen/providers/scripted_llm.hpp"
#include "fcgen/sampler/sampler.hpp"
#include "support.hpp"

using namespace fcgen;
using fcgen::testing::fixture_library;

namespace {

const std::vector<std::string>* group_of(const std::vector<ParameterGroup>& groups, const std::string& fn,
                                         const std::string& param, std::vector<std::string>& out) {
    for (const auto& g : groups) {
        for (const auto& m : g.members) {
            if (m.function == fn && m.parameter == param) {
                out.clear();
                for (const auto& x : g.members) out.push_back(x.function + "." + x.parameter);
                return &out;
            }
        }
    }
    return nullptr;
}

FunctionSchema fn(const std::string& name, const std::string& desc, std::vector<ParameterSpec> params = {}) {
    FunctionSchema f;
    f.name = name;
    f.description = desc;
    f.parameters = std::move(params);
    return f;
}

ParameterSpec str_param(const std::string& name, const std::string& desc) {
    ParameterSpec p;
    p.name = name;
    p.description = desc;
    p.declared_type = "string";
    p.category = ParameterCategory::String;
    p.required = true;
    return p;
}

}  // namespace

TEST(Grouping, DescriptionTemplate) {
    ParameterSpec p = str_param("units", "sets the measurement system");
    EXPECT_EQ(describe_parameter(p), "The units parameter is a string that sets the measurement system");
    p.category = ParameterCategory::Enum;
    p.enum_values = {"metric", "imperial"};
    EXPECT_EQ(describe_parameter(p),
              "The units parameter is a string that sets the measurement system and must be one of: metric, imperial");
}

TEST(Grouping, FixtureGroupsArePartitionWithinCategories) {
    HashEmbedder e;
    const auto groups = group_parameters(fixture_library(), e, 0.6);
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& g : groups) {
        for (const auto& m : g.members) {
            EXPECT_TRUE(seen.insert({m.function, m.parameter}).second);
            EXPECT_EQ(require_function(fixture_library(), m.function).find_parameter(m.parameter)->category, g.category);
        }
    }
    EXPECT_EQ(seen.size(), 12u);
    std::vector<std::string> members;
    ASSERT_TRUE(group_of(groups, "get_weather", "city", members));
    EXPECT_EQ(members, (std::vector<std::string>{"get_weather.city", "search_hotels.city"}));
    ASSERT_TRUE(group_of(groups, "get_video_details", "video_url", members));
    EXPECT_EQ(members.size(), 1u);
}

TEST(Grouping, ThresholdExtremes) {
    FunctionLibrary lib{fn("a", "x", {str_param("p", "zebra quartz")}), fn("b", "y", {str_param("p", "zebra quartz")}),
                        fn("c", "z", {str_param("q", "lemon violin")})};
    HashEmbedder e;
    // The shared template words put every pair at cosine 0.75 or more.
    const auto same = group_parameters(lib, e, 0.9);
    ASSERT_EQ(same.size(), 2u);
    EXPECT_EQ(same[0].members.size(), 2u);
    EXPECT_EQ(group_parameters(lib, e, 1.01).size(), 3u);
    EXPECT_EQ(group_parameters(lib, e, -1.0).size(), 1u);
}

TEST(Pools, SizesAndWeights) {
    HashEmbedder e;
    const auto groups = group_parameters(fixture_library(), e, 0.6);
    const auto w = focused_weights(fixture_library(), groups);
    for (std::size_t i = 0; i < fixture_library().size(); ++i) {
        if (fixture_library()[i].parameters.empty()) EXPECT_EQ(w[i], 0.0);
    }
    EXPECT_EQ(w[0], 3.0);  // get_weather.units sits in the three-member enum group
    Rng rng(1);
    const auto pools = build_api_pools(fixture_library(), groups, rng);
    EXPECT_EQ(pools.general.size(), 12u);
    EXPECT_EQ(pools.focused.size(), 4u);  // ceil(12 / 3)
    EXPECT_EQ(pools.other, (std::vector<std::string>{"create_playlist"}));
    for (const auto& f : pools.focused) EXPECT_FALSE(require_function(fixture_library(), f).parameters.empty());
}

TEST(Graph, ReturnEdgesAndCanonicalParamEdges) {
    HashEmbedder e;
    const auto g = build_similarity_graph(fixture_library(), e, 0.6);
    auto has = [&](const std::string& a, const std::string& b, EdgeKind k) {
        for (const auto& x : g.edges)
            if (x.from == a && x.to == b && x.kind == k) return true;
        return false;
    };
    EXPECT_TRUE(has("search_hotels", "get_hotel_reviews", EdgeKind::ParamReturn));
    EXPECT_TRUE(has("get_trending_videos", "get_video_details", EdgeKind::ParamReturn));
    EXPECT_TRUE(has("get_weather", "search_hotels", EdgeKind::ParamParam));
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < fixture_library().size(); ++i) pos[fixture_library()[i].name] = i;
    for (const auto& x : g.edges) {
        EXPECT_GE(x.weight, 0.6);
        if (x.kind == EdgeKind::ParamParam) EXPECT_LT(pos[x.from], pos[x.to]);
    }
}

TEST(Artifact, RoundTripAndStableBytes) {
    fcgen::testing::TempDir dir("artifact");
    HashEmbedder e;
    RunConfig cfg;
    const auto a = run_preprocess(fixture_library(), e, cfg);
    write_artifact(a, dir / "a.json");
    write_artifact(run_preprocess(fixture_library(), e, cfg), dir / "b.json");
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
    EXPECT_EQ(read_artifact(dir / "a.json"), a);
}

TEST(Sampler, ExecutionTypeFrequencies) {
    RunConfig cfg;
    Rng rng(1);
    std::map<ExecutionType, int> counts;
    for (int i = 0; i < 1000; ++i) ++counts[sample_execution_type(cfg, rng)];
    for (auto t : kAllExecutionTypes) EXPECT_NEAR(counts[t], 200, 50);
    cfg.mixture_weights = {1, 0, 0, 0, 0};
    for (int i = 0; i < 50; ++i) EXPECT_EQ(sample_execution_type(cfg, rng), ExecutionType::Single);
    cfg.mixture_weights = {0, 0, 0, 0, 0};
    EXPECT_THROW(sample_execution_type(cfg, rng), ConfigError);
}

TEST(Sampler, SingleApiRedrawsEmptyPools) {
    ApiPools pools;
    pools.general = {"only"};
    Rng rng(4);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(sample_single_api(pools, rng), "only");
    EXPECT_THROW(sample_single_api(ApiPools{}, rng), Error);
}

TEST(Sampler, WalkLengthDistribution) {
    ApiGraph g;
    for (int i = 0; i < 10; ++i) g.vertices.push_back("f" + std::to_string(i));
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) g.edges.push_back({g.vertices[i], g.vertices[j], EdgeKind::ParamParam, 1.0});
    Rng rng(2);
    int twos = 0;
    const int n = 5000;
    for (int i = 0; i < n; ++i) {
        const auto w = sample_walk(g, ExecutionType::Parallel, {}, rng);
        EXPECT_EQ(std::set<std::string>(w.begin(), w.end()).size(), w.size());
        twos += w.size() == 2;
    }
    EXPECT_NEAR(twos / static_cast<double>(n), std::exp(-0.75), 0.02);
}

TEST(Sampler, SequentialFollowsReturnEdgeForward) {
    ApiGraph g{{"u", "v"}, {{"u", "v", EdgeKind::ParamReturn, 1.0}}};
    Rng rng(3);
    EXPECT_EQ(sample_walk_of_length(g, ExecutionType::Sequential, 2, {}, rng), (std::vector<std::string>{"u", "v"}));
    EXPECT_THROW(sample_walk_of_length(g, ExecutionType::Sequential, 3, {}, rng), GenerationFailure);
    ApiGraph pp{{"u", "v"}, {{"u", "v", EdgeKind::ParamParam, 1.0}}};
    EXPECT_THROW(sample_walk_of_length(pp, ExecutionType::Sequential, 2, {}, rng), GenerationFailure);
}

TEST(Sampler, PairwiseSimilarity) {
    const auto a = fn("alpha", "zebra quartz"), b = fn("beta", "zebra quartz"), c = fn("gamma", "lemon violin");
    HashEmbedder e;
    EXPECT_EQ(schema_summary(a), "alpha: zebra quartz");
    EXPECT_DOUBLE_EQ(mean_pairwise_similarity({&a}, e), 1.0);
    EXPECT_NEAR(mean_pairwise_similarity({&a, &b}, e), 2.0 / 3.0, 1e-9);
    EXPECT_TRUE(check_pairwise_similarity({&a, &b}, e, 0.6));
    EXPECT_LT(mean_pairwise_similarity({&a, &c}, e), 0.2);
    EXPECT_FALSE(check_pairwise_similarity({&a, &c}, e, 0.3));
}

TEST(Sampler, CompatibilityVerdicts) {
    const auto& sig = signatures::get(signatures::kValidateSequentialSchemaCompatibility);
    const auto* a = &require_function(fixture_library(), "search_hotels");
    const auto* b = &require_function(fixture_library(), "get_hotel_reviews");
    ScriptedLlm no;
    no.on_fields(sig.name, FieldValues{{"reasoning", "caption data carries no video id"}, {"is_compatible", "NO"}});
    EXPECT_FALSE(validate_sequential_schema_compatibility({a, b}, no, 3).accepted);
    ScriptedLlm retry;
    retry.on(sig.name, std::vector<std::string>{"oops", render_signature_output(sig, {{"reasoning", "ok"}, {"is_compatible", "YES"}})});
    EXPECT_TRUE(validate_sequential_schema_compatibility({a, b}, retry, 3).accepted);
    EXPECT_EQ(retry.call_count(sig.name), 2u);
    ScriptedLlm broken;
    broken.on(sig.name, "never parses");
    EXPECT_THROW(validate_sequential_schema_compatibility({a, b}, broken, 2), GenerationFailure);
}
