#include <gtest/gtest.h>

#include "fcgen/core/error.hpp"
#include "fcgen/metrics/entropy.hpp"
#include "fcgen/paramgen/paramgen.hpp"
#include "fcgen/preprocess/grouping.hpp"
#include "fcgen/providers/catalog.hpp"
#include "fcgen/providers/scripted_llm.hpp"
#include "support.hpp"

using namespace fcgen;
using fcgen::testing::fixture_library;
namespace sg = fcgen::signatures;

namespace {

ParameterSpec param(const std::string& name, const std::string& type, ParameterCategory cat, bool required = true) {
    ParameterSpec p;
    p.name = name;
    p.description = "the " + name;
    p.declared_type = type;
    p.category = cat;
    p.required = required;
    return p;
}

struct Harness {
    HashEmbedder embedder;
    RunConfig config;
    std::vector<ParameterGroup> groups;
    std::shared_ptr<SimulatedLlm> sim = std::make_shared<SimulatedLlm>();

    explicit Harness(const FunctionLibrary& lib) { groups = group_parameters(lib, embedder, config.grouping_threshold); }
};

}  // namespace

TEST(Values, ParseList) {
    const auto s = param("city", "string", ParameterCategory::String);
    EXPECT_EQ(parse_value_list(R"(["Oslo", "Lima"])", s), (std::vector<Json>{"Oslo", "Lima"}));
    EXPECT_EQ(parse_value_list("- Oslo\n* Lima\n\nQuito\n", s), (std::vector<Json>{"Oslo", "Lima", "Quito"}));
    EXPECT_EQ(parse_value_list("[3, {\"a\":1}]", s), (std::vector<Json>{"3", "{\"a\":1}"}));

    const auto i = param("days", "integer", ParameterCategory::Numerical);
    const auto v = parse_value_list(R"([1, 2.0, "3"])", i);
    ASSERT_EQ(v.size(), 3u);
    for (const auto& x : v) EXPECT_TRUE(x.is_number_integer());
    EXPECT_EQ(v[1], 2);
    const auto d = param("amount", "number", ParameterCategory::Numerical);
    EXPECT_EQ(parse_value_list("[2.5]", d).front(), 2.5);
    EXPECT_THROW(parse_value_list(R"(["lots"])", d), GenerationFailure);
}

TEST(Values, CandidatesDedupAndTopUp) {
    const auto& f = require_function(fixture_library(), "get_weather");
    RunConfig cfg;
    cfg.value_candidates = 5;
    cfg.value_shown = 3;
    const auto& sig = sg::get(sg::kGenerateMultipleStringParameters);
    ScriptedLlm llm;
    llm.on_fields(sig.name, std::vector<FieldValues>{{{"generated_values", R"(["a","b","a","c"])"}},
                                                     {{"generated_values", R"(["c","d","e","f"])"}}});
    ValueRequest req;
    req.function = &f;
    req.parameter = f.find_parameter("city");
    const auto values = generate_value_candidates(req, llm, cfg);
    EXPECT_EQ(values, (std::vector<Json>{"a", "b", "c", "d", "e"}));
    const auto reqs = llm.requests(sig.name);
    ASSERT_EQ(reqs.size(), 2u);
    EXPECT_EQ(reqs[0].inputs.at("num_candidates"), "5");
    EXPECT_EQ(reqs[1].inputs.at("num_candidates"), "2");
    EXPECT_EQ(reqs[1].inputs.at("existing_values"), R"(["a","b","c"])");

    ScriptedLlm shortfall;
    shortfall.on_fields(sig.name, FieldValues{{"generated_values", R"(["a","a"])"}});
    EXPECT_THROW(generate_value_candidates(req, shortfall, cfg), GenerationFailure);
}

TEST(Values, GreedyPicksNewRegion) {
    HashEmbedder e;
    const std::vector<Json> group{1.0, 1.1, 0.9};
    const std::vector<Json> candidates{1.2, 1.05, 50.0, 0.95, 1.3};
    Rng rng(5);
    const auto c = select_diverse_value(candidates, group, ParameterCategory::Numerical, e, rng, 5);
    EXPECT_EQ(c.value, 50.0);
    ASSERT_EQ(c.entropies.size(), 5u);
    EXPECT_EQ(candidates[c.shown[c.position]], 50.0);
    for (std::size_t k = 0; k < 5; ++k) {
        if (k != c.position) EXPECT_DOUBLE_EQ(c.entropies[k], 0.0);
    }
    EXPECT_NEAR(c.entropies[c.position], entropy_bits({3, 1}), 1e-12);
}

TEST(Values, TiesGoToFirstShownAndHiddenValuesCount) {
    HashEmbedder e;
    const std::vector<Json> spread{10.0, 20.0, 30.0, 40.0};
    Rng rng(9);
    const auto tie = select_diverse_value(spread, {}, ParameterCategory::Numerical, e, rng, 4);
    EXPECT_EQ(tie.position, 0u);

    // Only one candidate is shown; the three hidden ones join the group view.
    const std::vector<Json> cands{5.0, 5.1, 5.2, 5.3};
    const auto one = select_diverse_value(cands, {}, ParameterCategory::Numerical, e, rng, 1);
    ASSERT_EQ(one.shown.size(), 1u);
    EXPECT_DOUBLE_EQ(one.entropies[0], 0.0);  // all four land in one cluster
}

TEST(Trackers, ViewCommitAndSerialize) {
    TrackerSet t(3);
    t.append(1, "x");
    TrackerDelta d;
    d.add(1, "y");
    d.add(0, 5);
    d.add(1, "z");
    EXPECT_EQ(tracker_view(t, d, 1), (std::vector<Json>{"x", "y", "z"}));
    EXPECT_TRUE(tracker_view(t, d, 2).empty());
    commit_to_trackers(t, d);
    EXPECT_EQ(t.values(1), (std::vector<Json>{"x", "y", "z"}));
    EXPECT_EQ(t.values(0), (std::vector<Json>{5}));
    EXPECT_EQ(TrackerSet::from_json(t.to_json()), t);
}

TEST(ParamGen, DeltaFollowsApiThenSchemaOrder) {
    Harness h(fixture_library());
    ParamGenerator gen(fixture_library(), h.groups, h.config, *h.sim, h.embedder);
    const auto& w = require_function(fixture_library(), "get_weather");
    const auto& c = require_function(fixture_library(), "convert_currency");
    const GroupIndex index(h.groups);
    const auto d = gen.delta_for({&w, &c}, {Json{{"units", "metric"}, {"city", "Oslo"}},
                                            Json{{"amount", 10}, {"target_currency", std::string(kMissingSentinel)}}});
    ASSERT_EQ(d.entries.size(), 3u);
    EXPECT_EQ(d.entries[0].first, index.require("get_weather", "units"));
    EXPECT_EQ(d.entries[1].first, index.require("get_weather", "city"));
    EXPECT_EQ(d.entries[2].first, index.require("convert_currency", "amount"));
}

TEST(ParamGen, AllEnumFunctionOnlyCallsValidator) {
    FunctionSchema f;
    f.name = "set_mode";
    f.description = "switches the mode";
    auto a = param("mode", "string", ParameterCategory::Enum);
    a.enum_values = {"fast", "slow"};
    auto b = param("level", "string", ParameterCategory::Enum);
    b.enum_values = {"low", "high"};
    f.parameters = {a, b};
    const FunctionLibrary lib{f};
    Harness h(lib);
    ScriptedLlm llm;
    llm.on_fields(std::string(sg::kParameterSetValidator), FieldValues{{"reasoning", "fine"}, {"is_valid", "YES"}});
    ParamGenerator gen(lib, h.groups, h.config, llm, h.embedder);
    Rng rng(1);
    const auto out = gen.single(f, TrackerSet(h.groups.size()), rng);
    EXPECT_EQ(llm.calls(), (std::vector<std::string>{std::string(sg::kParameterSetValidator)}));
    ASSERT_EQ(out.arguments.size(), 1u);
    EXPECT_TRUE(out.arguments[0].contains("mode"));
    EXPECT_TRUE(out.arguments[0].contains("level"));
    EXPECT_EQ(out.delta.entries.size(), 2u);
}

TEST(ParamGen, RejectedSetIsRetriedWithFeedback) {
    Harness h(fixture_library());
    ScriptedLlm llm(h.sim);
    llm.on_fields(std::string(sg::kParameterSetValidator),
                  std::vector<FieldValues>{{{"reasoning", "city is not real"}, {"is_valid", "NO"}},
                                           {{"reasoning", "fine"}, {"is_valid", "YES"}}});
    ParamGenerator gen(fixture_library(), h.groups, h.config, llm, h.embedder);
    Rng rng(2);
    const auto out = gen.single(require_function(fixture_library(), "get_weather"), TrackerSet(h.groups.size()), rng);
    EXPECT_EQ(out.trace["param_attempts"], 2);
    EXPECT_EQ(out.trace["param_failures"], Json::array({"city is not real"}));
    const auto reqs = llm.requests(sg::kGenerateMultipleStringParameters);
    ASSERT_EQ(reqs.size(), 2u);
    EXPECT_EQ(reqs[0].inputs.at("previous_failures"), "None");
    EXPECT_EQ(reqs[1].inputs.at("previous_failures"), "Attempt 1: city is not real");

    ScriptedLlm never(h.sim);
    never.on_fields(std::string(sg::kParameterSetValidator), FieldValues{{"reasoning", "no"}, {"is_valid", "NO"}});
    ParamGenerator stubborn(fixture_library(), h.groups, h.config, never, h.embedder);
    EXPECT_THROW(stubborn.single(require_function(fixture_library(), "get_weather"), TrackerSet(h.groups.size()), rng),
                 GenerationFailure);
}

TEST(ParamGen, MissingOmitsAtLeastOneRequired) {
    Harness h(fixture_library());
    ParamGenerator gen(fixture_library(), h.groups, h.config, *h.sim, h.embedder);
    const auto& f = require_function(fixture_library(), "convert_currency");
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Rng rng(seed);
        const auto out = gen.missing(f, TrackerSet(h.groups.size()), rng);
        ASSERT_GE(out.missing.size(), 1u);
        for (const auto& m : out.missing) EXPECT_EQ(out.arguments[0].at(m), std::string(kMissingSentinel));
        for (const auto& [g, v] : out.delta.entries) EXPECT_NE(v, std::string(kMissingSentinel));
    }
    FunctionSchema bare;
    bare.name = "ping";
    bare.description = "checks liveness";
    bare.parameters = {param("verbose", "boolean", ParameterCategory::Other, false)};
    Rng rng(0);
    EXPECT_THROW(gen.missing(bare, TrackerSet(h.groups.size()), rng), InvariantError);
}

TEST(ParamGen, SequentialProducesReturnValues) {
    Harness h(fixture_library());
    ParamGenerator gen(fixture_library(), h.groups, h.config, *h.sim, h.embedder);
    const auto* a = &require_function(fixture_library(), "search_hotels");
    const auto* b = &require_function(fixture_library(), "get_hotel_reviews");
    Rng rng(3);
    const auto out = gen.sequential({a, b}, TrackerSet(h.groups.size()), rng);
    EXPECT_EQ(out.arguments.size(), 2u);
    EXPECT_EQ(out.return_values.size(), 1u);
    EXPECT_TRUE(out.arguments[1].contains("hotel_id"));
}
