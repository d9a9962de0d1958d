#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fcgen/core/error.hpp"
#include "fcgen/distractors/distractors.hpp"
#include "fcgen/providers/catalog.hpp"
#include "fcgen/providers/scripted_llm.hpp"
#include "support.hpp"

using namespace fcgen;
using fcgen::testing::fixture_library;
namespace sg = fcgen::signatures;

TEST(Elbow, SharpDropAfterThird) {
    const auto c = elbow_cutoff({0.9, 0.88, 0.86, 0.5, 0.48}, 1);
    EXPECT_EQ(c.elbow, 2u);
    EXPECT_EQ(c.keep, 3u);
}

TEST(Elbow, LinearTakesFirstAndFloors) {
    const std::vector<double> s{0.9, 0.8, 0.7, 0.6, 0.5};
    EXPECT_EQ(elbow_cutoff(s, 1).elbow, 1u);
    EXPECT_EQ(elbow_cutoff(s, 1).keep, 2u);
    EXPECT_EQ(elbow_cutoff(s, 4).keep, 4u);
    EXPECT_EQ(elbow_cutoff(s, 9).keep, 5u);
}

TEST(Elbow, ShortLists) {
    EXPECT_EQ(elbow_cutoff({}, 2).keep, 0u);
    EXPECT_EQ(elbow_cutoff({0.4}, 3).keep, 1u);
    EXPECT_EQ(elbow_cutoff({0.9, 0.1}, 1).keep, 2u);
}

TEST(Plausibility, ThresholdsAndTargets) {
    EXPECT_EQ(plausibility_threshold(ExecutionType::MissingParams), 1);
    EXPECT_EQ(plausibility_threshold(ExecutionType::Single), 2);
    EXPECT_EQ(min_keep_for(ExecutionType::Parallel, 2), 4u);
    EXPECT_EQ(min_keep_for(ExecutionType::Sequential, 3), 6u);
    EXPECT_EQ(min_keep_for(ExecutionType::Single, 1), 1u);
    EXPECT_EQ(min_keep_for(ExecutionType::None, 0), 1u);

    const std::vector<ScoredFunction> s{{"t", 0.9}, {"a", 0.8}, {"b", 0.7}, {"c", 0.6}};
    const std::vector<int> r{5, 2, 1, 3};
    auto names = [](const std::vector<ScoredFunction>& v) {
        std::vector<std::string> out;
        for (const auto& x : v) out.push_back(x.name);
        return out;
    };
    EXPECT_EQ(names(filter_by_plausibility(s, r, {"t"}, ExecutionType::Single)), (std::vector<std::string>{"t", "a", "b"}));
    EXPECT_EQ(names(filter_by_plausibility(s, r, {"t"}, ExecutionType::MissingParams)), (std::vector<std::string>{"t", "b"}));
    EXPECT_THROW(filter_by_plausibility(s, {1}, {"t"}, ExecutionType::Single), InvariantError);
}

TEST(Retrieval, TopKWithForcedTargets) {
    HashEmbedder e;
    const auto all = retrieve_candidates("weather forecast for a city", fixture_library(), e, 100, {}, false);
    ASSERT_EQ(all.size(), fixture_library().size());
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GE(all[i - 1].similarity, all[i].similarity);
    const auto top = retrieve_candidates("weather forecast for a city", fixture_library(), e, 2, {all.back().name}, true);
    ASSERT_EQ(top.size(), 3u);
    EXPECT_EQ(top.back().name, all.back().name);
    EXPECT_EQ(retrieve_candidates("x", fixture_library(), e, 2, {all.back().name}, false).size(), 2u);
}

TEST(Plausibility, ParsesNamedAndPositionalScores) {
    const std::string sig(sg::kBatchApiRelevanceScorer);
    ScriptedLlm llm;
    llm.on_fields(sig, std::vector<FieldValues>{
                           {{"reasoning", "r"}, {"scores", "[1, 2]"}},  // wrong length
                           {{"reasoning", "r"},
                            {"scores", R"([{"api_name":"get_stock_history","score":1},{"api_name":"get_weather","score":5},)"
                                       R"({"api_name":"search_hotels","score":2}])"}}});
    const auto r = score_plausibility("weather in Oslo", {"get_weather", "search_hotels", "get_stock_history"},
                                      {"get_weather"}, fixture_library(), llm, 3);
    EXPECT_EQ(r, (std::vector<int>{5, 2, 1}));
    EXPECT_EQ(llm.call_count(sig), 2u);
    EXPECT_EQ(llm.requests(sig)[0].inputs.at("target_api"), "get_weather");

    ScriptedLlm multi;
    multi.on_fields(std::string(sg::kParallelApiRelevanceScorer), FieldValues{{"reasoning", "r"}, {"scores", "[5, 5]"}});
    EXPECT_EQ(score_plausibility("q", {"get_weather", "search_hotels"}, {"get_weather", "search_hotels"},
                                 fixture_library(), multi, 1),
              (std::vector<int>{5, 5}));

    ScriptedLlm junk;
    junk.on_fields(sig, FieldValues{{"reasoning", "r"}, {"scores", "[9]"}});
    EXPECT_THROW(score_plausibility("q", {"get_weather"}, {"get_weather"}, fixture_library(), junk, 2), GenerationFailure);
}

namespace {

void script_parallel(ScriptedLlm& llm, const std::string& alternative, const std::string& valid) {
    llm.on_fields(std::string(sg::kConstructParallelInvocation), FieldValues{{"reasoning", "r"}, {"invocation_apis", alternative}});
    llm.on_fields(std::string(sg::kValidateParallelInvocation), FieldValues{{"reasoning", "r"}, {"is_valid", valid}});
}

}  // namespace

TEST(Alternatives, SubsetShrinksToSingle) {
    ScriptedLlm llm;
    script_parallel(llm, R"(["get_weather"])", "YES");
    const auto out = validate_invocation_alternatives("weather in Oslo", {"get_stock_history", "convert_currency"},
                                                      {"get_weather", "search_hotels"}, ExecutionType::Parallel, {},
                                                      fixture_library(), llm, 2);
    EXPECT_TRUE(out.valid);
    EXPECT_EQ(out.type, ExecutionType::Single);
    EXPECT_EQ(out.targets, (std::vector<std::string>{"get_weather"}));
    EXPECT_EQ(out.candidates.size(), 2u);
}

TEST(Alternatives, DistractorUseRemovesIt) {
    ScriptedLlm llm;
    script_parallel(llm, R"(["get_weather","convert_currency"])", "YES");
    const auto out = validate_invocation_alternatives("q", {"get_stock_history", "convert_currency"},
                                                      {"get_weather", "search_hotels"}, ExecutionType::Parallel, {},
                                                      fixture_library(), llm, 2);
    EXPECT_TRUE(out.valid);
    EXPECT_EQ(out.type, ExecutionType::Parallel);
    EXPECT_EQ(out.candidates, (std::vector<std::string>{"get_stock_history"}));
    EXPECT_EQ(out.targets.size(), 2u);
}

TEST(Alternatives, RejectedOrIdenticalChangesNothing) {
    ScriptedLlm no;
    script_parallel(no, R"(["get_weather"])", "NO");
    auto out = validate_invocation_alternatives("q", {"get_stock_history"}, {"get_weather", "search_hotels"},
                                                ExecutionType::Parallel, {}, fixture_library(), no, 2);
    EXPECT_EQ(out.targets.size(), 2u);
    EXPECT_TRUE(out.alternative.empty());

    ScriptedLlm same;
    script_parallel(same, R"(["search_hotels","get_weather"])", "YES");
    out = validate_invocation_alternatives("q", {"get_stock_history"}, {"get_weather", "search_hotels"},
                                           ExecutionType::Parallel, {}, fixture_library(), same, 2);
    EXPECT_EQ(same.call_count(sg::kValidateParallelInvocation), 0u);
    EXPECT_EQ(out.candidates, (std::vector<std::string>{"get_stock_history"}));
}

TEST(Alternatives, SequentialShortChainIsInvalid) {
    ScriptedLlm llm;
    llm.on_fields(std::string(sg::kConstructSequentialInvocation),
                  std::vector<FieldValues>{{{"reasoning", "r"}, {"next_api", "search_hotels"}},
                                           {{"reasoning", "r"}, {"next_api", "get_hotel_reviews"}},
                                           {{"reasoning", "r"}, {"next_api", "NONE"}}});
    llm.on_fields(std::string(sg::kValidateSequentialInvocation), FieldValues{{"reasoning", "r"}, {"is_valid", "YES"}});
    const std::vector<std::string> targets{"get_weather", "search_hotels", "get_hotel_reviews"};
    const auto out = validate_invocation_alternatives("q", {"get_stock_history"}, targets, ExecutionType::Sequential,
                                                      {Json{{"t", 1}}, Json{{"hotel_id", "h1"}}}, fixture_library(), llm, 2);
    EXPECT_FALSE(out.valid);
    EXPECT_EQ(out.alternative, (std::vector<std::string>{"search_hotels", "get_hotel_reviews"}));
    // Step two sees the known return value of search_hotels.
    EXPECT_EQ(llm.requests(sg::kConstructSequentialInvocation)[1].inputs.at("return_values_up_to_this_point"),
              R"([{"hotel_id":"h1"}])");
}

TEST(Finalize, ShuffledUnion) {
    Rng rng(3);
    const auto c = finalize_candidates({"a", "b"}, {"c", "a", "d"}, rng);
    EXPECT_EQ(std::set<std::string>(c.begin(), c.end()), (std::set<std::string>{"a", "b", "c", "d"}));
    EXPECT_EQ(c.size(), 4u);
}

TEST(SelectDistractors, SingleKeepsTargetAndLowRated) {
    HashEmbedder e;
    SimulatedLlm llm;
    RunConfig cfg;
    Rng rng(8);
    const auto out = select_distractors("What is the weather in Oslo?", {"get_weather"}, ExecutionType::Single, {},
                                        fixture_library(), e, llm, cfg, rng);
    ASSERT_TRUE(out.valid);
    EXPECT_NE(std::find(out.candidates.begin(), out.candidates.end(), "get_weather"), out.candidates.end());
    EXPECT_GE(out.candidates.size(), 2u);
    EXPECT_EQ(out.trace["plausibility"]["get_weather"], 5);
    for (const auto& c : out.candidates) {
        if (c != "get_weather") EXPECT_LE(out.trace["plausibility"][c].get<int>(), 2);
    }
}
