#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "fcgen/core/config.hpp"
#include "fcgen/core/dataset.hpp"
#include "fcgen/core/error.hpp"
#include "fcgen/core/rng.hpp"
#include "support.hpp"

using namespace fcgen;
using fcgen::testing::fixture;
using fcgen::testing::fixture_library;

TEST(Library, FixtureCategoryCounts) {
    const auto& lib = fixture_library();
    ASSERT_EQ(lib.size(), 12u);
    std::map<ParameterCategory, int> counts;
    for (const auto& f : lib) {
        for (const auto& p : f.parameters) ++counts[p.category];
    }
    EXPECT_EQ(counts[ParameterCategory::Enum], 3);
    EXPECT_EQ(counts[ParameterCategory::Numerical], 4);
    EXPECT_EQ(counts[ParameterCategory::String], 4);
    EXPECT_EQ(counts[ParameterCategory::Other], 1);
    EXPECT_EQ(require_function(lib, "convert_currency").required_count(), 2u);
    EXPECT_EQ(require_function(lib, "search_hotels").return_fields().front().name, "hotel_id");
}

TEST(Library, ClassifyParameterType) {
    EXPECT_EQ(classify_parameter_type("integer", false), ParameterCategory::Numerical);
    EXPECT_EQ(classify_parameter_type("Float", false), ParameterCategory::Numerical);
    EXPECT_EQ(classify_parameter_type("string", false), ParameterCategory::String);
    EXPECT_EQ(classify_parameter_type("string", true), ParameterCategory::Enum);
    EXPECT_EQ(classify_parameter_type("boolean", false), ParameterCategory::Other);
    EXPECT_EQ(classify_parameter_type("array", false), ParameterCategory::Other);
}

TEST(Library, RejectsMalformed) {
    EXPECT_THROW(load_function_library("/nonexistent/library.json"), FormatError);
    EXPECT_THROW(parse_function_library(Json::parse(R"({"name": "x"})")), FormatError);
    EXPECT_THROW(parse_function_library(Json::parse(R"([{"name": "a"}, {"name": "a"}])")), FormatError);
    EXPECT_THROW(parse_function_library(Json::parse(
                     R"([{"name": "a", "parameters": {"properties": {}, "required": ["q"]}}])")),
                 FormatError);
}

TEST(Library, JsonRoundTrip) {
    const auto& lib = fixture_library();
    EXPECT_EQ(parse_function_library(library_to_json(lib)), lib);
}

namespace {

GeneratedExample sample_example() {
    GeneratedExample e;
    e.id = "ex-1";
    e.execution_type = ExecutionType::Sequential;
    e.query = "Find a hotel in Oslo and show its reviews";
    e.target_invocations = {{"search_hotels", Json{{"city", "Oslo"}}, 0},
                            {"get_hotel_reviews", Json{{"hotel_id", "H1"}}, 1}};
    e.return_values = {Json{{"hotel_id", "H1"}}};
    e.candidate_functions = {"get_weather", "search_hotels", "get_hotel_reviews"};
    e.metadata = Json{{"seed", 3}};
    return e;
}

}  // namespace

TEST(Dataset, RoundTripThroughFile) {
    fcgen::testing::TempDir dir("dataset");
    const auto path = dir / "d.jsonl";
    std::vector<GeneratedExample> examples{sample_example()};
    auto none = sample_example();
    none.id = "ex-2";
    none.execution_type = ExecutionType::None;
    none.target_invocations.clear();
    none.return_values.clear();
    examples.push_back(none);
    EXPECT_EQ(write_dataset(examples, path, &fixture_library()), 2u);
    EXPECT_EQ(read_dataset(path), examples);
}

TEST(Dataset, WriteRefusesInvalidExample) {
    fcgen::testing::TempDir dir("dataset-bad");
    auto bad = sample_example();
    bad.candidate_functions = {"get_weather"};
    EXPECT_THROW(write_dataset({bad}, dir / "d.jsonl"), InvariantError);
    EXPECT_FALSE(std::filesystem::exists(dir / "d.jsonl"));
}

TEST(Dataset, MalformedLineReportsLineNumber) {
    std::istringstream in(serialize_example(sample_example()) + "\n{not json\n");
    try {
        read_dataset(in);
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(Example, ValidationRules) {
    auto e = sample_example();
    EXPECT_NO_THROW(e.validate(&fixture_library()));
    auto wrong_returns = e;
    wrong_returns.return_values.clear();
    EXPECT_THROW(wrong_returns.validate(), InvariantError);
    auto missing = e;
    missing.execution_type = ExecutionType::MissingParams;
    missing.target_invocations.resize(1);
    missing.return_values.clear();
    EXPECT_THROW(missing.validate(), InvariantError);  // no sentinel
    missing.target_invocations[0].arguments["city"] = std::string(kMissingSentinel);
    EXPECT_NO_THROW(missing.validate());
    auto unknown_arg = e;
    unknown_arg.target_invocations[0].arguments["stars"] = 4;
    EXPECT_THROW(unknown_arg.validate(&fixture_library()), InvariantError);
}

TEST(Config, RoundTripAndValidation) {
    RunConfig c;
    c.rng_seed = 99;
    c.mixture_weights = {0, 1, 2, 3, 4};
    c.llm.kind = "http";
    c.llm.endpoint = "http://localhost:8000";
    EXPECT_EQ(config_to_json(config_from_json(config_to_json(c))), config_to_json(c));
    RunConfig zero;
    zero.mixture_weights = {0, 0, 0, 0, 0};
    EXPECT_THROW(zero.validate(), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Rng, StateRoundTripContinuesStream) {
    Rng a(5);
    for (int i = 0; i < 10; ++i) a.next_u64();
    Rng b;
    b.set_state(a.state());
    for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, SampleIndicesDistinctAndInRange) {
    Rng r(1);
    const auto idx = r.sample_indices(25, 5);
    ASSERT_EQ(idx.size(), 5u);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        EXPECT_LT(idx[i], 25u);
        for (std::size_t j = i + 1; j < idx.size(); ++j) EXPECT_NE(idx[i], idx[j]);
    }
}

TEST(Rng, BinomialMeanMatchesNP) {
    Rng r(11);
    double sum = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) sum += r.binomial(4, 0.5);
    EXPECT_NEAR(sum / n, 2.0, 0.05);
}
