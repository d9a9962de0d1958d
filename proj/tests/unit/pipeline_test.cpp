#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fcgen/core/dataset.hpp"
#include "fcgen/pipeline/generator.hpp"
#include "fcgen/providers/scripted_llm.hpp"
#include "support.hpp"

using namespace fcgen;
using fcgen::testing::fixture;
using fcgen::testing::fixture_library;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunFixture {
    RunConfig config = load_config(fixture("mock_config.json"));
    HashEmbedder embedder{384};
    SimulatedLlm llm;
    PreprocessArtifact artifact;

    RunFixture() { artifact = run_preprocess(fixture_library(), embedder, config); }

    GenerateSummary run(const std::filesystem::path& out, std::size_t n, bool resume = false,
                        std::optional<std::size_t> stop = std::nullopt) {
        Generator gen(artifact, config, llm, embedder);
        GenerateOptions o;
        o.n = n;
        o.out = out;
        o.resume = resume;
        o.stop_after = stop;
        return gen.run(o);
    }
};

}  // namespace

TEST(Checkpoint, RoundTrip) {
    GeneratorState s;
    s.accepted = 3;
    s.attempts = 7;
    s.last_id = "ex-000002";
    s.rng = Rng(42);
    s.rng.next_u64();
    s.trackers = TrackerSet(2);
    s.trackers.append(1, "Oslo");
    s.guidance = "vary the cities";
    const auto back = checkpoint_from_json(checkpoint_to_json(s));
    EXPECT_EQ(back.accepted, 3u);
    EXPECT_EQ(back.attempts, 7u);
    EXPECT_EQ(back.last_id, "ex-000002");
    EXPECT_EQ(back.rng.state(), s.rng.state());
    EXPECT_EQ(back.trackers, s.trackers);
    EXPECT_EQ(back.guidance, s.guidance);
    EXPECT_THROW(checkpoint_from_json(Json{{"accepted", 1}}), FormatError);
}

TEST(Generator, SmallRunIsValidAndDeterministic) {
    RunFixture s;
    fcgen::testing::TempDir dir("gen");
    const auto sum = s.run(dir / "a.jsonl", 6);
    EXPECT_TRUE(sum.complete);
    EXPECT_EQ(sum.accepted, 6u);
    const auto ds = read_dataset(dir / "a.jsonl");
    ASSERT_EQ(ds.size(), 6u);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        EXPECT_NO_THROW(ds[i].validate(&fixture_library()));
        EXPECT_EQ(ds[i].metadata["commit_order"], i);
    }
    s.run(dir / "b.jsonl", 6);
    EXPECT_EQ(slurp(dir / "a.jsonl"), slurp(dir / "b.jsonl"));
    EXPECT_EQ(slurp(dir / "a.jsonl.log.jsonl"), slurp(dir / "b.jsonl.log.jsonl"));
}

TEST(Generator, ResumeMatchesUninterruptedRun) {
    RunFixture s;
    fcgen::testing::TempDir dir("resume");
    s.run(dir / "full.jsonl", 6);
    const auto first = s.run(dir / "part.jsonl", 6, false, 3);
    EXPECT_FALSE(first.complete);
    EXPECT_EQ(read_dataset(dir / "part.jsonl").size(), 3u);
    const auto second = s.run(dir / "part.jsonl", 6, true);
    EXPECT_TRUE(second.complete);
    EXPECT_EQ(slurp(dir / "full.jsonl"), slurp(dir / "part.jsonl"));
}

TEST(Generator, ProviderErrorsAreFatal) {
    RunFixture s;
    ScriptedLlm broken;  // no rules, no fallback
    Generator gen(s.artifact, s.config, broken, s.embedder);
    fcgen::testing::TempDir dir("fatal");
    GenerateOptions o;
    o.n = 1;
    o.out = dir / "x.jsonl";
    EXPECT_THROW(gen.run(o), ProviderError);
}
