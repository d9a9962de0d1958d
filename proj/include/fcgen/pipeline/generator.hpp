#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "fcgen/core/config.hpp"
#include "fcgen/core/rng.hpp"
#include "fcgen/paramgen/trackers.hpp"
#include "fcgen/preprocess/artifact.hpp"
#include "fcgen/providers/embedder.hpp"
#include "fcgen/providers/llm.hpp"

namespace fcgen {

/// Everything the greedy loop needs to continue exactly where it stopped.
struct GeneratorState {
    std::size_t accepted = 0;
    std::size_t attempts = 0;
    std::string last_id;
    Rng rng;
    TrackerSet trackers;
    std::string guidance;
    std::vector<std::string> queries;  ///< accepted queries, commit order
};

Json checkpoint_to_json(const GeneratorState& state);
/// Restores everything but `queries`, which come from the dataset file.
GeneratorState checkpoint_from_json(const Json& document);

struct GenerateOptions {
    std::size_t n = 0;
    std::filesystem::path out;
    std::filesystem::path checkpoint;  ///< default: out + ".ckpt.json"
    std::filesystem::path log;         ///< default: out + ".log.jsonl"
    bool resume = false;
    std::optional<std::size_t> stop_after;  ///< stop once this many are accepted (simulated interrupt)
    std::size_t max_consecutive_abandons = 200;
};

struct GenerateSummary {
    std::size_t accepted = 0;
    std::size_t attempts = 0;
    std::size_t abandoned = 0;
    bool complete = false;
};

/// A finished example and the tracker entries it commits on acceptance.
struct Candidate {
    GeneratedExample example;
    TrackerDelta delta;
};

/// The generation loop: type, functions, arguments, query, distractors,
/// then a serialized accept (dataset append, tracker commit, checkpoint).
class Generator {
public:
    Generator(const PreprocessArtifact& artifact, const RunConfig& config, LlmProvider& llm, Embedder& embedder);

    /// One attempt. Returns the candidate, or nothing with `reason` set.
    std::optional<Candidate> attempt(GeneratorState& state, std::string& reason);

    /// Trackers, queries, counters and periodic guidance after an accept.
    void accept(GeneratorState& state, const Candidate& candidate, std::ofstream* log);

    GenerateSummary run(const GenerateOptions& options);

    GeneratorState initial_state() const;

private:
    std::optional<Candidate> build(GeneratorState& state, std::string& reason);

    const PreprocessArtifact& artifact_;
    const RunConfig& config_;
    LlmProvider& llm_;
    Embedder& embedder_;
};

}  // namespace fcgen
