#pragma once

#include <filesystem>

#include "fcgen/core/config.hpp"
#include "fcgen/preprocess/graph.hpp"
#include "fcgen/preprocess/grouping.hpp"
#include "fcgen/preprocess/pools.hpp"

namespace fcgen {

/// Everything `generate` needs from preprocessing.
struct PreprocessArtifact {
    FunctionLibrary library;
    std::vector<ParameterGroup> groups;
    ApiPools pools;
    ApiGraph graph;

    bool operator==(const PreprocessArtifact&) const = default;
};

/// Grouping, pools (drawn from a stream seeded with config.rng_seed) and graph.
PreprocessArtifact run_preprocess(const FunctionLibrary& library, Embedder& embedder, const RunConfig& config);

Json artifact_to_json(const PreprocessArtifact& artifact);
PreprocessArtifact artifact_from_json(const Json& document);
void write_artifact(const PreprocessArtifact& artifact, const std::filesystem::path& path);
PreprocessArtifact read_artifact(const std::filesystem::path& path);

}  // namespace fcgen
