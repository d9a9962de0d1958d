#pragma once

#include <string>
#include <vector>

#include "fcgen/core/config.hpp"
#include "fcgen/core/rng.hpp"
#include "fcgen/providers/embedder.hpp"
#include "fcgen/providers/llm.hpp"

namespace fcgen {

struct ScoredFunction {
    std::string name;
    double similarity = 0.0;
};

/// Top-k functions by cosine between the query and each function
/// description, descending (library order on ties). With `force_targets`,
/// targets missing from the top-k are appended with their own score.
std::vector<ScoredFunction> retrieve_candidates(const std::string& query, const FunctionLibrary& library,
                                                Embedder& embedder, std::size_t k,
                                                const std::vector<std::string>& targets, bool force_targets);

/// One batched relevance call; ratings (1-5) aligned with `candidates`.
/// The multi-target scorer is used when there is more than one target.
/// Unusable answers are retried; then GenerationFailure.
std::vector<int> score_plausibility(const std::string& query, const std::vector<std::string>& candidates,
                                    const std::vector<std::string>& targets, const FunctionLibrary& library,
                                    LlmProvider& llm, int max_attempts);

/// Highest rating a distractor may have: 1 for MISSING_PARAMS, 2 otherwise.
int plausibility_threshold(ExecutionType type);

/// Drops non-targets rated above the threshold; targets always stay.
std::vector<ScoredFunction> filter_by_plausibility(const std::vector<ScoredFunction>& scored,
                                                   const std::vector<int>& ratings,
                                                   const std::vector<std::string>& targets, ExecutionType type);

struct ElbowCut {
    std::size_t elbow = 0;  ///< argmax of the second difference
    std::size_t keep = 0;   ///< how many leading entries survive
};

/// d_i = s_i - s_{i+1}, dd_i = d_i - d_{i-1} (i >= 1), e = first argmax dd;
/// keep e + 1 floored at max(min_keep, 1) and capped at the list size.
/// Fewer than three scores keep everything.
ElbowCut elbow_cutoff(const std::vector<double>& sorted_scores, std::size_t min_keep);

/// Distractor floor for the elbow: 2 x targets for PARALLEL/SEQUENTIAL, else 1.
std::size_t min_keep_for(ExecutionType type, std::size_t target_count);

struct AlternativeOutcome {
    bool valid = true;
    std::vector<std::string> candidates;  ///< kept distractors, targets excluded
    std::vector<std::string> targets;
    ExecutionType type = ExecutionType::Parallel;
    std::vector<std::string> alternative;  ///< validated alternative invocation, empty if none
    std::string note;
};

/// Looks for another valid invocation among targets and distractors and
/// repairs the example: distractors used by it are dropped; an alternative
/// that is a strict subset of the targets shrinks them (one left: SINGLE,
/// none: invalid). A shrunk SEQUENTIAL chain of two or more is invalid.
AlternativeOutcome validate_invocation_alternatives(const std::string& query,
                                                    const std::vector<std::string>& distractors,
                                                    const std::vector<std::string>& targets, ExecutionType type,
                                                    const std::vector<Json>& return_values,
                                                    const FunctionLibrary& library, LlmProvider& llm,
                                                    int max_attempts);

/// Targets plus distractors, shuffled.
std::vector<std::string> finalize_candidates(const std::vector<std::string>& targets,
                                             const std::vector<std::string>& distractors, Rng& rng);

struct DistractorOutcome {
    bool valid = true;
    std::vector<std::string> candidates;  ///< final shuffled list
    std::vector<std::string> targets;
    ExecutionType type = ExecutionType::Single;
    Json trace = Json::object();
};

/// Whole selection pipeline for one example.
DistractorOutcome select_distractors(const std::string& query, const std::vector<std::string>& targets,
                                     ExecutionType type, const std::vector<Json>& return_values,
                                     const FunctionLibrary& library, Embedder& embedder, LlmProvider& llm,
                                     const RunConfig& config, Rng& rng);

}  // namespace fcgen
