#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcgen/core/config.hpp"
#include "fcgen/core/rng.hpp"
#include "fcgen/providers/embedder.hpp"
#include "fcgen/providers/llm.hpp"

namespace fcgen {

enum class NoneKind { NoApi, Vague };

/// Ground truth a query must be written for.
struct QuerySkeleton {
    ExecutionType type = ExecutionType::Single;
    std::vector<const FunctionSchema*> apis;
    std::vector<Json> arguments;
    std::vector<Json> return_values;
    std::vector<std::string> missing;
    NoneKind none_kind = NoneKind::NoApi;
};

struct JudgeResult {
    bool valid = false;
    std::string reasoning;
};

struct QueryResult {
    std::string query;
    Json trace = Json::object();  ///< judge reasoning, per-metric ranks, fused score, round
};

struct PatternGuidance {
    std::string patterns;
    std::string guidance;
};

class QueryGenerator {
public:
    QueryGenerator(const RunConfig& config, LlmProvider& llm, Embedder& embedder);

    /// Rounds of generate, judge, rank and feedback. Returns the top-ranked
    /// judge-valid candidate, or nothing when no candidate was ever valid.
    std::optional<QueryResult> generate(const QuerySkeleton& skeleton, const std::vector<std::string>& dataset,
                                        const std::string& guidance, Rng& rng);

    /// NONE candidates are valid without a call. Batch judging sends all
    /// candidates at once and falls back to one call each on a bad answer.
    std::vector<JudgeResult> judge(const std::vector<std::string>& candidates, const QuerySkeleton& skeleton);

    /// Validation-focused when more than half the round failed, diversity-focused otherwise.
    std::string build_feedback(const std::vector<std::string>& candidates, const std::vector<JudgeResult>& verdicts,
                               const std::vector<std::string>& ranked_pool);

    /// Skeleton-specific generator inputs (everything but guidance and attempts).
    FieldValues generator_inputs(const QuerySkeleton& skeleton) const;

private:
    std::optional<JudgeResult> judge_one(const std::string& candidate, const QuerySkeleton& skeleton);
    std::optional<std::vector<JudgeResult>> judge_batch(const std::vector<std::string>& candidates,
                                                        const QuerySkeleton& skeleton);

    const RunConfig& config_;
    LlmProvider& llm_;
    Embedder& embedder_;
};

/// Pattern analysis then guidance generation over a query sample. Empty sample → nothing.
std::optional<PatternGuidance> refresh_dataset_guidance(const std::vector<std::string>& sample, LlmProvider& llm,
                                                        int max_attempts);

}  // namespace fcgen
