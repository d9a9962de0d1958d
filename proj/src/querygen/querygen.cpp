#include "fcgen/querygen/querygen.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "fcgen/core/error.hpp"
#include "fcgen/core/library.hpp"
#include "fcgen/metrics/lexical.hpp"
#include "fcgen/providers/catalog.hpp"
#include "fcgen/querygen/ranking.hpp"

namespace fcgen {

namespace sg = signatures;

namespace {

Json schema_list(const QuerySkeleton& s) {
    Json out = Json::array();
    for (const auto* a : s.apis) out.push_back(function_to_json(*a));
    return out;
}

Json provided_only(const Json& args) {
    Json out = Json::object();
    for (auto it = args.begin(); it != args.end(); ++it) {
        if (!(it.value().is_string() && it.value().get<std::string>() == kMissingSentinel)) out[it.key()] = it.value();
    }
    return out;
}

std::string_view generator_signature(ExecutionType type) {
    switch (type) {
        case ExecutionType::Single: return sg::kMultiQueryGenerator;
        case ExecutionType::Parallel: return sg::kParallelQueryGenerator;
        case ExecutionType::Sequential: return sg::kSequentialQueryGenerator;
        case ExecutionType::MissingParams: return sg::kMissingParamsQueryGenerator;
        case ExecutionType::None: return sg::kNoApiQueryGenerator;
    }
    throw InvariantError("unknown execution type");
}

std::string_view judge_signature(ExecutionType type) {
    switch (type) {
        case ExecutionType::Single: return sg::kApiQueryJudge;
        case ExecutionType::Parallel: return sg::kParallelQueryJudge;
        case ExecutionType::Sequential: return sg::kSequentialQueryJudge;
        case ExecutionType::MissingParams: return sg::kMissingParamsQueryJudge;
        case ExecutionType::None: break;
    }
    throw InvariantError("NONE queries are not judged");
}

std::string compose_guidance(const std::vector<std::string>& references, const std::string& dataset_guidance,
                             const std::string& feedback, NoneKind kind, ExecutionType type) {
    std::string out;
    if (!references.empty()) {
        out += "Reference queries already in the dataset (write something different):\n";
        for (const auto& r : references) out += "- " + r + "\n";
    }
    if (type == ExecutionType::None && kind == NoneKind::Vague) {
        if (!out.empty()) out += "\n";
        out += "Write requests that are completely vague or unrelated to any tool.\n";
    }
    if (!dataset_guidance.empty()) {
        if (!out.empty()) out += "\n";
        out += "Dataset guidance:\n" + dataset_guidance + "\n";
    }
    if (!feedback.empty()) {
        if (!out.empty()) out += "\n";
        out += "Feedback on the previous round:\n" + feedback + "\n";
    }
    return out.empty() ? std::string("None") : out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n\"");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n\"");
    return s.substr(b, e - b + 1);
}

}  // namespace

QueryGenerator::QueryGenerator(const RunConfig& config, LlmProvider& llm, Embedder& embedder)
    : config_(config), llm_(llm), embedder_(embedder) {}

FieldValues QueryGenerator::generator_inputs(const QuerySkeleton& s) const {
    switch (s.type) {
        case ExecutionType::Single:
            return {{"api_schema", function_to_json(*s.apis.at(0)).dump(2)}, {"target_parameters", s.arguments.at(0).dump()}};
        case ExecutionType::Parallel:
            return {{"api_schemas", schema_list(s).dump(2)}, {"target_parameters_list", Json(s.arguments).dump()}};
        case ExecutionType::Sequential:
            return {{"api_schemas", schema_list(s).dump(2)},
                    {"target_parameters_list", Json(s.arguments).dump()},
                    {"return_values_list", Json(s.return_values).dump()}};
        case ExecutionType::MissingParams:
            return {{"api_schema", function_to_json(*s.apis.at(0)).dump(2)},
                    {"provided_parameters", provided_only(s.arguments.at(0)).dump()},
                    {"missing_parameters", Json(s.missing).dump()}};
        case ExecutionType::None: return {};
    }
    return {};
}

std::optional<JudgeResult> QueryGenerator::judge_one(const std::string& candidate, const QuerySkeleton& skeleton) {
    FieldValues in = generator_inputs(skeleton);
    in["query"] = candidate;
    try {
        const auto out = call_signature(llm_, sg::get(judge_signature(skeleton.type)), in, config_.retry_limit);
        return JudgeResult{verdict_is_yes(out.at("is_reasonable")), out.at("reasoning")};
    } catch (const SignatureParseError&) {
        return std::nullopt;
    }
}

std::optional<std::vector<JudgeResult>> QueryGenerator::judge_batch(const std::vector<std::string>& candidates,
                                                                    const QuerySkeleton& skeleton) {
    FieldValues in = generator_inputs(skeleton);
    in["query"] = Json(candidates).dump();
    FieldValues out;
    try {
        out = call_signature(llm_, sg::get(judge_signature(skeleton.type)), in, 1);
    } catch (const SignatureParseError&) {
        return std::nullopt;
    }
    Json verdicts;
    try {
        verdicts = Json::parse(out.at("is_reasonable"));
    } catch (const Json::parse_error&) {
        return std::nullopt;
    }
    if (!verdicts.is_array() || verdicts.size() != candidates.size()) return std::nullopt;
    std::vector<JudgeResult> results;
    for (const auto& v : verdicts) {
        if (!v.is_string()) return std::nullopt;
        results.push_back({verdict_is_yes(v.get<std::string>()), out.at("reasoning")});
    }
    return results;
}

std::vector<JudgeResult> QueryGenerator::judge(const std::vector<std::string>& candidates,
                                               const QuerySkeleton& skeleton) {
    if (skeleton.type == ExecutionType::None) {
        return std::vector<JudgeResult>(candidates.size(), JudgeResult{true, "no tool call to verify"});
    }
    if (candidates.empty()) return {};
    if (config_.batch_judging && candidates.size() > 1) {
        if (auto batch = judge_batch(candidates, skeleton)) return *batch;
    }
    std::vector<JudgeResult> results;
    for (const auto& c : candidates) {
        results.push_back(judge_one(c, skeleton).value_or(JudgeResult{false, "parse failure"}));
    }
    return results;
}

std::string QueryGenerator::build_feedback(const std::vector<std::string>& candidates,
                                           const std::vector<JudgeResult>& verdicts,
                                           const std::vector<std::string>& ranked_pool) {
    std::size_t failed = 0;
    std::string judge_feedback;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        if (verdicts[i].valid) continue;
        ++failed;
        judge_feedback += "- \"" + candidates[i] + "\": " + verdicts[i].reasoning + "\n";
    }
    const bool validation = !verdicts.empty() && static_cast<double>(failed) / static_cast<double>(verdicts.size()) > 0.5;
    std::string ranking;
    for (std::size_t i = 0; i < ranked_pool.size(); ++i) ranking += std::to_string(i + 1) + ". " + ranked_pool[i] + "\n";
    try {
        const auto out = call_signature(llm_, sg::get(sg::kRoundFeedback),
                                        {{"focus", validation ? "validation" : "diversity"},
                                         {"judge_feedback", judge_feedback.empty() ? "None" : judge_feedback},
                                         {"diversity_ranking", ranking.empty() ? "None" : ranking}},
                                        config_.retry_limit);
        return (validation ? "[validation] " : "[diversity] ") + out.at("guidance");
    } catch (const SignatureParseError&) {
        return {};
    }
}

std::optional<QueryResult> QueryGenerator::generate(const QuerySkeleton& skeleton,
                                                    const std::vector<std::string>& dataset,
                                                    const std::string& guidance, Rng& rng) {
    std::vector<std::string> references;
    const std::size_t n_refs = std::min<std::size_t>(static_cast<std::size_t>(config_.reference_queries), dataset.size());
    for (auto i : rng.sample_indices(dataset.size(), n_refs)) references.push_back(dataset[i]);

    const auto& gen_sig = sg::get(generator_signature(skeleton.type));
    std::vector<std::string> pool;
    std::vector<JudgeResult> pool_verdicts;
    std::vector<int> pool_round;
    std::string feedback;
    std::string attempts;
    std::optional<std::size_t> best;
    CandidateRanking best_ranking;
    std::size_t best_rank_index = 0;
    std::vector<std::size_t> ranked_members;  // pool indices that took part in the last ranking

    for (int round = 1; round <= config_.query_rounds; ++round) {
        FieldValues in = generator_inputs(skeleton);
        in["dataset_guidance"] = compose_guidance(references, guidance, feedback, skeleton.none_kind, skeleton.type);
        in["previous_attempts"] = attempts.empty() ? "None" : attempts;

        std::vector<std::string> candidates;
        try {
            const auto out = call_signature(llm_, gen_sig, in, config_.retry_limit);
            for (int i = 1; i <= config_.candidates_per_round; ++i) {
                auto it = out.find("query_" + std::to_string(i));
                if (it == out.end()) continue;
                const std::string q = trim(it->second);
                if (!q.empty() && std::find(candidates.begin(), candidates.end(), q) == candidates.end()) {
                    candidates.push_back(q);
                }
            }
        } catch (const SignatureParseError& e) {
            attempts += "Round " + std::to_string(round) + ": no usable output (" + e.what() + ")\n";
            continue;
        }

        const auto verdicts = judge(candidates, skeleton);
        std::vector<std::size_t> round_valid;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!verdicts[i].valid) continue;
            if (std::find(pool.begin(), pool.end(), candidates[i]) != pool.end()) continue;
            pool.push_back(candidates[i]);
            pool_verdicts.push_back(verdicts[i]);
            pool_round.push_back(round);
            round_valid.push_back(pool.size() - 1);
        }

        std::vector<std::string> ranked_texts;
        if (!pool.empty()) {
            std::vector<std::size_t> members;
            if (config_.rank_cumulative_pool) {
                for (std::size_t i = 0; i < pool.size(); ++i) members.push_back(i);
            } else {
                members = round_valid;
                if (best && std::find(members.begin(), members.end(), *best) == members.end()) members.insert(members.begin(), *best);
            }
            if (!members.empty()) {
                std::vector<std::string> texts;
                for (auto i : members) texts.push_back(pool[i]);
                auto ranking = rank_candidates_by_diversity(dataset, texts, embedder_, config_.rrf_k);
                best = members[ranking.order.front()];
                best_rank_index = ranking.order.front();
                best_ranking = std::move(ranking);
                ranked_members = members;
                for (auto o : best_ranking.order) ranked_texts.push_back(pool[ranked_members[o]]);
            }
        }

        std::ostringstream log;
        log << "Round " << round << ":\n";
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            log << "- \"" << candidates[i] << "\" -> " << (verdicts[i].valid ? "VALID" : "INVALID");
            const auto pos = std::find(ranked_texts.begin(), ranked_texts.end(), candidates[i]);
            if (verdicts[i].valid && pos != ranked_texts.end()) log << " (diversity rank " << (pos - ranked_texts.begin() + 1) << ")";
            if (!verdicts[i].valid) log << ": " << verdicts[i].reasoning;
            log << "\n";
        }
        attempts += log.str();
        if (round < config_.query_rounds) feedback = build_feedback(candidates, verdicts, ranked_texts);
    }

    if (!best) return std::nullopt;
    QueryResult result;
    result.query = pool[*best];
    Json ranks = Json::object();
    for (std::size_t m = 0; m < kRankingMetrics.size(); ++m) {
        ranks[std::string(kRankingMetrics[m])] = best_ranking.ranks[best_rank_index][m];
    }
    result.trace = Json{{"query_round", pool_round[*best]},
                        {"judge_reasoning", pool_verdicts[*best].reasoning},
                        {"valid_pool_size", pool.size()},
                        {"diversity_ranks", ranks},
                        {"rrf_score", best_ranking.fused[best_rank_index]}};
    return result;
}

std::optional<PatternGuidance> refresh_dataset_guidance(const std::vector<std::string>& sample, LlmProvider& llm,
                                                        int max_attempts) {
    if (sample.empty()) return std::nullopt;
    std::string listing;
    for (const auto& q : sample) listing += "- " + q + "\n";
    std::ostringstream context;
    context << std::fixed << std::setprecision(4) << "type_token_ratio=" << type_token_ratio(sample)
            << ", compression_ratio=" << compression_ratio_diversity(sample) << ", sample_size=" << sample.size();
    try {
        const auto analysis = call_signature(llm, sg::get(sg::kDatasetPatternAnalysis),
                                             {{"dataset_sample", listing}, {"diversity_context", context.str()}},
                                             max_attempts);
        const auto guidance = call_signature(llm, sg::get(sg::kDiversityGuidanceGeneration),
                                             {{"dataset_sample", listing}, {"pattern_analysis", analysis.at("pattern_analysis")}},
                                             max_attempts);
        return PatternGuidance{analysis.at("pattern_analysis"), guidance.at("diversity_guidance")};
    } catch (const SignatureParseError&) {
        return std::nullopt;
    }
}

}  // namespace fcgen
