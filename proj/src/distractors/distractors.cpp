#include "fcgen/distractors/distractors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fcgen/core/error.hpp"
#include "fcgen/core/library.hpp"
#include "fcgen/providers/catalog.hpp"

namespace fcgen {

namespace sg = signatures;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

Json api_briefs(const std::vector<std::string>& names, const FunctionLibrary& library) {
    Json out = Json::array();
    for (const auto& n : names) {
        out.push_back(Json{{"name", n}, {"description", require_function(library, n).description}});
    }
    return out;
}

Json schema_array(const std::vector<std::string>& names, const FunctionLibrary& library) {
    Json out = Json::array();
    for (const auto& n : names) out.push_back(function_to_json(require_function(library, n)));
    return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
    std::vector<std::string> out;
    try {
        const Json j = Json::parse(text);
        if (!j.is_array()) return out;
        for (const auto& v : j) {
            if (v.is_string()) out.push_back(v.get<std::string>());
            else if (v.is_object() && v.contains("name")) out.push_back(v.at("name").get<std::string>());
        }
    } catch (const Json::exception&) {
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n\"");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n\"");
    return s.substr(b, e - b + 1);
}

std::vector<int> parse_ratings(const std::string& text, const std::vector<std::string>& candidates) {
    const Json j = Json::parse(text);
    if (!j.is_array() || j.size() != candidates.size()) throw FormatError("rating count mismatch");
    std::vector<int> ratings(candidates.size(), 0);
    std::vector<bool> filled(candidates.size(), false);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& entry = j[i];
        int score = 0;
        std::size_t slot = i;
        if (entry.is_object()) {
            score = entry.at("score").get<int>();
            if (entry.contains("api_name")) {
                const auto it = std::find(candidates.begin(), candidates.end(), entry.at("api_name").get<std::string>());
                if (it == candidates.end()) throw FormatError("rating for unknown api");
                slot = static_cast<std::size_t>(it - candidates.begin());
            }
        } else {
            score = entry.get<int>();
        }
        if (score < 1 || score > 5 || filled[slot]) throw FormatError("bad rating entry");
        ratings[slot] = score;
        filled[slot] = true;
    }
    return ratings;
}

}  // namespace

std::vector<ScoredFunction> retrieve_candidates(const std::string& query, const FunctionLibrary& library,
                                                Embedder& embedder, std::size_t k,
                                                const std::vector<std::string>& targets, bool force_targets) {
    if (library.empty()) return {};
    std::vector<std::string> texts{query};
    for (const auto& f : library) texts.push_back(f.description.empty() ? f.name : f.description);
    const auto v = embedder.embed(texts);
    std::vector<ScoredFunction> all;
    for (std::size_t i = 0; i < library.size(); ++i) all.push_back({library[i].name, cosine_similarity(v[0], v[i + 1])});
    std::vector<ScoredFunction> sorted = all;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const ScoredFunction& a, const ScoredFunction& b) { return a.similarity > b.similarity; });
    sorted.resize(std::min(k, sorted.size()));
    if (force_targets) {
        for (const auto& t : targets) {
            const bool present = std::any_of(sorted.begin(), sorted.end(), [&](const ScoredFunction& s) { return s.name == t; });
            if (present) continue;
            const auto it = std::find_if(all.begin(), all.end(), [&](const ScoredFunction& s) { return s.name == t; });
            if (it == all.end()) throw InvariantError("target function not in library: " + t);
            sorted.push_back(*it);
        }
    }
    return sorted;
}

std::vector<int> score_plausibility(const std::string& query, const std::vector<std::string>& candidates,
                                    const std::vector<std::string>& targets, const FunctionLibrary& library,
                                    LlmProvider& llm, int max_attempts) {
    if (candidates.empty()) return {};
    const bool multi = targets.size() > 1;
    FieldValues in{{"query", query}, {"apis", api_briefs(candidates, library).dump(2)}};
    if (multi) in["target_apis"] = Json(targets).dump();
    else in["target_api"] = targets.empty() ? std::string("None") : targets.front();
    const auto& sig = sg::get(multi ? sg::kParallelApiRelevanceScorer : sg::kBatchApiRelevanceScorer);
    std::string last_error = "no attempt";
    for (int attempt = 0; attempt < std::max(1, max_attempts); ++attempt) {
        try {
            const auto out = call_signature(llm, sig, in, 1);
            return parse_ratings(out.at("scores"), candidates);
        } catch (const SignatureParseError& e) {
            last_error = e.what();
        } catch (const FormatError& e) {
            last_error = e.what();
        } catch (const Json::exception& e) {
            last_error = e.what();
        }
    }
    throw GenerationFailure("relevance scores unusable: " + last_error);
}

int plausibility_threshold(ExecutionType type) { return type == ExecutionType::MissingParams ? 1 : 2; }

std::vector<ScoredFunction> filter_by_plausibility(const std::vector<ScoredFunction>& scored,
                                                   const std::vector<int>& ratings,
                                                   const std::vector<std::string>& targets, ExecutionType type) {
    if (scored.size() != ratings.size()) throw InvariantError("plausibility: ratings misaligned");
    const int threshold = plausibility_threshold(type);
    std::vector<ScoredFunction> out;
    for (std::size_t i = 0; i < scored.size(); ++i) {
        if (contains(targets, scored[i].name) || ratings[i] <= threshold) out.push_back(scored[i]);
    }
    return out;
}

ElbowCut elbow_cutoff(const std::vector<double>& s, std::size_t min_keep) {
    const std::size_t n = s.size();
    if (n == 0) return {0, 0};
    if (n < 3) return {n - 1, n};
    std::size_t e = 1;
    double best = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double dd = (s[i] - s[i + 1]) - (s[i - 1] - s[i]);
        if (i == 1 || dd > best) {
            best = dd;
            e = i;
        }
    }
    const std::size_t keep = std::min(n, std::max({e + 1, min_keep, std::size_t{1}}));
    return {e, keep};
}

std::size_t min_keep_for(ExecutionType type, std::size_t target_count) {
    return (type == ExecutionType::Parallel || type == ExecutionType::Sequential) ? 2 * target_count : 1;
}

AlternativeOutcome validate_invocation_alternatives(const std::string& query,
                                                    const std::vector<std::string>& distractors,
                                                    const std::vector<std::string>& targets, ExecutionType type,
                                                    const std::vector<Json>& return_values,
                                                    const FunctionLibrary& library, LlmProvider& llm,
                                                    int max_attempts) {
    AlternativeOutcome out;
    out.candidates = distractors;
    out.targets = targets;
    out.type = type;
    std::vector<std::string> available = targets;
    available.insert(available.end(), distractors.begin(), distractors.end());

    std::vector<std::string> alternative;
    try {
        if (type == ExecutionType::Parallel) {
            const auto built = call_signature(llm, sg::get(sg::kConstructParallelInvocation),
                                              {{"query", query}, {"available_apis", api_briefs(available, library).dump(2)}},
                                              max_attempts);
            alternative = parse_name_list(built.at("invocation_apis"));
        } else if (type == ExecutionType::Sequential) {
            Json returns = Json::array();
            for (std::size_t step = 0; step < available.size(); ++step) {
                const auto built = call_signature(llm, sg::get(sg::kConstructSequentialInvocation),
                                                  {{"query", query},
                                                   {"available_apis", api_briefs(available, library).dump(2)},
                                                   {"invocations_up_to_this_point", Json(alternative).dump()},
                                                   {"return_values_up_to_this_point", returns.dump()}},
                                                  max_attempts);
                const std::string next = trim(built.at("next_api"));
                if (next.empty() || next == "NONE" || !contains(available, next) || contains(alternative, next)) break;
                const auto pos = std::find(targets.begin(), targets.end(), next);
                // Known intermediate outputs are passed along when the step matches the ground truth.
                if (pos != targets.end() && static_cast<std::size_t>(pos - targets.begin()) < return_values.size()) {
                    returns.push_back(return_values[static_cast<std::size_t>(pos - targets.begin())]);
                }
                alternative.push_back(next);
            }
        } else {
            throw InvariantError("alternative invocations apply to PARALLEL and SEQUENTIAL only");
        }
    } catch (const SignatureParseError& e) {
        out.note = std::string("construction unparseable: ") + e.what();
        return out;
    }

    // Drop unknown names and duplicates.
    std::vector<std::string> clean;
    for (const auto& a : alternative) {
        if (contains(available, a) && !contains(clean, a)) clean.push_back(a);
    }
    alternative = clean;
    const std::set<std::string> alt_set(alternative.begin(), alternative.end());
    const std::set<std::string> target_set(targets.begin(), targets.end());
    if (alternative.empty() || alt_set == target_set) return out;

    Verdict verdict;
    try {
        FieldValues in{{"query", query},
                       {"invocation_apis", Json(alternative).dump()},
                       {"api_schemas", schema_array(alternative, library).dump(2)}};
        const bool sequential = type == ExecutionType::Sequential;
        if (sequential) in["return_values_list"] = Json(return_values).dump();
        const auto checked = call_signature(
            llm, sg::get(sequential ? sg::kValidateSequentialInvocation : sg::kValidateParallelInvocation), in, max_attempts);
        verdict = {verdict_is_yes(checked.at("is_valid")), checked.at("reasoning")};
    } catch (const SignatureParseError&) {
        verdict = {false, "parse failure"};
    }
    if (!verdict.accepted) {
        out.note = "alternative rejected: " + verdict.reasoning;
        return out;
    }
    out.alternative = alternative;

    std::vector<std::string> kept;
    for (const auto& d : distractors) {
        if (!alt_set.count(d)) kept.push_back(d);
    }
    out.candidates = kept;
    const bool uses_only_targets =
        std::all_of(alternative.begin(), alternative.end(), [&](const std::string& a) { return target_set.count(a) > 0; });
    if (uses_only_targets && alt_set.size() < target_set.size()) {
        std::vector<std::string> shrunk;
        for (const auto& t : targets) {
            if (alt_set.count(t)) shrunk.push_back(t);
        }
        out.targets = shrunk;
        if (shrunk.size() == 1) {
            out.type = ExecutionType::Single;
        } else if (shrunk.empty() || type == ExecutionType::Sequential) {
            out.valid = false;
        }
        out.note = "targets reduced to a valid subset";
    } else {
        out.note = "removed distractors used by a valid alternative";
    }
    return out;
}

std::vector<std::string> finalize_candidates(const std::vector<std::string>& targets,
                                             const std::vector<std::string>& distractors, Rng& rng) {
    std::vector<std::string> all = targets;
    for (const auto& d : distractors) {
        if (!contains(all, d)) all.push_back(d);
    }
    rng.shuffle(all);
    return all;
}

DistractorOutcome select_distractors(const std::string& query, const std::vector<std::string>& targets,
                                     ExecutionType type, const std::vector<Json>& return_values,
                                     const FunctionLibrary& library, Embedder& embedder, LlmProvider& llm,
                                     const RunConfig& config, Rng& rng) {
    DistractorOutcome out;
    out.type = type;
    out.targets = targets;
    const bool force = type != ExecutionType::None;
    const auto retrieved =
        retrieve_candidates(query, library, embedder, static_cast<std::size_t>(config.retrieval_k), targets, force);
    std::vector<std::string> names;
    for (const auto& r : retrieved) names.push_back(r.name);
    const auto ratings = score_plausibility(query, names, targets, library, llm, config.retry_limit);
    const auto survivors = filter_by_plausibility(retrieved, ratings, targets, type);

    Json rating_log = Json::object();
    for (std::size_t i = 0; i < names.size(); ++i) rating_log[names[i]] = ratings[i];
    out.trace["plausibility"] = rating_log;

    const bool multi = type == ExecutionType::Parallel || type == ExecutionType::Sequential;
    if (multi && survivors.size() < 2 * targets.size()) {
        out.valid = false;
        out.trace["distractor_note"] = "too few plausible candidates";
        return out;
    }

    std::vector<ScoredFunction> pool;
    for (const auto& s : survivors) {
        if (!contains(targets, s.name)) pool.push_back(s);
    }
    std::vector<double> scores;
    for (const auto& p : pool) scores.push_back(p.similarity);
    const auto cut = elbow_cutoff(scores, min_keep_for(type, targets.size()));
    std::vector<std::string> distractors;
    for (std::size_t i = 0; i < cut.keep; ++i) distractors.push_back(pool[i].name);
    out.trace["elbow_keep"] = cut.keep;

    if (multi) {
        auto alt = validate_invocation_alternatives(query, distractors, targets, type, return_values, library, llm,
                                                    config.retry_limit);
        if (!alt.note.empty()) out.trace["alternative_note"] = alt.note;
        if (!alt.alternative.empty()) out.trace["alternative"] = alt.alternative;
        if (!alt.valid) {
            out.valid = false;
            return out;
        }
        distractors = alt.candidates;
        out.targets = alt.targets;
        out.type = alt.type;
    }
    out.candidates = finalize_candidates(out.targets, distractors, rng);
    return out;
}

}  // namespace fcgen
