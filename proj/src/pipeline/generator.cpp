#include "fcgen/pipeline/generator.hpp"

#include <cstdio>

#include "fcgen/core/dataset.hpp"
#include "fcgen/core/error.hpp"
#include "fcgen/distractors/distractors.hpp"
#include "fcgen/paramgen/paramgen.hpp"
#include "fcgen/providers/signature.hpp"
#include "fcgen/querygen/querygen.hpp"
#include "fcgen/sampler/sampler.hpp"

namespace fcgen {

namespace {

std::string example_id(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "ex-%06zu", index);
    return buf;
}

void log_event(std::ofstream* log, const Json& event) {
    if (log) *log << event.dump() << '\n' << std::flush;
}

void write_checkpoint(const GeneratorState& state, const std::filesystem::path& path) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ConfigError("cannot write checkpoint " + tmp);
        out << checkpoint_to_json(state).dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

bool has_required(const FunctionSchema& f) { return f.required_count() > 0; }

}  // namespace

Json checkpoint_to_json(const GeneratorState& state) {
    return {{"accepted", state.accepted}, {"attempts", state.attempts}, {"last_id", state.last_id},
            {"rng", state.rng.state()},   {"trackers", state.trackers.to_json()}, {"guidance", state.guidance}};
}

GeneratorState checkpoint_from_json(const Json& document) {
    GeneratorState s;
    try {
        s.accepted = document.at("accepted").get<std::size_t>();
        s.attempts = document.at("attempts").get<std::size_t>();
        s.last_id = document.at("last_id").get<std::string>();
        s.rng.set_state(document.at("rng").get<std::string>());
        s.trackers = TrackerSet::from_json(document.at("trackers"));
        s.guidance = document.at("guidance").get<std::string>();
    } catch (const Json::exception& e) {
        throw FormatError(std::string("checkpoint: ") + e.what());
    }
    return s;
}

Generator::Generator(const PreprocessArtifact& artifact, const RunConfig& config, LlmProvider& llm, Embedder& embedder)
    : artifact_(artifact), config_(config), llm_(llm), embedder_(embedder) {}

GeneratorState Generator::initial_state() const {
    GeneratorState s;
    s.rng = Rng(config_.rng_seed);
    s.trackers = TrackerSet(artifact_.groups.size());
    return s;
}

std::optional<Candidate> Generator::attempt(GeneratorState& state, std::string& reason) {
    ++state.attempts;
    try {
        return build(state, reason);
    } catch (const GenerationFailure& e) {
        reason = e.what();
    } catch (const SignatureParseError& e) {
        reason = e.what();
    } catch (const DomainError& e) {
        reason = e.what();
    }
    return std::nullopt;
}

std::optional<Candidate> Generator::build(GeneratorState& state, std::string& reason) {
    const auto& library = artifact_.library;
    Rng& rng = state.rng;
    const ExecutionType type = sample_execution_type(config_, rng);

    QuerySkeleton skeleton;
    skeleton.type = type;
    std::vector<const FunctionSchema*> apis;
    switch (type) {
        case ExecutionType::Single:
        case ExecutionType::MissingParams: {
            const auto& f = require_function(library, sample_single_api(artifact_.pools, rng));
            if (type == ExecutionType::MissingParams && !has_required(f)) {
                reason = "sampled function has no required parameter";
                return std::nullopt;
            }
            apis.push_back(&f);
            break;
        }
        case ExecutionType::Parallel:
        case ExecutionType::Sequential: {
            const WalkSettings walk{config_.walk_lambda, config_.walk_bias, config_.walk_retry_limit};
            for (const auto& name : sample_walk(artifact_.graph, type, walk, rng)) apis.push_back(&require_function(library, name));
            if (!check_pairwise_similarity(apis, embedder_, config_.pair_similarity_threshold)) {
                reason = "functions not similar enough";
                return std::nullopt;
            }
            if (type == ExecutionType::Sequential) {
                const auto v = validate_sequential_schema_compatibility(apis, llm_, config_.retry_limit);
                if (!v.accepted) {
                    reason = "incompatible chain: " + v.reasoning;
                    return std::nullopt;
                }
            }
            break;
        }
        case ExecutionType::None:
            skeleton.none_kind = rng.bernoulli(0.5) ? NoneKind::Vague : NoneKind::NoApi;
            break;
    }
    skeleton.apis = apis;

    ParamOutcome params;
    ParamGenerator paramgen(library, artifact_.groups, config_, llm_, embedder_);
    switch (type) {
        case ExecutionType::Single: params = paramgen.single(*apis[0], state.trackers, rng); break;
        case ExecutionType::MissingParams: params = paramgen.missing(*apis[0], state.trackers, rng); break;
        case ExecutionType::Parallel: params = paramgen.parallel(apis, state.trackers, rng); break;
        case ExecutionType::Sequential: params = paramgen.sequential(apis, state.trackers, rng); break;
        case ExecutionType::None: break;
    }
    skeleton.arguments = params.arguments;
    skeleton.return_values = params.return_values;
    skeleton.missing = params.missing;

    QueryGenerator querygen(config_, llm_, embedder_);
    const auto query = querygen.generate(skeleton, state.queries, state.guidance, rng);
    if (!query) {
        reason = "no valid query";
        return std::nullopt;
    }

    std::vector<std::string> targets;
    for (const auto* f : apis) targets.push_back(f->name);
    const auto picked = select_distractors(query->query, targets, type, params.return_values, library, embedder_, llm_,
                                           config_, rng);
    if (!picked.valid) {
        reason = "distractor selection rejected the example";
        return std::nullopt;
    }

    GeneratedExample ex;
    ex.id = example_id(state.accepted);
    ex.execution_type = picked.type;
    ex.query = query->query;
    std::vector<const FunctionSchema*> kept;
    std::vector<Json> kept_args;
    for (std::size_t i = 0; i < apis.size(); ++i) {
        if (std::find(picked.targets.begin(), picked.targets.end(), apis[i]->name) == picked.targets.end()) continue;
        kept.push_back(apis[i]);
        kept_args.push_back(params.arguments[i]);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        Invocation inv;
        inv.function_name = kept[i]->name;
        inv.arguments = kept_args[i];
        inv.order_index = picked.type == ExecutionType::Sequential ? static_cast<int>(i) : 0;
        ex.target_invocations.push_back(std::move(inv));
    }
    if (picked.type == ExecutionType::Sequential) ex.return_values = params.return_values;
    ex.candidate_functions = picked.candidates;

    Json meta = Json::object();
    meta["seed"] = config_.rng_seed;
    meta["attempt"] = state.attempts;
    meta["commit_order"] = state.accepted;
    meta["sampled_type"] = to_string(type);
    if (type == ExecutionType::None) meta["none_kind"] = skeleton.none_kind == NoneKind::Vague ? "vague" : "no_api";
    if (!params.missing.empty()) meta["missing_parameters"] = params.missing;
    meta["params"] = params.trace;
    meta["query"] = query->trace;
    meta["distractors"] = picked.trace;
    ex.metadata = std::move(meta);

    try {
        ex.validate(&library);
    } catch (const InvariantError& e) {
        reason = e.what();
        return std::nullopt;
    }
    // Reduced targets commit only the arguments the example keeps.
    if (kept.size() != apis.size()) params.delta = paramgen.delta_for(kept, kept_args);
    return Candidate{std::move(ex), std::move(params.delta)};
}

void Generator::accept(GeneratorState& state, const Candidate& candidate, std::ofstream* log) {
    const auto& example = candidate.example;
    commit_to_trackers(state.trackers, candidate.delta);
    state.queries.push_back(example.query);
    state.last_id = example.id;
    ++state.accepted;
    log_event(log, {{"event", "accepted"},
                    {"id", example.id},
                    {"type", to_string(example.execution_type)},
                    {"attempt", state.attempts},
                    {"commit_order", state.accepted - 1}});
    const auto period = static_cast<std::size_t>(std::max(1, config_.pattern_period));
    if (state.accepted % period != 0) return;
    const std::size_t k = std::min(state.queries.size(), static_cast<std::size_t>(std::max(0, config_.pattern_sample)));
    std::vector<std::string> sample;
    for (auto i : state.rng.sample_indices(state.queries.size(), k)) sample.push_back(state.queries[i]);
    try {
        if (const auto g = refresh_dataset_guidance(sample, llm_, config_.retry_limit)) {
            state.guidance = g->guidance;
            log_event(log, {{"event", "guidance"}, {"after", state.accepted}, {"patterns", g->patterns}});
        }
    } catch (const SignatureParseError& e) {
        log_event(log, {{"event", "guidance_failed"}, {"after", state.accepted}, {"reason", e.what()}});
    }
}

GenerateSummary Generator::run(const GenerateOptions& options) {
    if (options.out.empty()) throw ConfigError("generate: output path required");
    const auto checkpoint = options.checkpoint.empty() ? std::filesystem::path(options.out.string() + ".ckpt.json")
                                                       : options.checkpoint;
    const auto log_path = options.log.empty() ? std::filesystem::path(options.out.string() + ".log.jsonl") : options.log;

    GeneratorState state = initial_state();
    if (options.resume && std::filesystem::exists(checkpoint)) {
        std::ifstream in(checkpoint);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::exception& e) {
            throw FormatError("checkpoint " + checkpoint.string() + ": " + e.what());
        }
        state = checkpoint_from_json(doc);
        if (state.trackers.group_count() != artifact_.groups.size()) throw ConfigError("checkpoint does not match artifact");
        auto examples = std::filesystem::exists(options.out) ? read_dataset(options.out) : std::vector<GeneratedExample>{};
        if (examples.size() < state.accepted) throw FormatError("dataset is shorter than its checkpoint");
        if (examples.size() > state.accepted) {
            // Appended after the last checkpoint; replayed below.
            examples.resize(state.accepted);
            std::ofstream(options.out, std::ios::trunc).flush();
            for (const auto& e : examples) append_example(e, options.out);
        }
        for (const auto& e : examples) state.queries.push_back(e.query);
    } else {
        std::ofstream(options.out, std::ios::trunc).flush();
        std::ofstream(log_path, std::ios::trunc).flush();
        write_checkpoint(state, checkpoint);
    }
    std::ofstream log(log_path, std::ios::app);
    log_event(&log, {{"event", options.resume ? "resume" : "start"}, {"accepted", state.accepted}, {"target", options.n}});

    GenerateSummary summary;
    std::size_t consecutive = 0;
    while (state.accepted < options.n) {
        if (options.stop_after && state.accepted >= *options.stop_after) break;
        std::string reason;
        const auto cand = attempt(state, reason);
        if (!cand) {
            ++summary.abandoned;
            log_event(&log, {{"event", "abandoned"}, {"attempt", state.attempts}, {"reason", reason}});
            if (++consecutive >= options.max_consecutive_abandons) {
                write_checkpoint(state, checkpoint);
                throw GenerationFailure("gave up after " + std::to_string(consecutive) + " consecutive abandoned attempts");
            }
            continue;
        }
        consecutive = 0;
        append_example(cand->example, options.out);
        accept(state, *cand, &log);
        write_checkpoint(state, checkpoint);
    }
    summary.accepted = state.accepted;
    summary.attempts = state.attempts;
    summary.complete = state.accepted >= options.n;
    log_event(&log, {{"event", summary.complete ? "complete" : "stopped"}, {"accepted", state.accepted}});
    return summary;
}

}  // namespace fcgen
