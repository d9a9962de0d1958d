#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fcgen/core/config.hpp"
#include "fcgen/core/dataset.hpp"
#include "fcgen/core/error.hpp"
#include "fcgen/core/library.hpp"
#include "fcgen/evaluate/arguments.hpp"
#include "fcgen/evaluate/linguistic.hpp"
#include "fcgen/evaluate/model_eval.hpp"
#include "fcgen/pipeline/generator.hpp"
#include "fcgen/preprocess/artifact.hpp"
#include "fcgen/providers/http_providers.hpp"

using namespace fcgen;

namespace {

constexpr int kOk = 0;
constexpr int kRuntime = 1;
constexpr int kUsage = 2;

RunConfig config_for(const std::string& path, std::optional<std::uint64_t> seed) {
    RunConfig cfg = path.empty() ? RunConfig{} : load_config(path);
    if (seed) cfg.rng_seed = *seed;
    cfg.validate();
    return cfg;
}

void require_file(const std::string& path, const std::string& what) {
    if (!std::filesystem::is_regular_file(path)) throw ConfigError(what + " not found: " + path);
}

void write_report(const std::string& out, const Json& doc, const std::string& table) {
    std::cout << table;
    if (out.empty()) return;
    std::ofstream(out, std::ios::trunc) << doc.dump(2) << '\n';
    std::ofstream(out + ".txt", std::ios::trunc) << table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Function-calling dataset generator"};
    app.require_subcommand(1);

    std::string config_path, out;
    std::optional<std::uint64_t> seed;
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "Run configuration (JSON)");
        cmd->add_option("--seed", seed, "Overrides rng_seed");
        cmd->add_option("--out", out, "Output path");
    };

    std::string library_path;
    auto* pre = app.add_subcommand("preprocess", "Group parameters, build API pools and the similarity graph");
    common(pre);
    pre->add_option("--library", library_path, "Function library (JSON array)")->required();
    pre->get_option("--out")->required();

    std::string artifact_path, checkpoint, log_path;
    std::size_t n = 0;
    bool resume = false;
    std::optional<std::size_t> stop_after;
    auto* gen = app.add_subcommand("generate", "Generate a dataset");
    common(gen);
    gen->add_option("--artifact", artifact_path, "Preprocess artifact")->required();
    gen->add_option("--n", n, "Examples to accept")->required();
    gen->add_option("--checkpoint", checkpoint, "Checkpoint file (default <out>.ckpt.json)");
    gen->add_option("--log", log_path, "Run log (default <out>.log.jsonl)");
    gen->add_flag("--resume", resume, "Continue from the checkpoint");
    gen->add_option("--stop-after", stop_after, "Stop after this many accepted examples");
    gen->get_option("--out")->required();

    std::string dataset_path;
    auto* ana = app.add_subcommand("analyze", "Linguistic diversity of one dataset");
    common(ana);
    ana->add_option("--dataset", dataset_path, "Dataset (JSONL)")->required();

    std::string path_a, path_b, lib_a, lib_b;
    auto* cmp = app.add_subcommand("compare", "Compare the diversity of two datasets");
    common(cmp);
    cmp->add_option("--a", path_a, "First dataset")->required();
    cmp->add_option("--b", path_b, "Second dataset")->required();
    cmp->add_option("--library-a", lib_a, "Library of the first dataset (enables argument comparison)");
    cmp->add_option("--library-b", lib_b, "Library of the second dataset");

    std::string predictions, references, baseline;
    bool use_judge = false;
    auto* eva = app.add_subcommand("evaluate", "Score model predictions against a dataset");
    common(eva);
    eva->add_option("--predictions", predictions, "Predictions (JSONL of {id, calls})")->required();
    eva->add_option("--references", references, "Reference dataset")->required();
    eva->add_option("--baseline", baseline, "Baseline predictions for the paired test");
    eva->add_option("--library", library_path, "Function library for judge context");
    eva->add_flag("--judge", use_judge, "Send argument mismatches to the equivalence judge");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*pre) {
            require_file(library_path, "function library");
            const auto cfg = config_for(config_path, seed);
            const auto library = load_function_library(library_path);
            const auto embedder = make_embedder(cfg.embedder);
            const auto artifact = run_preprocess(library, *embedder, cfg);
            write_artifact(artifact, out);
            std::cout << "functions " << artifact.library.size() << ", groups " << artifact.groups.size() << ", edges "
                      << artifact.graph.edges.size() << '\n';
        } else if (*gen) {
            require_file(artifact_path, "artifact");
            const auto cfg = config_for(config_path, seed);
            const auto artifact = read_artifact(artifact_path);
            const auto llm = make_llm(cfg.llm);
            const auto embedder = make_embedder(cfg.embedder);
            Generator generator(artifact, cfg, *llm, *embedder);
            GenerateOptions opts;
            opts.n = n;
            opts.out = out;
            opts.checkpoint = checkpoint;
            opts.log = log_path;
            opts.resume = resume;
            opts.stop_after = stop_after;
            const auto summary = generator.run(opts);
            std::cout << "accepted " << summary.accepted << " of " << n << " (" << summary.abandoned
                      << " abandoned this session)\n";
        } else if (*ana) {
            require_file(dataset_path, "dataset");
            const auto cfg = config_for(config_path, seed);
            const auto embedder = make_embedder(cfg.embedder);
            const auto profile = analyze_corpus(dataset_queries(read_dataset(dataset_path)), *embedder, cfg.rng_seed);
            write_report(out, profile_to_json(profile), profile_table(profile));
        } else if (*cmp) {
            require_file(path_a, "dataset");
            require_file(path_b, "dataset");
            const auto cfg = config_for(config_path, seed);
            const auto embedder = make_embedder(cfg.embedder);
            const auto a = read_dataset(path_a);
            const auto b = read_dataset(path_b);
            const auto report =
                compare_linguistic_diversity(dataset_queries(a), dataset_queries(b), *embedder, cfg.rng_seed,
                                             std::filesystem::path(path_a).filename().string(),
                                             std::filesystem::path(path_b).filename().string());
            Json doc = {{"linguistic", report_to_json(report)}};
            std::string table = report_table(report);
            if (!lib_a.empty() || !lib_b.empty()) {
                if (lib_a.empty() || lib_b.empty()) throw ConfigError("--library-a and --library-b go together");
                const auto args = compare_argument_diversity(a, load_function_library(lib_a), b,
                                                             load_function_library(lib_b), *embedder, cfg.rng_seed,
                                                             cfg.grouping_threshold);
                doc["arguments"] = argument_report_to_json(args);
                table += "\n" + argument_report_table(args);
            }
            write_report(out, doc, table);
        } else if (*eva) {
            require_file(predictions, "predictions");
            require_file(references, "references");
            const auto cfg = config_for(config_path, seed);
            const auto refs = read_dataset(references);
            const auto preds = read_predictions(predictions);
            std::vector<Prediction> base;
            if (!baseline.empty()) base = read_predictions(baseline);
            std::optional<FunctionLibrary> library;
            if (!library_path.empty()) library = load_function_library(library_path);
            std::shared_ptr<LlmProvider> judge;
            if (use_judge) judge = make_llm(cfg.llm);
            const auto report = evaluate_predictions(refs, preds, baseline.empty() ? nullptr : &base,
                                                     library ? &*library : nullptr, judge.get());
            const Json doc = evaluation_to_json(report);
            write_report(out, doc, doc.dump(2) + "\n");
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kOk;
}
