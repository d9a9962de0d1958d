#include "fcgen/preprocess/artifact.hpp"

#include <fstream>

#include "fcgen/core/error.hpp"
#include "fcgen/core/library.hpp"

namespace fcgen {

PreprocessArtifact run_preprocess(const FunctionLibrary& library, Embedder& embedder, const RunConfig& config) {
    if (library.empty()) throw DomainError("preprocess: empty function library");
    PreprocessArtifact a;
    a.library = library;
    a.groups = group_parameters(library, embedder, config.grouping_threshold);
    Rng rng(config.rng_seed);
    a.pools = build_api_pools(library, a.groups, rng);
    a.graph = build_similarity_graph(library, embedder, config.graph_edge_threshold);
    return a;
}

Json artifact_to_json(const PreprocessArtifact& a) {
    Json groups = Json::array();
    for (const auto& g : a.groups) {
        Json members = Json::array();
        for (const auto& m : g.members) members.push_back(Json{{"function", m.function}, {"parameter", m.parameter}});
        groups.push_back(Json{{"id", g.id}, {"category", to_string(g.category)}, {"members", members}});
    }
    Json edges = Json::array();
    for (const auto& e : a.graph.edges) {
        edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"kind", to_string(e.kind)}, {"weight", e.weight}});
    }
    return Json{{"library", library_to_json(a.library)},
                {"groups", groups},
                {"pools", Json{{"general", a.pools.general}, {"focused", a.pools.focused}, {"other", a.pools.other}}},
                {"graph", Json{{"vertices", a.graph.vertices}, {"edges", edges}}}};
}

PreprocessArtifact artifact_from_json(const Json& doc) {
    try {
        PreprocessArtifact a;
        a.library = parse_function_library(doc.at("library"));
        for (const auto& g : doc.at("groups")) {
            ParameterGroup group;
            group.id = g.at("id").get<std::size_t>();
            group.category = parse_category(g.at("category").get<std::string>());
            for (const auto& m : g.at("members")) {
                group.members.push_back({m.at("function").get<std::string>(), m.at("parameter").get<std::string>()});
            }
            if (group.id != a.groups.size()) throw FormatError("artifact: group ids must be consecutive from 0");
            a.groups.push_back(std::move(group));
        }
        const Json& pools = doc.at("pools");
        a.pools.general = pools.at("general").get<std::vector<std::string>>();
        a.pools.focused = pools.at("focused").get<std::vector<std::string>>();
        a.pools.other = pools.at("other").get<std::vector<std::string>>();
        a.graph.vertices = doc.at("graph").at("vertices").get<std::vector<std::string>>();
        for (const auto& e : doc.at("graph").at("edges")) {
            a.graph.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                                     parse_edge_kind(e.at("kind").get<std::string>()), e.at("weight").get<double>()});
        }
        return a;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("artifact: ") + e.what());
    }
}

void write_artifact(const PreprocessArtifact& artifact, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << artifact_to_json(artifact).dump(2) << '\n';
}

PreprocessArtifact read_artifact(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open artifact " + path.string());
    try {
        return artifact_from_json(Json::parse(in));
    } catch (const Json::parse_error& e) {
        throw FormatError("artifact " + path.string() + ": " + e.what());
    }
}

}  // namespace fcgen
