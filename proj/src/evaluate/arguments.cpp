#include "fcgen/evaluate/arguments.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fcgen/core/error.hpp"
#include "fcgen/core/rng.hpp"
#include "fcgen/metrics/entropy.hpp"
#include "fcgen/metrics/lexical.hpp"
#include "fcgen/metrics/readability.hpp"
#include "fcgen/metrics/stats.hpp"

namespace fcgen {

namespace {

constexpr const char* kPrefixA = "A::";
constexpr const char* kPrefixB = "B::";

FunctionLibrary prefixed(const FunctionLibrary& library, const std::string& prefix) {
    FunctionLibrary out = library;
    for (auto& f : out) f.name = prefix + f.name;
    return out;
}

ArgumentSide score_side(const std::vector<Json>& values, ParameterCategory category, Embedder& embedder,
                        std::uint64_t seed) {
    ArgumentSide s;
    s.sample = values;
    auto texts_of = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::string> t;
        for (auto i : idx) t.push_back(value_text(values[i]));
        return t;
    };
    auto values_of = [&](const std::vector<std::size_t>& idx) {
        std::vector<Json> v;
        for (auto i : idx) v.push_back(values[i]);
        return v;
    };
    std::vector<std::size_t> all(values.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    s.ncd = ncd_diversity(texts_of(all));
    s.entropy = value_cluster_entropy(values, category, embedder);
    s.ncd_std = bootstrap_std(values.size(), [&](const auto& idx) { return ncd_diversity(texts_of(idx)); }, seed);
    s.entropy_std = bootstrap_std(
        values.size(), [&](const auto& idx) { return value_cluster_entropy(values_of(idx), category, embedder); }, seed);
    return s;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

}  // namespace

std::map<std::size_t, std::vector<Json>> collect_group_values(const std::vector<GeneratedExample>& examples,
                                                              const GroupIndex& index, const std::string& prefix) {
    std::map<std::size_t, std::vector<Json>> out;
    for (const auto& e : examples) {
        for (const auto& inv : e.target_invocations) {
            if (!inv.arguments.is_object()) continue;
            for (const auto& [name, value] : inv.arguments.items()) {
                if (value.is_string() && value.get<std::string>() == kMissingSentinel) continue;
                const auto gid = index.find(prefix + inv.function_name, name);
                if (gid) out[*gid].push_back(value);
            }
        }
    }
    return out;
}

ArgumentReport compare_argument_diversity(const std::vector<GeneratedExample>& dataset_a,
                                          const FunctionLibrary& library_a,
                                          const std::vector<GeneratedExample>& dataset_b,
                                          const FunctionLibrary& library_b, Embedder& embedder, std::uint64_t seed,
                                          double grouping_threshold) {
    FunctionLibrary joint = prefixed(library_a, kPrefixA);
    const auto b = prefixed(library_b, kPrefixB);
    joint.insert(joint.end(), b.begin(), b.end());
    const auto groups = group_parameters(joint, embedder, grouping_threshold);
    const GroupIndex index(groups);
    const auto values_a = collect_group_values(dataset_a, index, kPrefixA);
    const auto values_b = collect_group_values(dataset_b, index, kPrefixB);

    ArgumentReport report;
    Rng rng(seed);
    for (const auto& g : groups) {
        if (g.category != ParameterCategory::Numerical && g.category != ParameterCategory::String) continue;
        const auto ia = values_a.find(g.id);
        const auto ib = values_b.find(g.id);
        if (ia == values_a.end() || ib == values_b.end()) continue;
        if (ia->second.size() < kMinGroupOccurrences || ib->second.size() < kMinGroupOccurrences) continue;
        GroupComparison row;
        row.group_id = g.id;
        row.category = g.category;
        const auto& seed_member = g.members.front();
        const auto sep = seed_member.function.find("::");
        row.label = seed_member.function.substr(sep + 2) + "." + seed_member.parameter;
        auto draw = [&](const std::vector<Json>& pool) {
            std::vector<Json> sample;
            for (auto i : rng.sample_indices(pool.size(), kArgumentSampleSize)) sample.push_back(pool[i]);
            return sample;
        };
        const auto sample_a = draw(ia->second);
        const auto sample_b = draw(ib->second);
        row.a = score_side(sample_a, g.category, embedder, seed);
        row.b = score_side(sample_b, g.category, embedder, seed);
        report.groups.push_back(std::move(row));
    }
    if (report.groups.empty()) {
        report.warnings.push_back("no parameter group reaches 20 values in both datasets");
        return report;
    }

    // Averages across groups; the std of a mean of independent estimates.
    auto average = [&](const std::string& metric, auto value, auto std_of) {
        AverageRow r;
        r.metric = metric;
        double va = 0, vb = 0, sa = 0, sb = 0;
        for (const auto& g : report.groups) {
            va += value(g.a);
            vb += value(g.b);
            sa += std::pow(std_of(g.a), 2);
            sb += std::pow(std_of(g.b), 2);
        }
        const double n = static_cast<double>(report.groups.size());
        r.value_a = va / n;
        r.value_b = vb / n;
        r.std_a = std::sqrt(sa) / n;
        r.std_b = std::sqrt(sb) / n;
        const auto sig = significance(r.value_a, r.std_a, r.value_b, r.std_b);
        r.significant = sig.significant;
        r.direction = sig.direction;
        return r;
    };
    report.averages.push_back(average(
        "ncd", [](const ArgumentSide& s) { return s.ncd; }, [](const ArgumentSide& s) { return s.ncd_std; }));
    report.averages.push_back(average(
        "cluster_entropy", [](const ArgumentSide& s) { return s.entropy; },
        [](const ArgumentSide& s) { return s.entropy_std; }));
    return report;
}

Json argument_frequency_table(const std::vector<GeneratedExample>& examples, const std::vector<ParameterGroup>& groups) {
    const GroupIndex index(groups);
    const auto values = collect_group_values(examples, index);
    Json out = Json::object();
    for (const auto& g : groups) {
        const auto it = values.find(g.id);
        if (it == values.end()) continue;
        std::map<std::string, std::size_t> counts;
        for (const auto& v : it->second) ++counts[value_text(v)];
        Json table = Json::object();
        for (const auto& [v, c] : counts) table[v] = c;
        out[g.members.front().function + "." + g.members.front().parameter] = table;
    }
    return out;
}

Json argument_report_to_json(const ArgumentReport& report) {
    auto side = [](const ArgumentSide& s) {
        return Json{{"ncd", s.ncd}, {"ncd_std", s.ncd_std}, {"cluster_entropy", s.entropy},
                    {"cluster_entropy_std", s.entropy_std}, {"sample", s.sample}};
    };
    Json groups = Json::array();
    for (const auto& g : report.groups) {
        groups.push_back({{"group", g.label}, {"category", to_string(g.category)}, {"a", side(g.a)}, {"b", side(g.b)}});
    }
    Json averages = Json::array();
    for (const auto& r : report.averages) {
        averages.push_back({{"metric", r.metric}, {"value_a", r.value_a}, {"std_a", r.std_a}, {"value_b", r.value_b},
                            {"std_b", r.std_b}, {"significant", r.significant}, {"direction", r.direction}});
    }
    return {{"groups", groups}, {"averages", averages}, {"warnings", report.warnings}};
}

std::string argument_report_table(const ArgumentReport& report) {
    std::ostringstream os;
    for (const auto& w : report.warnings) os << "warning: " << w << '\n';
    if (report.groups.empty()) return os.str();
    os << pad("group", 32) << pad("ncd A", 10) << pad("ncd B", 10) << pad("ce A", 10) << "ce B\n";
    for (const auto& g : report.groups) {
        os << pad(g.label, 32) << pad(fmt(g.a.ncd), 10) << pad(fmt(g.b.ncd), 10) << pad(fmt(g.a.entropy), 10)
           << fmt(g.b.entropy) << '\n';
    }
    for (const auto& r : report.averages) {
        os << pad("avg " + r.metric, 32) << fmt(r.value_a) << " +/- " << fmt(r.std_a) << "  " << fmt(r.value_b)
           << " +/- " << fmt(r.std_b) << (r.significant ? (r.direction > 0 ? "  A" : "  B") : "") << '\n';
    }
    return os.str();
}

}  // namespace fcgen
