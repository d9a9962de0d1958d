#include "fcgen/preprocess/grouping.hpp"

#include "fcgen/core/error.hpp"

namespace fcgen {

namespace {

std::string literal_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string describe_parameter(const ParameterSpec& spec) {
    std::string s = "The " + spec.name + " parameter is a " + spec.declared_type + " that " + spec.description;
    if (spec.category == ParameterCategory::Enum) {
        s += " and must be one of: ";
        for (std::size_t i = 0; i < spec.enum_values.size(); ++i) {
            if (i) s += ", ";
            s += literal_text(spec.enum_values[i]);
        }
    }
    return s;
}

std::string describe_return_field(const ReturnField& field) {
    return "The " + field.name + " parameter is a " + field.declared_type + " that " + field.description;
}

std::vector<ParameterGroup> group_parameters(const FunctionLibrary& library, Embedder& embedder, double threshold) {
    struct Item {
        GroupMember member;
        ParameterCategory category;
        std::string text;
    };
    std::vector<Item> items;
    for (const auto& f : library) {
        for (const auto& p : f.parameters) items.push_back({{f.name, p.name}, p.category, describe_parameter(p)});
    }
    if (items.empty()) return {};

    std::vector<std::string> texts;
    for (const auto& it : items) texts.push_back(it.text);
    const auto vectors = embedder.embed(texts);

    std::vector<bool> grouped(items.size(), false);
    std::vector<ParameterGroup> groups;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (grouped[i]) continue;
        ParameterGroup g;
        g.id = groups.size();
        g.category = items[i].category;
        g.members.push_back(items[i].member);
        grouped[i] = true;
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (grouped[j] || items[j].category != items[i].category) continue;
            if (cosine_similarity(vectors[i], vectors[j]) >= threshold) {
                g.members.push_back(items[j].member);
                grouped[j] = true;
            }
        }
        groups.push_back(std::move(g));
    }
    return groups;
}

GroupIndex::GroupIndex(const std::vector<ParameterGroup>& groups) {
    for (const auto& g : groups) {
        for (const auto& m : g.members) index_[{m.function, m.parameter}] = g.id;
    }
}

std::optional<std::size_t> GroupIndex::find(std::string_view function, std::string_view parameter) const {
    auto it = index_.find(std::pair<std::string, std::string>(function, parameter));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GroupIndex::require(std::string_view function, std::string_view parameter) const {
    auto g = find(function, parameter);
    if (!g) throw InvariantError("no parameter group for " + std::string(function) + "." + std::string(parameter));
    return *g;
}

}  // namespace fcgen
