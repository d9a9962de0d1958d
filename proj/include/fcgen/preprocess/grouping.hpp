#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcgen/core/types.hpp"
#include "fcgen/providers/embedder.hpp"

namespace fcgen {

struct GroupMember {
    std::string function;
    std::string parameter;

    bool operator==(const GroupMember&) const = default;
    auto operator<=>(const GroupMember&) const = default;
};

struct ParameterGroup {
    std::size_t id = 0;
    ParameterCategory category = ParameterCategory::Other;
    std::vector<GroupMember> members;  ///< seed first, then absorbed members in library order

    bool operator==(const ParameterGroup&) const = default;
};

/// "The {name} parameter is a {type} that {description}", plus
/// " and must be one of: a, b" for enum parameters.
std::string describe_parameter(const ParameterSpec& spec);
/// Same template for a return-schema field.
std::string describe_return_field(const ReturnField& field);

/// Seed-anchored single-pass grouping within each category. Groups are
/// numbered in the library order of their seeds.
std::vector<ParameterGroup> group_parameters(const FunctionLibrary& library, Embedder& embedder,
                                             double threshold = 0.6);

/// (function, parameter) -> group id.
class GroupIndex {
public:
    GroupIndex() = default;
    explicit GroupIndex(const std::vector<ParameterGroup>& groups);
    std::optional<std::size_t> find(std::string_view function, std::string_view parameter) const;
    std::size_t require(std::string_view function, std::string_view parameter) const;

private:
    std::map<std::pair<std::string, std::string>, std::size_t, std::less<>> index_;
};

}  // namespace fcgen
