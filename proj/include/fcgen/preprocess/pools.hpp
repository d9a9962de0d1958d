#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcgen/core/rng.hpp"
#include "fcgen/preprocess/grouping.hpp"

namespace fcgen {

struct ApiPools {
    std::vector<std::string> general;  ///< whole library, library order
    std::vector<std::string> focused;  ///< weighted draw, draw order
    std::vector<std::string> other;    ///< functions with an OTHER parameter, library order

    const std::vector<std::string>& pool(std::size_t index) const;
    bool operator==(const ApiPools&) const = default;
};

/// Weight of each function for the focused pool: the size of its largest group
/// (0 for a function without parameters).
std::vector<double> focused_weights(const FunctionLibrary& library, const std::vector<ParameterGroup>& groups);

/// Focused pool: ceil(n/3) functions (or `focused_size`) drawn without
/// replacement, each draw proportional to focused_weights over what remains.
ApiPools build_api_pools(const FunctionLibrary& library, const std::vector<ParameterGroup>& groups, Rng& rng,
                         std::optional<std::size_t> focused_size = std::nullopt);

}  // namespace fcgen
