#include "fcgen/preprocess/pools.hpp"

#include <algorithm>

#include "fcgen/core/error.hpp"

namespace fcgen {

const std::vector<std::string>& ApiPools::pool(std::size_t index) const {
    switch (index) {
        case 0: return general;
        case 1: return focused;
        case 2: return other;
        default: throw InvariantError("pool index out of range");
    }
}

std::vector<double> focused_weights(const FunctionLibrary& library, const std::vector<ParameterGroup>& groups) {
    const GroupIndex index(groups);
    std::vector<double> weights;
    weights.reserve(library.size());
    for (const auto& f : library) {
        double w = 0.0;
        for (const auto& p : f.parameters) {
            if (auto g = index.find(f.name, p.name)) {
                w = std::max(w, static_cast<double>(groups[*g].members.size()));
            }
        }
        weights.push_back(w);
    }
    return weights;
}

ApiPools build_api_pools(const FunctionLibrary& library, const std::vector<ParameterGroup>& groups, Rng& rng,
                         std::optional<std::size_t> focused_size) {
    ApiPools pools;
    for (const auto& f : library) {
        pools.general.push_back(f.name);
        if (std::any_of(f.parameters.begin(), f.parameters.end(),
                        [](const ParameterSpec& p) { return p.category == ParameterCategory::Other; })) {
            pools.other.push_back(f.name);
        }
    }
    std::vector<double> weights = focused_weights(library, groups);
    const std::size_t eligible =
        static_cast<std::size_t>(std::count_if(weights.begin(), weights.end(), [](double w) { return w > 0.0; }));
    const std::size_t target = std::min(eligible, focused_size.value_or((library.size() + 2) / 3));
    for (std::size_t k = 0; k < target; ++k) {
        const std::size_t pick = rng.categorical(weights);
        pools.focused.push_back(library[pick].name);
        weights[pick] = 0.0;
    }
    return pools;
}

}  // namespace fcgen
