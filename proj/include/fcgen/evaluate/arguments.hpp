#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fcgen/core/types.hpp"
#include "fcgen/preprocess/grouping.hpp"
#include "fcgen/providers/embedder.hpp"

namespace fcgen {

inline constexpr std::size_t kMinGroupOccurrences = 20;
inline constexpr std::size_t kArgumentSampleSize = 20;

struct ArgumentSide {
    double ncd = 0.0, ncd_std = 0.0;
    double entropy = 0.0, entropy_std = 0.0;
    std::vector<Json> sample;
};

struct GroupComparison {
    std::size_t group_id = 0;
    ParameterCategory category = ParameterCategory::Other;
    std::string label;  ///< first member as function.parameter
    ArgumentSide a, b;
};

struct AverageRow {
    std::string metric;  ///< "ncd" or "cluster_entropy"
    double value_a = 0.0, std_a = 0.0;
    double value_b = 0.0, std_b = 0.0;
    bool significant = false;
    int direction = 0;
};

struct ArgumentReport {
    std::vector<GroupComparison> groups;
    std::vector<AverageRow> averages;  ///< empty when no group qualifies
    std::vector<std::string> warnings;
};

/// Committed argument values per group of one dataset. Values of functions
/// that are not in `groups` are ignored; the missing sentinel never counts.
std::map<std::size_t, std::vector<Json>> collect_group_values(const std::vector<GeneratedExample>& examples,
                                                              const GroupIndex& index, const std::string& prefix = {});

/// Groups both libraries jointly, keeps numerical and string groups seen at
/// least 20 times in each dataset, samples 20 values per side and scores
/// NCD diversity and cluster entropy with bootstrap stds (floor of 80%).
ArgumentReport compare_argument_diversity(const std::vector<GeneratedExample>& dataset_a,
                                          const FunctionLibrary& library_a,
                                          const std::vector<GeneratedExample>& dataset_b,
                                          const FunctionLibrary& library_b, Embedder& embedder, std::uint64_t seed,
                                          double grouping_threshold = 0.6);

/// value -> count per group, keyed by "function.parameter" of the group seed.
Json argument_frequency_table(const std::vector<GeneratedExample>& examples, const std::vector<ParameterGroup>& groups);

Json argument_report_to_json(const ArgumentReport& report);
std::string argument_report_table(const ArgumentReport& report);

}  // namespace fcgen
