#pragma once

#include <string>
#include <vector>

#include "fcgen/core/config.hpp"
#include "fcgen/core/rng.hpp"
#include "fcgen/paramgen/trackers.hpp"
#include "fcgen/paramgen/values.hpp"
#include "fcgen/preprocess/grouping.hpp"
#include "fcgen/providers/embedder.hpp"
#include "fcgen/providers/llm.hpp"

namespace fcgen {

/// Arguments for one example, ready to commit.
struct ParamOutcome {
    std::vector<Json> arguments;      ///< one object per API, in the order given
    std::vector<Json> return_values;  ///< SEQUENTIAL only: one per API except the last
    std::vector<std::string> missing; ///< MISSING_PARAMS only: omitted parameter names
    TrackerDelta delta;               ///< every non-sentinel argument, API order then schema order
    Json trace = Json::object();      ///< attempts, validator reasoning, diverse API choice
};

class ParamGenerator {
public:
    ParamGenerator(const FunctionLibrary& library, const std::vector<ParameterGroup>& groups, const RunConfig& config,
                   LlmProvider& llm, Embedder& embedder);

    ParamOutcome single(const FunctionSchema& api, const TrackerSet& trackers, Rng& rng);
    ParamOutcome parallel(const std::vector<const FunctionSchema*>& apis, const TrackerSet& trackers, Rng& rng);
    ParamOutcome sequential(const std::vector<const FunctionSchema*>& apis, const TrackerSet& trackers, Rng& rng);
    ParamOutcome missing(const FunctionSchema& api, const TrackerSet& trackers, Rng& rng);

    /// Unparseable validator output counts as NO with reason "parse failure".
    Verdict validate_parameter_set(const FunctionSchema& api, const Json& arguments, bool partial);
    Verdict validate_return_value(const FunctionSchema& api, const Json& return_value, const Json& arguments,
                                  const FunctionSchema& next, const Json& next_arguments);
    Verdict validate_sequential_chain(const std::vector<const FunctionSchema*>& apis, const std::vector<Json>& arguments,
                                      const std::vector<Json>& return_values);

    /// Value for one STRING or NUMERICAL parameter through candidates and greedy selection.
    DiverseChoice diverse_value(const FunctionSchema& api, const ParameterSpec& parameter, const Json& chosen_so_far,
                                const std::vector<Json>& group_values, const std::string& failures, Rng& rng);

    /// Tracker entries for the given arguments, API order then schema order.
    TrackerDelta delta_for(const std::vector<const FunctionSchema*>& apis, const std::vector<Json>& arguments) const;

private:
    Json diverse_arguments(const FunctionSchema& api, const TrackerSet& trackers, TrackerDelta& pending,
                           const std::vector<std::string>& omitted, const std::string& failures, Rng& rng);
    Json cohesive_arguments(const FunctionSchema& api, const Json& context, const TrackerSet& trackers,
                            const std::string& failures, Rng& rng);
    Json sequential_arguments(const FunctionSchema& api, const Json& return_value, const Json& next_arguments,
                              const Json& later_arguments, const TrackerSet& trackers, const std::string& failures,
                              Rng& rng);
    Json generate_return_value(const FunctionSchema& api, const FunctionSchema& next, const Json& next_arguments,
                               const std::string& failures);
    Json single_value(std::string_view signature, const FunctionSchema& api, const ParameterSpec& parameter,
                      FieldValues inputs, const std::vector<Json>& existing, const std::string& failures);
    bool include_parameter(const ParameterSpec& parameter, Rng& rng) const;
    std::string group_context(const FunctionSchema& api, const ParameterSpec& parameter) const;
    std::vector<Json> group_values(const FunctionSchema& api, const ParameterSpec& parameter,
                                   const TrackerSet& trackers, const TrackerDelta& pending) const;

    const FunctionLibrary& library_;
    const std::vector<ParameterGroup>& groups_;
    GroupIndex index_;
    const RunConfig& config_;
    LlmProvider& llm_;
    Embedder& embedder_;
};

}  // namespace fcgen
