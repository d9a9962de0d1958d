#include "fcgen/providers/catalog.hpp"

#include <algorithm>

namespace fcgen::signatures {

namespace {

using F = SignatureField;

// Field descriptions shared by the parameter-value generators.
const F kParamName{"parameter_name", "Name of the parameter"};
const F kParamDesc{"parameter_description", "What the parameter controls"};
const F kParamType{"parameter_type", "Declared data type of the parameter"};
const F kFnName{"function_name", "Function the parameter belongs to"};
const F kFnDesc{"function_description", "What the function does"};
const F kOtherValues{"other_parameter_values", "Values already chosen for the other parameters of this call"};
const F kExisting{"existing_values", "Values previously generated for this parameter group"};
const F kGroupCtx{"parameter_group_context", "Related parameters that share this semantic group"};
const F kFailures{"previous_failures", "'None', or what went wrong in earlier attempts (validator feedback)"};
const F kReasoning{"reasoning", "Step-by-step analysis"};
const F kGeneratedValue{"generated_value", "The single generated value, no explanation"};
const F kReturnValue{"return_value", "JSON return value this API will produce; the value must be consistent with it"};
const F kNextParams{"next_api_parameters", "Parameter values of the next API in the chain"};
const F kLaterParams{"later_api_parameters", "Parameter values of every later API in the chain"};
const F kParallelCtx{"parallel_context_parameters",
                     "JSON array of parameter dictionaries of the other APIs called in parallel; reuse identical "
                     "values (location, date, identifier) when appropriate"};
const F kGuidance{"dataset_guidance", "Reference queries, dataset-level diversity guidance and round feedback"};
const F kAttempts{"previous_attempts", "Earlier candidate queries with judge verdicts and diversity ranks"};
const F kQuery{"query", "The user query"};
const F kApiSchemas{"api_schemas", "JSON array of the API schemas, in execution order"};
const F kApiSchema{"api_schema", "JSON schema of the target API"};

std::vector<F> queries_out() {
    std::vector<F> out{kReasoning};
    for (int i = 1; i <= 5; ++i) {
        out.push_back({"query_" + std::to_string(i), "Candidate query " + std::to_string(i)});
    }
    return out;
}

std::vector<PromptSignature> build() {
    std::vector<PromptSignature> s;
    auto add = [&s](std::string_view name, std::string objective, std::vector<F> in, std::vector<F> out) {
        s.push_back(PromptSignature{std::string(name), std::move(objective), std::move(in), std::move(out)});
    };

    add(kValidateSequentialSchemaCompatibility,
        "Decide whether the API schemas allow a true sequential chain before any parameters are generated: "
        "every API after the first must be able to take, and must need, the previous API's output.",
        {kApiSchemas},
        {kReasoning, {"is_compatible", "YES if the schemas support a mandatory sequential dependency, otherwise NO"}});

    const F values_out{"generated_values",
                       "JSON list of feasible values, each as different as possible from the existing values "
                       "and from each other. Only the JSON list."};
    const F num_candidates{"num_candidates", "How many candidates to generate"};
    add(kGenerateMultipleStringParameters,
        "Generate a batch of diverse, feasible string values for one parameter.",
        {kParamName, kParamDesc, kParamType, kFnName, kFnDesc, kOtherValues, kExisting, kGroupCtx, num_candidates,
         kFailures},
        {kReasoning, values_out});
    add(kGenerateMultipleNumericalParameters,
        "Generate a batch of diverse, feasible numerical values for one parameter.",
        {kParamName, kParamDesc, kParamType, kFnName, kFnDesc, kOtherValues, kExisting, kGroupCtx, num_candidates,
         kFailures},
        {kReasoning, values_out});
    add(kGenerateOtherParameter,
        "Generate one feasible value for a structured (list, object or flag) parameter.",
        {kParamName, kParamDesc, kParamType, kFnName, kFnDesc, kOtherValues, kExisting, kGroupCtx, kFailures},
        {kGeneratedValue});

    add(kGenerateCohesiveStringParameter,
        "Generate a string value that fits the other APIs of a parallel invocation; coherence first, "
        "diversity second.",
        {kParamName, kParamDesc, kParamType, kFnName, kFnDesc, kOtherValues, kParallelCtx, kExisting, kGroupCtx,
         kFailures},
        {kReasoning, kGeneratedValue});
    add(kGenerateCohesiveNumericalParameter,
        "Generate a numerical value that fits the other APIs of a parallel invocation; coherence first, "
        "diversity second.",
        {kParamName, kParamDesc, kParamType, kFnName, kFnDesc, kOtherValues, kParallelCtx, kExisting, kGroupCtx,
         kFailures},
        {kReasoning, kGeneratedValue});
    add(kGenerateCohesiveOtherParameter,
        "Generate a structured value that fits the other APIs of a parallel invocation.",
        {kParamName, kParamDesc, kParamType, kFnName, kFnDesc, kOtherValues, kParallelCtx, kExisting, kGroupCtx,
         kFailures},
        {kGeneratedValue});

    const std::vector<F> sequential_in{kParamName,   kParamDesc,  kParamType, kFnName,   kFnDesc,  kOtherValues,
                                       kReturnValue, kNextParams, kLaterParams, kExisting, kGroupCtx, kFailures};
    add(kGenerateSequentialCohesiveStringParameter,
        "Generate a string value for an API inside a sequential chain. Priority: the API's own return value, "
        "then the next API's parameters, then the API's purpose.",
        sequential_in, {kReasoning, kGeneratedValue});
    add(kGenerateSequentialCohesiveNumericalParameter,
        "Generate a numerical value for an API inside a sequential chain. Priority: the API's own return value, "
        "then the next API's parameters, then the API's purpose.",
        sequential_in, {kReasoning, kGeneratedValue});
    add(kGenerateSequentialCohesiveOtherParameter,
        "Generate a structured value for an API inside a sequential chain.", sequential_in, {kGeneratedValue});

    add(kGenerateReturnValue,
        "Generate a realistic return value for an API whose output feeds the next API of a chain. It must match "
        "the return schema and contain what the next API's parameter values need.",
        {{"api_name", "Name of the API"},
         {"api_description", "What the API does"},
         {"return_type_schema", "JSON schema of the return value"},
         {"next_api_name", "Name of the API that consumes this output"},
         {"next_api_description", "What the next API does"},
         {"next_api_parameters_schema", "Parameter schema of the next API"},
         {"next_api_parameters_values", "Parameter values already chosen for the next API"},
         kFailures},
        {kReasoning, {"return_value", "The return value as JSON"}});

    const F is_valid{"is_valid", "YES or NO"};
    add(kParameterSetValidator, "Check that a set of parameter values forms a coherent, conflict-free API call.",
        {{"api_name", "Name of the API"},
         {"api_description", "What the API does"},
         {"full_parameter_schema", "All parameters, required and optional, with descriptions"},
         {"selected_parameters", "JSON object of the chosen parameter values"}},
        {kReasoning, is_valid});
    add(kPartialParameterSetValidator,
        "Check that a partial set of parameter values is coherent. Parameters marked as intentionally missing "
        "are expected; do not reject the set because required parameters are absent.",
        {{"api_name", "Name of the API"},
         {"api_description", "What the API does"},
         {"full_parameter_schema", "All parameters, required and optional, with descriptions"},
         {"provided_parameters", "JSON object of the provided values; omitted ones carry the missing sentinel"}},
        {kReasoning, is_valid});
    add(kValidateReturnValue, "Check that a return value is appropriate for an API inside a sequential chain.",
        {{"api_name", "Name of the API"},
         {"api_description", "What the API does"},
         {"return_type_schema", "JSON schema of the return value"},
         {"return_value", "The generated return value"},
         {"api_parameters", "Parameter values of this API"},
         {"next_api_name", "Name of the next API"},
         {"next_api_description", "What the next API does"},
         {"next_api_parameters", "Parameter values of the next API"}},
        {kReasoning, is_valid});
    add(kValidateSequentialChain,
        "Validate a whole sequential chain: parameter validity, return-value validity, and a strict data "
        "dependency of every API on its predecessor's output.",
        {kApiSchemas,
         {"parameters_list", "JSON array of parameter objects, one per API"},
         {"return_values_list", "JSON array of return values for every API except the last"}},
        {kReasoning, is_valid});

    add(kNoApiQueryGenerator,
        "Generate natural user queries that can be answered from general knowledge without calling any API.",
        {kGuidance, kAttempts}, queries_out());
    add(kSequentialQueryGenerator,
        "Generate natural user queries that require the APIs to run in sequence. Describe the end goal, not the "
        "steps, and do not mention values that only appear in intermediate outputs.",
        {kApiSchemas, {"target_parameters_list", "JSON array of argument objects, one per API"},
         {"return_values_list", "JSON array of intermediate return values"}, kGuidance, kAttempts},
        queries_out());
    add(kParallelQueryGenerator,
        "Generate natural user queries that need every API called together, with all argument values "
        "stated or inferable from the query text.",
        {kApiSchemas, {"target_parameters_list", "JSON array of argument objects, one per API"}, kGuidance,
         kAttempts},
        queries_out());
    add(kMultiQueryGenerator, "Generate diverse natural user queries for one specific API call.",
        {kApiSchema, {"target_parameters", "JSON object of the argument values"}, kGuidance, kAttempts},
        queries_out());
    add(kMissingParamsQueryGenerator,
        "Generate natural user queries that clearly need the API but leave the listed required parameters "
        "impossible to infer.",
        {kApiSchema, {"provided_parameters", "JSON object of the values the query states"},
         {"missing_parameters", "JSON array of required parameters the query must not reveal"}, kGuidance,
         kAttempts},
        queries_out());

    const F is_reasonable{"is_reasonable", "YES or NO"};
    add(kSequentialQueryJudge,
        "Judge whether the query justifies calling the APIs in sequence with these arguments: every API needed, "
        "first arguments inferable from the query, later ones from the query or earlier outputs.",
        {kQuery, kApiSchemas, {"target_parameters_list", "JSON array of argument objects"},
         {"return_values_list", "JSON array of intermediate return values"}},
        {kReasoning, is_reasonable});
    add(kParallelQueryJudge,
        "Judge whether the query justifies calling all APIs in parallel; every argument must be inferable from "
        "the query text alone.",
        {kQuery, kApiSchemas, {"target_parameters_list", "JSON array of argument objects"}},
        {kReasoning, is_reasonable});
    add(kApiQueryJudge, "Judge whether the query justifies calling this API with these arguments.",
        {kQuery, kApiSchema, {"target_parameters", "JSON object of argument values"}}, {kReasoning, is_reasonable});
    add(kMissingParamsQueryJudge,
        "Judge whether the query needs this API while genuinely lacking the listed required parameters.",
        {kQuery, kApiSchema, {"provided_parameters", "JSON object of provided values"},
         {"missing_parameters", "JSON array of omitted required parameters"}},
        {kReasoning, is_reasonable});

    add(kDatasetPatternAnalysis, "Find patterns of homogeneity in a sample of dataset queries.",
        {{"dataset_sample", "Sample of existing queries"},
         {"diversity_context", "Current diversity metric values"}},
        {kReasoning, {"pattern_analysis", "The homogeneity patterns found"}});
    add(kDiversityGuidanceGeneration, "Turn a pattern analysis into concrete guidance for writing more varied queries.",
        {{"dataset_sample", "Sample of existing queries"}, {"pattern_analysis", "Output of the pattern analysis"}},
        {kReasoning, {"diversity_guidance", "Actionable guidance"}});
    add(kRoundFeedback,
        "Write guidance for the next round of query generation from the judge reasoning of rejected candidates "
        "and the diversity ranking of accepted ones.",
        {{"focus", "'validation' or 'diversity'"},
         {"judge_feedback", "Judge reasoning for rejected candidates"},
         {"diversity_ranking", "Accepted candidates in fused diversity order"}},
        {{"guidance", "Guidance for the next round"}});

    const F scores{"scores",
                   "JSON array, one entry per candidate in input order: {\"api_name\": str, \"score\": int 1-5, "
                   "\"reasoning\": str}"};
    add(kBatchApiRelevanceScorer,
        "Rate each candidate API from 1 (wrong purpose) to 5 (exactly what the query needs).",
        {kQuery, {"apis", "JSON array of candidate APIs"}, {"target_api", "Ground-truth API name, for reference"}},
        {kReasoning, scores});
    add(kParallelApiRelevanceScorer,
        "Rate each candidate API from 1 to 5 for use alongside the target APIs in one parallel query.",
        {kQuery, {"apis", "JSON array of candidate APIs"}, {"target_apis", "Ground-truth API names"}},
        {kReasoning, scores});
    add(kConstructSequentialInvocation,
        "Pick the next API of a sequential invocation that answers the query, or NONE when the chain is complete.",
        {kQuery, {"available_apis", "JSON array of available APIs"},
         {"invocations_up_to_this_point", "JSON array of APIs already in the chain"},
         {"return_values_up_to_this_point", "JSON array of their return values"}},
        {kReasoning, {"next_api", "Name of the next API, or NONE"}});
    add(kValidateSequentialInvocation,
        "Check that a sequential invocation answers the query with valid data flow between steps.",
        {kQuery, {"invocation_apis", "JSON array of API names in order"}, kApiSchemas,
         {"return_values_list", "JSON array of known return values"}},
        {kReasoning, is_valid});
    add(kConstructParallelInvocation,
        "Choose a set of available APIs that, called in parallel, answers the query; an empty list if none does.",
        {kQuery, {"available_apis", "JSON array of available APIs"}},
        {kReasoning, {"invocation_apis", "JSON array of API names"}});
    add(kValidateParallelInvocation,
        "Check that a parallel invocation answers the query with arguments inferable from it.",
        {kQuery, {"invocation_apis", "JSON array of API names"}, kApiSchemas}, {kReasoning, is_valid});

    add(kToolCallEquivalence, "Decide whether two tool calls are semantically equivalent for the user.",
        {{"user_query", "The user's request"},
         {"tool_schema", "Schema of the tool"},
         {"ground_truth_call", "Reference call as JSON"},
         {"predicted_call", "Predicted call as JSON"}},
        {kReasoning, {"equivalent", "YES or NO"}});

    for (const auto& sig : s) sig.validate();
    return s;
}

}  // namespace

const std::vector<PromptSignature>& all() {
    static const std::vector<PromptSignature> catalog = build();
    return catalog;
}

const PromptSignature& get(std::string_view name) {
    const auto& catalog = all();
    auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& s) { return s.name == name; });
    if (it == catalog.end()) throw InvariantError("unknown signature '" + std::string(name) + "'");
    return *it;
}

}  // namespace fcgen::signatures
