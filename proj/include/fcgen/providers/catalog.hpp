#pragma once

#include <string_view>
#include <vector>

#include "fcgen/providers/signature.hpp"

namespace fcgen::signatures {

// Function selection
inline constexpr std::string_view kValidateSequentialSchemaCompatibility = "ValidateSequentialSchemaCompatibility";
// Argument value generation
inline constexpr std::string_view kGenerateMultipleStringParameters = "GenerateMultipleStringParameters";
inline constexpr std::string_view kGenerateMultipleNumericalParameters = "GenerateMultipleNumericalParameters";
inline constexpr std::string_view kGenerateOtherParameter = "GenerateOtherParameter";
inline constexpr std::string_view kGenerateCohesiveStringParameter = "GenerateCohesiveStringParameter";
inline constexpr std::string_view kGenerateCohesiveNumericalParameter = "GenerateCohesiveNumericalParameter";
inline constexpr std::string_view kGenerateCohesiveOtherParameter = "GenerateCohesiveOtherParameter";
inline constexpr std::string_view kGenerateSequentialCohesiveStringParameter = "GenerateSequentialCohesiveStringParameter";
inline constexpr std::string_view kGenerateSequentialCohesiveNumericalParameter = "GenerateSequentialCohesiveNumericalParameter";
inline constexpr std::string_view kGenerateSequentialCohesiveOtherParameter = "GenerateSequentialCohesiveOtherParameter";
inline constexpr std::string_view kGenerateReturnValue = "GenerateReturnValue";
inline constexpr std::string_view kParameterSetValidator = "ParameterSetValidator";
inline constexpr std::string_view kPartialParameterSetValidator = "PartialParameterSetValidator";
inline constexpr std::string_view kValidateReturnValue = "ValidateReturnValue";
inline constexpr std::string_view kValidateSequentialChain = "ValidateSequentialChain";
// Query generation
inline constexpr std::string_view kNoApiQueryGenerator = "NoAPIQueryGenerator";
inline constexpr std::string_view kSequentialQueryGenerator = "SequentialQueryGenerator";
inline constexpr std::string_view kParallelQueryGenerator = "ParallelQueryGenerator";
inline constexpr std::string_view kMultiQueryGenerator = "MultiQueryGenerator";
inline constexpr std::string_view kMissingParamsQueryGenerator = "MissingParamsQueryGenerator";
inline constexpr std::string_view kSequentialQueryJudge = "SequentialQueryJudge";
inline constexpr std::string_view kParallelQueryJudge = "ParallelQueryJudge";
inline constexpr std::string_view kApiQueryJudge = "APIQueryJudge";
inline constexpr std::string_view kMissingParamsQueryJudge = "MissingParamsQueryJudge";
inline constexpr std::string_view kDatasetPatternAnalysis = "DatasetPatternAnalysis";
inline constexpr std::string_view kDiversityGuidanceGeneration = "DiversityGuidanceGeneration";
inline constexpr std::string_view kRoundFeedback = "RoundFeedback";
// Distractor selection
inline constexpr std::string_view kBatchApiRelevanceScorer = "BatchAPIRelevanceScorer";
inline constexpr std::string_view kParallelApiRelevanceScorer = "ParallelAPIRelevanceScorer";
inline constexpr std::string_view kConstructSequentialInvocation = "ConstructSequentialInvocation";
inline constexpr std::string_view kValidateSequentialInvocation = "ValidateSequentialInvocation";
inline constexpr std::string_view kConstructParallelInvocation = "ConstructParallelInvocation";
inline constexpr std::string_view kValidateParallelInvocation = "ValidateParallelInvocation";
// Evaluation
inline constexpr std::string_view kToolCallEquivalence = "ToolCallEquivalence";

/// Throws InvariantError for an unknown name.
const PromptSignature& get(std::string_view name);
const std::vector<PromptSignature>& all();

}  // namespace fcgen::signatures
