#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fcgen/core/error.hpp"

namespace fcgen {

struct SignatureField {
    std::string name;
    std::string description;
};

/// A named, field-structured LLM interaction. Rendering and parsing use the
/// `[[ ## field ## ]]` block markers.
struct PromptSignature {
    std::string name;
    std::string objective;
    std::vector<SignatureField> inputs;
    std::vector<SignatureField> outputs;

    /// Field names unique across inputs and outputs; at least one output.
    void validate() const;
};

using FieldValues = std::map<std::string, std::string>;

/// `[[ ## name ## ]]`
std::string field_marker(std::string_view name);
inline constexpr std::string_view kCompletedMarker = "[[ ## completed ## ]]";

/// Rendered prompt split into the instruction part (field docs, layout,
/// objective) and the request part (input blocks, then the output markers
/// and the completion marker).
struct RenderedPrompt {
    std::string system;
    std::string user;

    std::string text() const { return system + "\n\n" + user; }
};

RenderedPrompt render_signature_messages(const PromptSignature& sig, const FieldValues& inputs);
std::string render_signature(const PromptSignature& sig, const FieldValues& inputs);

/// The response layout a model is expected to emit: each output block in
/// declaration order, then the completion marker.
std::string render_signature_output(const PromptSignature& sig, const FieldValues& outputs);

/// One or more declared output markers are absent from the response.
class SignatureParseError : public Error {
public:
    SignatureParseError(std::string signature, std::vector<std::string> missing);
    const std::vector<std::string>& missing_fields() const { return missing_; }
    const std::string& signature() const { return signature_; }

private:
    std::string signature_;
    std::vector<std::string> missing_;
};

/// Each output field's text runs from its marker to the next marker (any field
/// or the completion marker) and is trimmed. Fields are located by position,
/// so out-of-order blocks are accepted.
FieldValues parse_signature_output(std::string_view text, const PromptSignature& sig);

}  // namespace fcgen
