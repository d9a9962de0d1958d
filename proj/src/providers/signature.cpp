#include "fcgen/providers/signature.hpp"

#include <algorithm>
#include <set>

namespace fcgen {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

constexpr std::string_view kOpen = "[[ ## ";
constexpr std::string_view kClose = " ## ]]";

struct MarkerHit {
    std::size_t begin;
    std::size_t end;
    std::string name;
};

std::vector<MarkerHit> scan_markers(std::string_view text) {
    std::vector<MarkerHit> hits;
    std::size_t pos = 0;
    while ((pos = text.find(kOpen, pos)) != std::string_view::npos) {
        const std::size_t name_begin = pos + kOpen.size();
        const std::size_t close = text.find(kClose, name_begin);
        if (close == std::string_view::npos) break;
        std::string_view name = text.substr(name_begin, close - name_begin);
        const bool plausible = !name.empty() && name.find('\n') == std::string_view::npos &&
                               name.find(kOpen) == std::string_view::npos;
        if (plausible) {
            hits.push_back({pos, close + kClose.size(), std::string(name)});
            pos = close + kClose.size();
        } else {
            pos = name_begin;
        }
    }
    return hits;
}

}  // namespace

void PromptSignature::validate() const {
    if (name.empty()) throw InvariantError("signature with empty name");
    if (outputs.empty()) throw InvariantError("signature '" + name + "' declares no output field");
    std::set<std::string> seen;
    auto check = [&](const SignatureField& f) {
        if (f.name.empty() || f.name == "completed") {
            throw InvariantError("signature '" + name + "' has an invalid field name '" + f.name + "'");
        }
        if (!seen.insert(f.name).second) {
            throw InvariantError("signature '" + name + "' repeats field '" + f.name + "'");
        }
    };
    std::for_each(inputs.begin(), inputs.end(), check);
    std::for_each(outputs.begin(), outputs.end(), check);
}

std::string field_marker(std::string_view name) {
    std::string out;
    out.reserve(name.size() + kOpen.size() + kClose.size());
    out.append(kOpen).append(name).append(kClose);
    return out;
}

RenderedPrompt render_signature_messages(const PromptSignature& sig, const FieldValues& inputs) {
    for (const auto& f : sig.inputs) {
        if (inputs.find(f.name) == inputs.end()) throw InvariantError(f.name + " not provided");
    }

    std::string system;
    auto list_fields = [&system](const std::vector<SignatureField>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            system += std::to_string(i + 1) + ". `" + fields[i].name + "` (str): " + fields[i].description + "\n";
        }
    };
    system += "Your input fields are:\n";
    list_fields(sig.inputs);
    system += "\nYour output fields are:\n";
    list_fields(sig.outputs);
    system += "\nAll interactions will be structured in the following way, with the appropriate values filled in.\n\n";
    for (const auto* group : {&sig.inputs, &sig.outputs}) {
        for (const auto& f : *group) system += field_marker(f.name) + "\n{" + f.name + "}\n\n";
    }
    system += std::string(kCompletedMarker) + "\n\n";
    system += "In adhering to this structure, your objective is: \n" + sig.objective;

    std::string user;
    for (const auto& f : sig.inputs) {
        user += field_marker(f.name) + "\n" + inputs.at(f.name) + "\n\n";
    }
    user += "Respond with the corresponding output fields in this order, then finish with the completion marker:\n\n";
    for (const auto& f : sig.outputs) user += field_marker(f.name) + "\n";
    user += kCompletedMarker;
    return {std::move(system), std::move(user)};
}

std::string render_signature(const PromptSignature& sig, const FieldValues& inputs) {
    return render_signature_messages(sig, inputs).text();
}

std::string render_signature_output(const PromptSignature& sig, const FieldValues& outputs) {
    std::string out;
    for (const auto& f : sig.outputs) {
        auto it = outputs.find(f.name);
        out += field_marker(f.name) + "\n" + (it == outputs.end() ? std::string() : it->second) + "\n\n";
    }
    out += kCompletedMarker;
    return out;
}

SignatureParseError::SignatureParseError(std::string signature, std::vector<std::string> missing)
    : Error([&] {
          std::string msg = "signature '" + signature + "': missing output field(s): ";
          for (std::size_t i = 0; i < missing.size(); ++i) msg += (i ? ", " : "") + missing[i];
          return msg;
      }()),
      signature_(std::move(signature)),
      missing_(std::move(missing)) {}

FieldValues parse_signature_output(std::string_view text, const PromptSignature& sig) {
    const auto hits = scan_markers(text);
    FieldValues values;
    std::vector<std::string> missing;
    for (const auto& f : sig.outputs) {
        auto it = std::find_if(hits.begin(), hits.end(), [&](const MarkerHit& h) { return h.name == f.name; });
        if (it == hits.end()) {
            missing.push_back(f.name);
            continue;
        }
        auto next = std::next(it);
        const std::size_t stop = next == hits.end() ? text.size() : next->begin;
        values[f.name] = trim(text.substr(it->end, stop - it->end));
    }
    if (!missing.empty()) throw SignatureParseError(sig.name, std::move(missing));
    return values;
}

}  // namespace fcgen
