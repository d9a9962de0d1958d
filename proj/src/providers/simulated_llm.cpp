#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>

#include "fcgen/providers/catalog.hpp"
#include "fcgen/providers/scripted_llm.hpp"

namespace fcgen {

namespace {

std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

const std::vector<std::string>& cities() {
    static const std::vector<std::string> v = {
        "Nairobi",  "Lima",     "Oslo",      "Hanoi",     "Quito",      "Accra",    "Tbilisi",   "Reykjavik",
        "Montevideo", "Ulaanbaatar", "Kathmandu", "Dakar", "Riga",      "Tallinn",  "Valparaiso", "Cusco",
        "Marrakesh", "Kyoto",   "Busan",     "Perth",     "Hobart",     "Winnipeg", "Halifax",   "Anchorage",
        "Tucson",   "Asheville", "Porto",    "Seville",   "Bologna",    "Krakow",   "Ljubljana", "Sarajevo",
        "Yerevan",  "Baku",     "Almaty",    "Tashkent",  "Muscat",     "Doha",     "Kigali",    "Lusaka",
        "Windhoek", "Maputo",   "Antananarivo", "Colombo", "Thimphu",   "Vientiane", "Cebu",     "Auckland",
        "Suva",     "Apia",     "Nuuk",      "Tromso",    "Gdansk",     "Graz",     "Lyon",      "Ghent",
        "Cork",     "Galway",   "Bergen",    "Hilo"};
    return v;
}

const std::vector<std::string>& words() {
    static const std::vector<std::string> v = {
        "amber",  "basalt",  "cedar",   "delta",    "ember",  "fjord",   "granite", "harbor", "iris",    "juniper",
        "kestrel", "lagoon", "meadow",  "nebula",   "obsidian", "prairie", "quartz", "raven",  "sierra",  "tundra",
        "umber",  "violet",  "willow",  "xenon",    "yarrow", "zephyr",  "atlas",   "beacon", "canyon",  "dune",
        "estuary", "falcon", "glacier", "heron",    "island", "jasper",  "kelp",    "lotus",  "mesa",    "nectar",
        "orchid", "pebble",  "quill",   "reef",     "saffron", "thistle", "urchin", "vortex", "walnut",  "yucca",
        "zinnia", "acorn",   "bramble", "cobalt",   "driftwood", "egret", "fern",   "garnet", "hazel",   "indigo"};
    return v;
}

const std::vector<std::string>& general_questions() {
    static const std::vector<std::string> v = {
        "What are the primary causes of climate change and how do they impact the environment?",
        "How are you today?",
        "What can you do?",
        "Why is the sky blue during the day but red at sunset?",
        "Explain the difference between a virus and a bacterium.",
        "Who painted the ceiling of the Sistine Chapel?",
        "Can you recommend a good way to start learning to play the piano as an adult?",
        "What does photosynthesis produce?",
        "How did the printing press change European society?",
        "Tell me a fun fact about octopuses.",
        "What is the Pythagorean theorem used for in everyday life?",
        "Summarize the plot of Romeo and Juliet in two sentences.",
        "Why do we have leap years?",
        "What is the difference between weather and climate?",
        "How do vaccines train the immune system?",
        "Is it better to stretch before or after running?",
        "What are some tips for writing a persuasive essay?",
        "How does compound interest work?",
        "Which planet has the most moons?",
        "What causes the seasons on Earth?",
        "Give me three ideas for a rainy afternoon with kids.",
        "How do bees communicate where flowers are?",
        "What was the main cause of the fall of the Western Roman Empire?",
        "Could you explain what a black hole is to a ten year old?",
        "What is the healthiest way to cook broccoli?",
        "How do noise cancelling headphones actually work?",
        "Why do cats purr?",
        "What is the origin of the word salary?",
        "How should I prepare for a job interview in a field I am new to?",
        "What is the boiling point of water on top of Mount Everest, roughly?",
        "Hi there!",
        "What are you able to help me with?",
        "Describe the water cycle in simple terms.",
        "How many bones are in the adult human body?",
        "What makes a good night's sleep?",
        "Why does ice float on water?",
        "What is machine learning in one paragraph?",
        "How were the pyramids of Giza likely built?",
        "What is a haiku? Write one about autumn.",
        "Thanks, that is all for now."};
    return v;
}

const std::vector<std::string>& templates() {
    static const std::vector<std::string> v = {
        "{Desc} for {vals}.",
        "Could you {desc} using {vals}?",
        "I need to {desc}; the details are {vals}.",
        "Hey, quick one: {desc} with {vals}, please!",
        "As part of planning a long trip next month with my whole family, I would like you to {desc}, "
        "specifically for {vals}, so we can decide what to pack and where to stay.",
        "{vals}: {desc}.",
        "What would I get if I {desc} for {vals}?",
        "My manager asked me to {desc} and report back today; use {vals}.",
        "Help me {desc}. Relevant info: {vals}.",
        "Is it possible to {desc} given {vals}?",
        "Before tomorrow's meeting, {desc} for {vals} and summarize the result briefly.",
        "Yo, {desc} real quick for {vals}?"};
    return v;
}

std::string lower_first(std::string s) {
    if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
    while (!s.empty() && (s.back() == '.' || s.back() == ' ')) s.pop_back();
    return s;
}

std::string upper_first(std::string s) {
    if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

Json parse_or(const std::string& text, Json fallback) {
    try {
        return Json::parse(text);
    } catch (...) {
        return fallback;
    }
}

std::string input(const ChatRequest& r, const std::string& name) {
    auto it = r.inputs.find(name);
    return it == r.inputs.end() ? std::string() : it->second;
}

bool contains_any(const std::string& haystack, std::initializer_list<const char*> needles) {
    std::string lower = haystack;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return std::any_of(needles.begin(), needles.end(),
                       [&](const char* n) { return lower.find(n) != std::string::npos; });
}

bool is_integer_type(const std::string& type) { return contains_any(type, {"int", "long"}); }

Json string_value(const std::string& param, SplitMix& rng) {
    const auto& w = words();
    if (contains_any(param, {"city", "location", "destination", "place"})) {
        return cities()[rng.below(cities().size())];
    }
    if (contains_any(param, {"url", "link"})) {
        return "https://www.example.com/" + w[rng.below(w.size())] + "/" + std::to_string(100000 + rng.below(900000));
    }
    if (contains_any(param, {"email"})) {
        return w[rng.below(w.size())] + "." + w[rng.below(w.size())] + "@" + w[rng.below(w.size())] + ".org";
    }
    if (contains_any(param, {"date"})) {
        return "2026-" + std::to_string(10 + rng.below(3)) + "-" + std::to_string(10 + rng.below(19));
    }
    if (param.size() >= 2 && (param == "id" || param.substr(param.size() - 2) == "id" || contains_any(param, {"_id"}))) {
        std::string prefix = w[rng.below(w.size())].substr(0, 3);
        std::transform(prefix.begin(), prefix.end(), prefix.begin(),
                       [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        return prefix + std::to_string(1000 + rng.below(9000));
    }
    return w[rng.below(w.size())] + " " + w[rng.below(w.size())];
}

Json numeric_value(const std::string& type, SplitMix& rng) {
    // Log-spread magnitudes keep candidates far apart on the number line.
    const double magnitude = std::pow(10.0, static_cast<double>(rng.below(4000)) / 1000.0);
    if (is_integer_type(type)) return static_cast<long long>(std::llround(magnitude)) + static_cast<long long>(rng.below(3));
    return std::round(magnitude * 100.0) / 100.0;
}

Json other_value(const std::string& type, const std::string& param, SplitMix& rng) {
    const auto& w = words();
    if (contains_any(type, {"bool"})) return rng.below(2) == 0;
    if (contains_any(type, {"array", "list"})) {
        Json arr = Json::array();
        const std::size_t n = 2 + rng.below(3);
        for (std::size_t i = 0; i < n; ++i) {
            if (contains_any(type, {"int", "number"})) arr.push_back(static_cast<int>(rng.below(1000)));
            else arr.push_back(param.substr(0, 5) + "-" + w[rng.below(w.size())]);
        }
        return arr;
    }
    if (contains_any(type, {"object", "dict"})) return Json{{"label", w[rng.below(w.size())]}, {"count", rng.below(50)}};
    return w[rng.below(w.size())];
}

std::string to_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string values_phrase(const Json& args) {
    std::string out;
    if (!args.is_object()) return out;
    std::size_t i = 0;
    for (auto it = args.begin(); it != args.end(); ++it) {
        if (it.value().is_string() && it.value().get<std::string>() == kMissingSentinel) continue;
        if (i++) out += ", ";
        out += replace_all(it.key(), "_", " ") + " " + to_text(it.value());
    }
    return out.empty() ? std::string("the usual settings") : out;
}

std::string fill(const std::string& tpl, const std::string& desc, const std::string& vals) {
    std::string s = replace_all(tpl, "{Desc}", upper_first(desc));
    s = replace_all(s, "{desc}", desc);
    return replace_all(s, "{vals}", vals);
}

std::vector<std::string> pick_queries(const ChatRequest& r, std::uint64_t seed) {
    SplitMix rng{seed};
    std::vector<std::string> out;
    if (r.signature == signatures::kNoApiQueryGenerator) {
        const auto& pool = general_questions();
        const std::string seen = input(r, "previous_attempts") + input(r, "dataset_guidance");
        std::vector<std::size_t> order(pool.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
        for (std::size_t idx : order) {
            if (out.size() == 5) break;
            if (seen.find(pool[idx]) == std::string::npos) out.push_back(pool[idx]);
        }
        for (std::size_t idx : order) {
            if (out.size() == 5) break;
            if (std::find(out.begin(), out.end(), pool[idx]) == out.end()) out.push_back(pool[idx]);
        }
        return out;
    }

    std::vector<std::pair<std::string, std::string>> parts;  // (desc, values)
    if (r.signature == signatures::kMultiQueryGenerator || r.signature == signatures::kMissingParamsQueryGenerator) {
        const Json schema = parse_or(input(r, "api_schema"), Json::object());
        const Json args = r.signature == signatures::kMultiQueryGenerator
                              ? parse_or(input(r, "target_parameters"), Json::object())
                              : parse_or(input(r, "provided_parameters"), Json::object());
        parts.emplace_back(lower_first(schema.value("description", std::string("use this service"))),
                           values_phrase(args));
    } else {
        const Json schemas = parse_or(input(r, "api_schemas"), Json::array());
        const Json args = parse_or(input(r, "target_parameters_list"), Json::array());
        for (std::size_t i = 0; i < schemas.size(); ++i) {
            const Json a = i < args.size() ? args[i] : Json::object();
            parts.emplace_back(lower_first(schemas[i].value("description", std::string("use this service"))),
                               values_phrase(a));
        }
        if (r.signature == signatures::kSequentialQueryGenerator && parts.size() >= 2) {
            // Describe the goal: the last step, seeded by what the first step needs.
            parts = {{parts.back().first, parts.front().second}};
        }
    }

    const auto& tpls = templates();
    std::vector<std::size_t> order(tpls.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    for (std::size_t k = 0; k < 5; ++k) {
        std::string q;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const std::string& tpl = tpls[order[(k + p) % order.size()]];
            std::string piece = fill(tpl, parts[p].first, parts[p].second);
            q += p == 0 ? piece : " Also, " + lower_first(piece) + ".";
        }
        out.push_back(q);
    }
    return out;
}

std::string reply(const std::string& signature, const FieldValues& fields) {
    return render_signature_output(signatures::get(signature), fields);
}

}  // namespace

std::string SimulatedLlm::complete(const ChatRequest& r) {
    namespace s = signatures;
    const std::uint64_t seed = fnv1a(r.prompt.user, fnv1a(r.signature));
    SplitMix rng{seed};
    const std::string& sig = r.signature;
    const std::string param = input(r, "parameter_name");
    const std::string type = input(r, "parameter_type");

    if (sig == s::kValidateSequentialSchemaCompatibility) {
        return reply(sig, {{"reasoning", "Each return schema can feed the next API."}, {"is_compatible", "YES"}});
    }
    if (sig == s::kGenerateMultipleStringParameters || sig == s::kGenerateMultipleNumericalParameters) {
        int wanted = 25;
        try {
            wanted = std::stoi(input(r, "num_candidates"));
        } catch (...) {
        }
        Json values = Json::array();
        std::set<std::string> seen;
        for (int guard = 0; static_cast<int>(values.size()) < wanted && guard < wanted * 20; ++guard) {
            Json v = sig == s::kGenerateMultipleStringParameters ? string_value(param, rng) : numeric_value(type, rng);
            if (seen.insert(v.dump()).second) values.push_back(v);
        }
        return reply(sig, {{"reasoning", "Spread values across the space."}, {"generated_values", values.dump()}});
    }
    if (sig == s::kGenerateCohesiveStringParameter || sig == s::kGenerateCohesiveNumericalParameter ||
        sig == s::kGenerateCohesiveOtherParameter || sig == s::kGenerateSequentialCohesiveStringParameter ||
        sig == s::kGenerateSequentialCohesiveNumericalParameter ||
        sig == s::kGenerateSequentialCohesiveOtherParameter || sig == s::kGenerateOtherParameter) {
        std::optional<Json> chosen;
        auto reuse_from = [&](const Json& obj) {
            if (!chosen && obj.is_object() && obj.contains(param)) chosen = obj.at(param);
        };
        const Json context = parse_or(input(r, "parallel_context_parameters"), Json::array());
        if (context.is_array()) {
            for (const auto& c : context) reuse_from(c.is_object() && c.contains("parameters") ? c.at("parameters") : c);
        }
        reuse_from(parse_or(input(r, "return_value"), Json::object()));
        reuse_from(parse_or(input(r, "next_api_parameters"), Json::object()));
        if (!chosen) {
            if (sig == s::kGenerateCohesiveStringParameter || sig == s::kGenerateSequentialCohesiveStringParameter) {
                chosen = string_value(param, rng);
            } else if (sig == s::kGenerateCohesiveNumericalParameter ||
                       sig == s::kGenerateSequentialCohesiveNumericalParameter) {
                chosen = numeric_value(type, rng);
            } else {
                chosen = other_value(type, param, rng);
            }
        }
        FieldValues out{{"generated_value", to_text(*chosen)}};
        if (signatures::get(sig).outputs.size() > 1) out["reasoning"] = "Consistent with the surrounding calls.";
        return reply(sig, out);
    }
    if (sig == s::kGenerateReturnValue) {
        const Json schema = parse_or(input(r, "return_type_schema"), Json::object());
        const Json next_values = parse_or(input(r, "next_api_parameters_values"), Json::object());
        Json value = Json::object();
        if (schema.contains("properties")) {
            for (auto it = schema.at("properties").begin(); it != schema.at("properties").end(); ++it) {
                const std::string ftype = it.value().value("type", std::string("string"));
                if (next_values.is_object() && next_values.contains(it.key())) {
                    value[it.key()] = next_values.at(it.key());
                } else if (contains_any(ftype, {"number", "int"})) {
                    value[it.key()] = numeric_value(ftype, rng);
                } else if (contains_any(ftype, {"array", "object", "bool"})) {
                    value[it.key()] = other_value(ftype, it.key(), rng);
                } else {
                    value[it.key()] = string_value(it.key(), rng);
                }
            }
        }
        return reply(sig, {{"reasoning", "Matches the schema and feeds the next call."}, {"return_value", value.dump()}});
    }
    if (sig == s::kParameterSetValidator || sig == s::kPartialParameterSetValidator || sig == s::kValidateReturnValue ||
        sig == s::kValidateSequentialChain || sig == s::kValidateSequentialInvocation ||
        sig == s::kValidateParallelInvocation) {
        return reply(sig, {{"reasoning", "All values are consistent with the schema."}, {"is_valid", "YES"}});
    }
    if (sig == s::kNoApiQueryGenerator || sig == s::kSequentialQueryGenerator || sig == s::kParallelQueryGenerator ||
        sig == s::kMultiQueryGenerator || sig == s::kMissingParamsQueryGenerator) {
        const auto queries = pick_queries(r, seed);
        FieldValues out{{"reasoning", "Vary tone, length and persona."}};
        for (std::size_t i = 0; i < queries.size(); ++i) out["query_" + std::to_string(i + 1)] = queries[i];
        return reply(sig, out);
    }
    if (sig == s::kSequentialQueryJudge || sig == s::kParallelQueryJudge || sig == s::kApiQueryJudge ||
        sig == s::kMissingParamsQueryJudge) {
        const Json batch = parse_or(input(r, "query"), Json());
        if (batch.is_array()) {
            Json verdicts = Json::array();
            for (std::size_t i = 0; i < batch.size(); ++i) verdicts.push_back("YES");
            return reply(sig, {{"reasoning", "Each query justifies the call."}, {"is_reasonable", verdicts.dump()}});
        }
        return reply(sig, {{"reasoning", "The query justifies the call."}, {"is_reasonable", "YES"}});
    }
    if (sig == s::kDatasetPatternAnalysis) {
        return reply(sig, {{"reasoning", "Scanned openings and personas."},
                           {"pattern_analysis", "Many queries open with a direct imperative and share one persona."}});
    }
    if (sig == s::kDiversityGuidanceGeneration) {
        return reply(sig, {{"reasoning", "Counter the dominant patterns."},
                           {"diversity_guidance", "Vary openings, add personas and mix short and long requests."}});
    }
    if (sig == s::kRoundFeedback) {
        return reply(sig, {{"guidance", input(r, "focus") == "validation"
                                            ? "State every argument value explicitly in the query."
                                            : "Try a different persona and sentence structure."}});
    }
    if (sig == s::kBatchApiRelevanceScorer || sig == s::kParallelApiRelevanceScorer) {
        const Json apis = parse_or(input(r, "apis"), Json::array());
        std::set<std::string> targets;
        if (sig == s::kBatchApiRelevanceScorer) {
            targets.insert(input(r, "target_api"));
        } else {
            const Json t = parse_or(input(r, "target_apis"), Json::array());
            for (const auto& name : t) targets.insert(to_text(name));
        }
        Json scores = Json::array();
        for (const auto& api : apis) {
            const std::string name = api.is_object() ? api.value("name", std::string()) : to_text(api);
            int score = 1;
            if (targets.count(name)) {
                score = 5;
            } else {
                const auto h = fnv1a(name, fnv1a(input(r, "query"))) % 10;
                score = h < 7 ? 1 : (h < 9 ? 2 : 3);
            }
            scores.push_back(Json{{"api_name", name}, {"score", score}, {"reasoning", "simulated"}});
        }
        return reply(sig, {{"reasoning", "Scored by purpose match."}, {"scores", scores.dump()}});
    }
    if (sig == s::kConstructParallelInvocation) {
        return reply(sig, {{"reasoning", "No alternative beyond the intended call."}, {"invocation_apis", "[]"}});
    }
    if (sig == s::kConstructSequentialInvocation) {
        return reply(sig, {{"reasoning", "No alternative chain."}, {"next_api", "NONE"}});
    }
    if (sig == s::kToolCallEquivalence) {
        const Json truth = parse_or(input(r, "ground_truth_call"), Json());
        const Json pred = parse_or(input(r, "predicted_call"), Json());
        bool same = truth == pred;
        if (!same && truth.is_object() && pred.is_object()) {
            same = truth.value("name", std::string()) == pred.value("name", std::string()) &&
                   !truth.value("name", std::string()).empty();
        }
        return reply(sig, {{"reasoning", "Compared tool names and argument meaning."}, {"equivalent", same ? "YES" : "NO"}});
    }
    throw ProviderError(ProviderErrorKind::Unscripted, "simulated provider has no rule for '" + sig + "'");
}

}  // namespace fcgen
