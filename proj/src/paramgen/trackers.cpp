#include "fcgen/paramgen/trackers.hpp"

#include "fcgen/core/error.hpp"

namespace fcgen {

Json TrackerSet::to_json() const {
    Json out = Json::array();
    for (const auto& v : values_) out.push_back(v);
    return out;
}

TrackerSet TrackerSet::from_json(const Json& document) {
    if (!document.is_array()) throw FormatError("trackers: expected an array of value lists");
    TrackerSet t(document.size());
    for (std::size_t g = 0; g < document.size(); ++g) {
        if (!document[g].is_array()) throw FormatError("trackers: group " + std::to_string(g) + " is not a list");
        for (const auto& v : document[g]) t.values_[g].push_back(v);
    }
    return t;
}

std::vector<Json> tracker_view(const TrackerSet& trackers, const TrackerDelta& delta, std::size_t group) {
    std::vector<Json> out = trackers.values(group);
    for (const auto& [g, v] : delta.entries) {
        if (g == group) out.push_back(v);
    }
    return out;
}

void commit_to_trackers(TrackerSet& trackers, const TrackerDelta& delta) {
    for (const auto& [g, _] : delta.entries) {
        if (g >= trackers.group_count()) throw InvariantError("tracker commit: unknown group " + std::to_string(g));
    }
    for (const auto& [g, v] : delta.entries) trackers.append(g, v);
}

}  // namespace fcgen
