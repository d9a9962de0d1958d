#pragma once

#include <utility>
#include <vector>

#include "fcgen/core/types.hpp"

namespace fcgen {

/// Committed values per parameter group. Append-only.
class TrackerSet {
public:
    TrackerSet() = default;
    explicit TrackerSet(std::size_t groups) : values_(groups) {}

    std::size_t group_count() const { return values_.size(); }
    const std::vector<Json>& values(std::size_t group) const { return values_.at(group); }
    void append(std::size_t group, Json value) { values_.at(group).push_back(std::move(value)); }

    Json to_json() const;
    static TrackerSet from_json(const Json& document);
    bool operator==(const TrackerSet&) const = default;

private:
    std::vector<std::vector<Json>> values_;
};

/// Values an in-flight example wants to add, in the order they were chosen.
struct TrackerDelta {
    std::vector<std::pair<std::size_t, Json>> entries;

    void add(std::size_t group, Json value) { entries.emplace_back(group, std::move(value)); }
    bool empty() const { return entries.empty(); }
};

/// Committed values of `group` followed by the pending ones from `delta`.
std::vector<Json> tracker_view(const TrackerSet& trackers, const TrackerDelta& delta, std::size_t group);

/// Appends every delta entry in order. Callers serialize commits.
void commit_to_trackers(TrackerSet& trackers, const TrackerDelta& delta);

}  // namespace fcgen
