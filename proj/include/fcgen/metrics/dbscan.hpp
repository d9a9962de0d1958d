#pragma once

#include <vector>

namespace fcgen {

enum class DistanceMetric { Euclidean, Cosine };

inline constexpr int kNoise = -1;

struct ClusterPartition {
    std::vector<int> assignments;  ///< cluster id per point, or kNoise
    std::vector<std::size_t> cluster_sizes;
    std::size_t noise_count = 0;

    bool operator==(const ClusterPartition&) const = default;
};

using Point = std::vector<double>;

double distance(const Point& a, const Point& b, DistanceMetric metric);

/// Classic DBSCAN. Neighborhoods are inclusive (d <= eps) and count the point
/// itself. Points are visited in index order and clusters numbered as they are
/// found, so a border point reachable from several clusters joins the first.
/// Throws DomainError on bad parameters or a zero vector under cosine.
ClusterPartition dbscan(const std::vector<Point>& points, double eps, std::size_t min_samples, DistanceMetric metric);

}  // namespace fcgen
