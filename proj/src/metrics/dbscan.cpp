#include "fcgen/metrics/dbscan.hpp"

#include <cmath>
#include <deque>

#include "fcgen/core/error.hpp"

namespace fcgen {

double distance(const Point& a, const Point& b, DistanceMetric metric) {
    if (a.size() != b.size()) throw DomainError("distance: dimension mismatch");
    if (metric == DistanceMetric::Euclidean) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
        return std::sqrt(s);
    }
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ab += a[i] * b[i];
        aa += a[i] * a[i];
        bb += b[i] * b[i];
    }
    if (aa == 0.0 || bb == 0.0) throw DomainError("dbscan: zero-norm point under cosine distance");
    return 1.0 - ab / std::sqrt(aa * bb);
}

ClusterPartition dbscan(const std::vector<Point>& points, double eps, std::size_t min_samples, DistanceMetric metric) {
    if (points.empty()) throw DomainError("dbscan: no points");
    if (!(eps > 0.0)) throw DomainError("dbscan: eps must be positive");
    if (min_samples < 1) throw DomainError("dbscan: min_samples must be at least 1");

    const std::size_t n = points.size();
    std::vector<std::vector<std::size_t>> neighbors(n);
    for (std::size_t i = 0; i < n; ++i) {
        neighbors[i].push_back(i);
        if (metric == DistanceMetric::Cosine) distance(points[i], points[i], metric);  // zero-norm check
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (distance(points[i], points[j], metric) <= eps) {
                neighbors[i].push_back(j);
                neighbors[j].push_back(i);
            }
        }
    }

    ClusterPartition out;
    out.assignments.assign(n, kNoise);
    std::vector<bool> visited(n, false);
    int next_label = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (out.assignments[i] != kNoise || neighbors[i].size() < min_samples) continue;
        const int label = next_label++;
        std::deque<std::size_t> frontier{i};
        out.assignments[i] = label;
        visited[i] = true;
        while (!frontier.empty()) {
            const std::size_t p = frontier.front();
            frontier.pop_front();
            if (neighbors[p].size() < min_samples) continue;  // border: do not expand
            for (std::size_t q : neighbors[p]) {
                if (out.assignments[q] == kNoise) out.assignments[q] = label;
                if (!visited[q]) {
                    visited[q] = true;
                    frontier.push_back(q);
                }
            }
        }
    }
    out.cluster_sizes.assign(static_cast<std::size_t>(next_label), 0);
    for (int a : out.assignments) {
        if (a == kNoise) ++out.noise_count;
        else ++out.cluster_sizes[static_cast<std::size_t>(a)];
    }
    return out;
}

}  // namespace fcgen
