#pragma once

// Slow reference implementations, written independently of the library code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "fcgen/metrics/dbscan.hpp"
#include "fcgen/metrics/syntax.hpp"

namespace fcgen::oracle {

inline double dist(const Point& a, const Point& b, DistanceMetric m) {
    double dot = 0, na = 0, nb = 0, sq = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
        sq += (a[i] - b[i]) * (a[i] - b[i]);
    }
    if (m == DistanceMetric::Euclidean) return std::sqrt(sq);
    return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
}

/// Density reachability by transitive closure over core points. Components
/// are labelled in order of their lowest core index; a border point takes the
/// smallest label among the components of its core neighbours.
inline ClusterPartition dbscan(const std::vector<Point>& pts, double eps, std::size_t min_samples, DistanceMetric m) {
    const std::size_t n = pts.size();
    std::vector<std::vector<bool>> near(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) near[i][j] = dist(pts[i], pts[j], m) <= eps;
    std::vector<bool> core(n);
    for (std::size_t i = 0; i < n; ++i) core[i] = std::count(near[i].begin(), near[i].end(), true) >= static_cast<long>(min_samples);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = core[i] && core[j] && near[i][j];
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    std::vector<int> comp(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!core[i] || comp[i] >= 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (j == i || reach[i][j]) comp[j] = next;
        ++next;
    }
    ClusterPartition p;
    p.assignments.assign(n, kNoise);
    for (std::size_t i = 0; i < n; ++i) {
        if (core[i]) {
            p.assignments[i] = comp[i];
            continue;
        }
        int best = -1;
        for (std::size_t j = 0; j < n; ++j)
            if (core[j] && near[i][j] && (best < 0 || comp[j] < best)) best = comp[j];
        p.assignments[i] = best;
    }
    p.cluster_sizes.assign(static_cast<std::size_t>(next), 0);
    for (int a : p.assignments) {
        if (a == kNoise) ++p.noise_count;
        else ++p.cluster_sizes[static_cast<std::size_t>(a)];
    }
    return p;
}

/// Minimum-cost Tai mapping found by enumerating every partial injection.
/// Unit costs; meant for trees of at most 5-6 nodes.
inline int tree_edit_distance(const Tree& a, const Tree& b) {
    struct Node {
        std::string label;
        int pre, end;  // preorder index and last descendant index
    };
    auto flatten = [](const Tree& t) {
        std::vector<Node> out;
        std::function<void(const Tree&)> walk = [&](const Tree& x) {
            const std::size_t at = out.size();
            out.push_back({x.label, static_cast<int>(at), 0});
            for (const auto& c : x.children) walk(c);
            out[at].end = static_cast<int>(out.size()) - 1;
        };
        walk(t);
        return out;
    };
    const auto x = flatten(a), y = flatten(b);
    auto anc = [](const std::vector<Node>& v, int i, int j) { return i < j && j <= v[static_cast<std::size_t>(i)].end; };
    auto left = [&](const std::vector<Node>& v, int i, int j) { return i < j && !anc(v, i, j); };
    std::vector<std::pair<int, int>> m;
    int best = static_cast<int>(x.size() + y.size());
    std::vector<bool> used(y.size());
    std::function<void(int)> go = [&](int i) {
        if (i == static_cast<int>(x.size())) {
            int relabel = 0;
            for (auto [p, q] : m) relabel += x[static_cast<std::size_t>(p)].label != y[static_cast<std::size_t>(q)].label;
            const int cost = relabel + static_cast<int>(x.size() + y.size() - 2 * m.size());
            best = std::min(best, cost);
            return;
        }
        go(i + 1);
        for (int j = 0; j < static_cast<int>(y.size()); ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            bool ok = true;
            for (auto [p, q] : m) {
                if (anc(x, p, i) != anc(y, q, j) || left(x, p, i) != left(y, q, j)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[static_cast<std::size_t>(j)] = true;
            m.emplace_back(i, j);
            go(i + 1);
            m.pop_back();
            used[static_cast<std::size_t>(j)] = false;
        }
    };
    go(0);
    return best;
}

/// Two-sided exact McNemar p from integer binomial coefficients.
inline double binomial_two_sided(std::uint64_t b, std::uint64_t c) {
    const std::uint64_t n = b + c;
    if (n == 0) return 1.0;
    const std::uint64_t k = std::min(b, c);
    long double coef = 1, tail = 0;
    for (std::uint64_t i = 0; i <= k; ++i) {
        if (i > 0) coef = coef * static_cast<long double>(n - i + 1) / static_cast<long double>(i);
        tail += coef;
    }
    const long double p = 2 * tail / std::pow(2.0L, static_cast<long double>(n));
    return static_cast<double>(std::min<long double>(1.0L, p));
}

}  // namespace fcgen::oracle
