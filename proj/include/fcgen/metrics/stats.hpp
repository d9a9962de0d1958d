#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace fcgen {

/// Metric over a subset of item indices.
using SubsetMetric = std::function<double(const std::vector<std::size_t>&)>;

struct BootstrapResult {
    double mean = 0.0;
    double std = 0.0;
    std::vector<double> samples;
};

/// Evaluates `metric` on `resamples` subsets of floor(fraction * n) indices drawn
/// without replacement from a stream seeded by `seed`; reports the population std.
BootstrapResult bootstrap(std::size_t n_items, const SubsetMetric& metric, std::uint64_t seed, int resamples = 100,
                          double fraction = 0.8);
double bootstrap_std(std::size_t n_items, const SubsetMetric& metric, std::uint64_t seed, int resamples = 100,
                     double fraction = 0.8);

struct Significance {
    bool significant = false;
    int direction = 0;  ///< sign of mu1 - mu2
};

/// |mu1 - mu2| > 1.96 sqrt(sigma1^2 + sigma2^2), strictly.
Significance significance(double mu1, double sigma1, double mu2, double sigma2);

/// McNemar test on discordant counts. Exact two-sided binomial below
/// `exact_threshold` total, continuity-corrected chi-square otherwise.
double mcnemar(std::size_t b, std::size_t c, std::size_t exact_threshold = 25);
double mcnemar_chi_square(std::size_t b, std::size_t c);

/// Step-down Holm procedure; decisions in input order.
std::vector<bool> holm_bonferroni(const std::vector<double>& pvalues, double alpha = 0.05);

}  // namespace fcgen
