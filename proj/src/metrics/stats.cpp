#include "fcgen/metrics/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fcgen/core/error.hpp"
#include "fcgen/core/rng.hpp"
#include "fcgen/metrics/readability.hpp"

namespace fcgen {

BootstrapResult bootstrap(std::size_t n_items, const SubsetMetric& metric, std::uint64_t seed, int resamples,
                          double fraction) {
    if (resamples < 1) throw DomainError("bootstrap: resamples must be positive");
    if (!(fraction > 0.0 && fraction <= 1.0)) throw DomainError("bootstrap: fraction must be in (0, 1]");
    const auto size = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n_items)));
    if (size == 0) throw DomainError("bootstrap: subsample would be empty");
    Rng rng(seed);
    BootstrapResult out;
    out.samples.reserve(static_cast<std::size_t>(resamples));
    for (int r = 0; r < resamples; ++r) out.samples.push_back(metric(rng.sample_indices(n_items, size)));
    out.mean = mean(out.samples);
    out.std = std::sqrt(variance(out.samples));
    return out;
}

double bootstrap_std(std::size_t n_items, const SubsetMetric& metric, std::uint64_t seed, int resamples,
                     double fraction) {
    return bootstrap(n_items, metric, seed, resamples, fraction).std;
}

Significance significance(double mu1, double sigma1, double mu2, double sigma2) {
    Significance s;
    s.significant = std::fabs(mu1 - mu2) > 1.96 * std::sqrt(sigma1 * sigma1 + sigma2 * sigma2);
    s.direction = mu1 > mu2 ? 1 : (mu1 < mu2 ? -1 : 0);
    return s;
}

double mcnemar_chi_square(std::size_t b, std::size_t c) {
    if (b + c == 0) return 0.0;
    const double diff = std::fabs(static_cast<double>(b) - static_cast<double>(c)) - 1.0;
    const double d = std::max(diff, 0.0);
    return d * d / static_cast<double>(b + c);
}

double mcnemar(std::size_t b, std::size_t c, std::size_t exact_threshold) {
    const std::size_t n = b + c;
    if (n == 0) return 1.0;
    if (n < exact_threshold) {
        // Two-sided exact binomial(n, 1/2) tail, summed in log space.
        const std::size_t k = std::min(b, c);
        double tail = 0.0;
        for (std::size_t i = 0; i <= k; ++i) {
            const double log_term = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(i) + 1) -
                                    std::lgamma(static_cast<double>(n - i) + 1) - static_cast<double>(n) * std::log(2.0);
            tail += std::exp(log_term);
        }
        return std::min(1.0, 2.0 * tail);
    }
    return std::erfc(std::sqrt(mcnemar_chi_square(b, c) / 2.0));
}

std::vector<bool> holm_bonferroni(const std::vector<double>& pvalues, double alpha) {
    const std::size_t m = pvalues.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pvalues[a] < pvalues[b]; });
    std::vector<bool> reject(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (pvalues[order[i]] <= alpha / static_cast<double>(m - i)) reject[order[i]] = true;
        else break;
    }
    return reject;
}

}  // namespace fcgen
