#include "fcgen/core/rng.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "fcgen/core/error.hpp"

namespace fcgen {

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0) throw DomainError("uniform_index over an empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return static_cast<std::size_t>(draw % range);
}

int Rng::poisson(double lambda) {
    if (!(lambda >= 0.0)) throw DomainError("poisson rate must be nonnegative");
    const double threshold = std::exp(-lambda);
    int k = 0;
    double product = uniform01();
    while (product > threshold) {
        ++k;
        product *= uniform01();
    }
    return k;
}

int Rng::binomial(int trials, double p) {
    int successes = 0;
    for (int i = 0; i < trials; ++i) successes += bernoulli(p) ? 1 : 0;
    return successes;
}

std::size_t Rng::categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("categorical weight must be finite and >= 0");
        total += w;
    }
    if (!(total > 0.0)) throw DomainError("categorical weights sum to zero");
    const double target = uniform01() * total;
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        last_positive = i;
        cumulative += weights[i];
        if (target < cumulative) return i;
    }
    return last_positive;
}

std::vector<std::size_t> Rng::sample_indices(std::size_t n, std::size_t k) {
    if (k > n) throw DomainError("cannot sample more items than available");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + uniform_index(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

std::string Rng::state() const {
    std::ostringstream out;
    out << engine_;
    return out.str();
}

void Rng::set_state(const std::string& text) {
    std::istringstream in(text);
    in >> engine_;
    if (!in) throw FormatError("corrupt RNG state");
}

}  // namespace fcgen
