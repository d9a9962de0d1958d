#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fcgen {

/// Seeded random stream. Distributions are implemented here on top of the raw
/// mt19937_64 output so draws are identical across standard libraries; the
/// engine state round-trips through state()/set_state() for checkpointing.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform01();
    /// Uniform integer in [0, n). Requires n > 0.
    std::size_t uniform_index(std::size_t n);
    bool bernoulli(double p) { return uniform01() < p; }
    /// Knuth's multiplication method; adequate for the small rates used here.
    int poisson(double lambda);
    int binomial(int trials, double p);
    /// Index drawn with probability proportional to `weights` (nonnegative, positive sum).
    std::size_t categorical(std::span<const double> weights);
    /// k distinct indices from [0, n) in draw order (partial Fisher-Yates).
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[uniform_index(i)]);
        }
    }

    std::string state() const;
    void set_state(const std::string& text);

private:
    std::mt19937_64 engine_;
};

}  // namespace fcgen
