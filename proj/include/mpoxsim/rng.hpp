#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace mpoxsim {

/// Raised on invalid scenario/sampler parameters. The CLI maps it to a
/// nonzero exit code.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic, replayable random stream. A (seed, stream) pair fully
/// determines the draw sequence; distinct streams are decorrelated by a
/// SplitMix64 hash of the pair. One stream per replicate, never shared
/// across threads.
///
/// All transforms are implemented here rather than with std::*_distribution,
/// whose output is implementation-defined; mt19937_64 itself is bit-exact
/// per the standard, so sequences replay across platforms and compilers.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream), engine_(mix_(seed, stream)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Unbiased integer in [0, n), rejection sampled.
    std::uint64_t uniform_below(std::uint64_t n);

    /// Index i with probability weights[i]. Weights must be nonnegative and
    /// sum to 1 within 1e-9.
    std::size_t draw_categorical(std::span<const double> weights);

    /// Count k >= 0 with P(k) = (1-p) * p^k; mean p/(1-p). Requires 0 <= p < 1.
    int draw_count_geometric(double p);

    /// Duration d >= 1 with P(d) = (1/m) * (1 - 1/m)^(d-1); mean m.
    /// Requires m >= 1.
    int draw_duration_geometric(double mean_days);

    /// Normal(mean, sd) rounded to the nearest whole day, clamped to >= 1.
    int draw_stage_days(double mean, double sd);

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// First k elements of v become a uniform sample without replacement
    /// (partial Fisher-Yates). k must not exceed v.size().
    template <typename T>
    void partial_sample(std::vector<T>& v, std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + static_cast<std::size_t>(uniform_below(v.size() - i));
            std::swap(v[i], v[j]);
        }
    }

private:
    static std::uint64_t mix_(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

}  // namespace mpoxsim
