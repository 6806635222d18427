#include "mpoxsim/rng.hpp"

#include <cmath>
#include <cstdlib>

namespace mpoxsim {

std::uint64_t RngStream::mix_(std::uint64_t seed, std::uint64_t stream) {
    // SplitMix64 over the pair; decorrelates nearby (seed, stream) values.
    auto splitmix = [](std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    std::uint64_t state = seed;
    std::uint64_t a = splitmix(state);
    state ^= stream * 0xD6E8FEB86659FD93ULL + 0x2545F4914F6CDD1DULL;
    std::uint64_t b = splitmix(state);
    return a ^ (b + 0x9E3779B97F4A7C15ULL);
}

std::uint64_t RngStream::uniform_below(std::uint64_t n) {
    if (n == 0) throw ConfigError("uniform_below: n must be positive");
    if (n == 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::size_t RngStream::draw_categorical(std::span<const double> weights) {
    if (weights.empty()) throw ConfigError("categorical: empty weight vector");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ConfigError("categorical: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw ConfigError("categorical: weights must sum to 1");
    const double u = uniform01();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

int RngStream::draw_count_geometric(double p) {
    if (p < 0.0 || p >= 1.0)
        throw ConfigError("count geometric: p must be in [0, 1)");
    if (p == 0.0) return 0;
    // Inverse CDF: smallest k with 1 - p^(k+1) > u.
    const double u = uniform01();
    const double k = std::floor(std::log1p(-u) / std::log(p));
    return k < 0.0 ? 0 : static_cast<int>(k);
}

int RngStream::draw_duration_geometric(double mean_days) {
    if (mean_days < 1.0)
        throw ConfigError("duration geometric: mean must be >= 1 day");
    if (mean_days == 1.0) return 1;
    // d - 1 is count-geometric with ratio 1 - 1/m.
    return 1 + draw_count_geometric(1.0 - 1.0 / mean_days);
}

int RngStream::draw_stage_days(double mean, double sd) {
    if (mean <= 0.0 || sd <= 0.0)
        throw ConfigError("stage duration: mean and sd must be positive");
    // Box-Muller, spare value discarded so each call costs exactly two draws.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    const long rounded = std::lround(mean + sd * z);
    return rounded < 1 ? 1 : static_cast<int>(rounded);
}

}  // namespace mpoxsim
