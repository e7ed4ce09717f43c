#pragma once

#include <cstdint>

namespace hexcpg {

/// Counter-based deterministic random stream (splitmix64).
///
/// One stream drives everything a trial consumes: weight initialization,
/// the per-synapse stochastic term of the weight update, and the optional
/// balance-flip draw. The output sequence depends only on the seed, so a
/// whole trial is a pure function of its seed, on every platform.
///
/// Draw order within a trial is fixed and documented in replay.hpp.
class RngStream {
public:
    static constexpr const char* kAlgorithm = "splitmix64";

    explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next_u64() {
        ++draws_;
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 significant bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draws() const { return draws_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
    std::uint64_t draws_ = 0;
};

}  // namespace hexcpg
