#pragma once

#include <cstdint>
#include <random>

namespace riskfront {

/// Seedable 64-bit Mersenne Twister with its own integer mapping, so draws are
/// identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream keyed by (seed, a, b).
    static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

} // namespace riskfront
