#pragma once

#include <cstdint>
#include <random>

namespace median {

// Seedable generator whose output does not depend on the standard library
// vendor: the engine is std::mt19937_64 (fully specified by the standard)
// and the distributions below are implemented here rather than taken from
// <random>, whose algorithms are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [lo, hi], by rejection sampling.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

// Mixes a base seed with stream indices so that derived streams differ.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace median
