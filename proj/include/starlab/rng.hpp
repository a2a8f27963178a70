#ifndef STARLAB_RNG_HPP
#define STARLAB_RNG_HPP

#include <cstdint>

namespace starlab {

// splitmix64. The exact state progression and output mix are part of the
// reproducibility contract (documented in the README): identical seeds must
// replay identical suites on any platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased-enough fixed-point scaling (Lemire): floor(next() * bound / 2^64).
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    bool coin() { return (next() & 1) != 0; }
};

} // namespace starlab

#endif
