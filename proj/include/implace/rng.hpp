#ifndef IMPLACE_RNG_HPP
#define IMPLACE_RNG_HPP

#include <cstdint>

namespace implace {

// SplitMix64 (Steele, Lea, Flood 2014): a counter advanced by the golden
// gamma and finalized by a 64-bit mix. Chosen because its output is a pure
// function of (seed, counter), so generated instances are reproducible
// across platforms and standard libraries.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform in [0, n). Modulo bias is irrelevant at the sizes used here.
    std::uint64_t next_below(std::uint64_t n) { return n ? next() % n : 0; }
};

} // namespace implace

#endif
