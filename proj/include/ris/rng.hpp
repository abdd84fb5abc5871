#pragma once

#include <cstdint>

namespace ris {

/// splitmix64 finalizer; full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Minimal counter-free PRNG with a fully specified bit stream, so results
/// are identical across platforms and standard libraries.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Independent deterministic stream for (seed, stream_id). Used to give
/// every Monte Carlo user its own stream, making results independent of
/// evaluation order.
inline SplitMix64 make_stream(std::uint64_t seed, std::uint64_t stream_id) {
    return SplitMix64{mix64(seed ^ mix64(stream_id ^ 0xA076'1D64'78BD'642Full))};
}

}  // namespace ris
