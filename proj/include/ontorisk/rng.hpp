#pragma once

#include <cstdint>

namespace ontorisk {

/// SplitMix64 (Steele, Lea & Flood's splittable generator finalizer).
/// Chosen for the simulation because substreams derive from (seed, tag)
/// pairs without coordination and the output is identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Independent substream for one purpose within one seeded run.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t tag) {
        return SplitMix64(mix(seed) ^ mix(tag ^ 0x9E3779B97F4A7C15ULL));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform on (0, 1]: 53 mantissa bits, never exactly 0 (log-safe).
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform on [lo, hi).
    double next_uniform(double lo, double hi) {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;  // [0, 1)
        return lo + (hi - lo) * u;
    }

    /// Uniform integer in [0, n). Modulo mapping: the bias at n << 2^64 is
    /// far below anything the simulation statistics can resolve.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Box-Muller pair from two uniform draws.
struct GaussianPair {
    double z0;
    double z1;
};
GaussianPair gaussian_pair(SplitMix64& rng);

/// Fill `out[0..n)` with standard normals, two per Box-Muller step, the
/// trailing half of an odd draw discarded.
void fill_gaussian(SplitMix64& rng, double* out, std::size_t n);

}  // namespace ontorisk
