#include "ontorisk/rng.hpp"

#include <cmath>
#include <numbers>

namespace ontorisk {

GaussianPair gaussian_pair(SplitMix64& rng) {
    const double u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

void fill_gaussian(SplitMix64& rng, double* out, std::size_t n) {
    std::size_t i = 0;
    while (i + 1 < n) {
        const GaussianPair p = gaussian_pair(rng);
        out[i++] = p.z0;
        out[i++] = p.z1;
    }
    if (i < n) out[i] = gaussian_pair(rng).z0;
}

}  // namespace ontorisk
