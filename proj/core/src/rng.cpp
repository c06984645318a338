// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#include "l3/rng.hpp"

#include <cmath>
#include <numbers>

namespace l3 {
namespace {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t CounterRng::bits(std::uint64_t stream, std::uint64_t y,
                               std::uint64_t x, std::uint64_t n) const {
    std::uint64_t h = mix64(seed_ ^ 0x6A09E667F3BCC909ull);
    h = mix64(h ^ stream);
    h = mix64(h ^ y);
    h = mix64(h ^ x);
    h = mix64(h ^ n);
    return h;
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t y,
                           std::uint64_t x, std::uint64_t n) const {
    return static_cast<double>(bits(stream, y, x, n) >> 11) * 0x1.0p-53;
}

double CounterRng::gaussian(std::uint64_t stream, std::uint64_t y,
                            std::uint64_t x, std::uint64_t n) const {
    // Offset keeps u1 strictly inside (0, 1) so the log is finite.
    const double u1 =
        (static_cast<double>(bits(stream, y, x, 2 * n) >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = uniform(stream, y, x, 2 * n + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double CounterRng::poisson(double mean, std::uint64_t stream, std::uint64_t y,
                           std::uint64_t x) const {
    if (mean <= 0.0) {
        return 0.0;
    }
    if (mean <= kPoissonNormalCutover) {
        // Knuth's product method.
        const double limit = std::exp(-mean);
        double prod = 1.0;
        std::uint64_t k = 0;
        do {
            prod *= uniform(stream, y, x, k);
            ++k;
        } while (prod > limit);
        return static_cast<double>(k - 1);
    }
    const double z = gaussian(stream, y, x, 0);
    const double v = std::round(mean + std::sqrt(mean) * z);
    return v < 0.0 ? 0.0 : v;
}

} // namespace l3
