// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the l3pipe Project.

#pragma once

#include <cstdint>

namespace l3 {

/// Counter-based pseudo-random generator. Every draw is a pure function of
/// (seed, stream, y, x, n), so parallel consumers get identical values no
/// matter how work is scheduled.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Raw 64-bit hash of the counter tuple.
    std::uint64_t bits(std::uint64_t stream, std::uint64_t y, std::uint64_t x,
                       std::uint64_t n) const;

    /// Uniform in [0, 1).
    double uniform(std::uint64_t stream, std::uint64_t y, std::uint64_t x,
                   std::uint64_t n) const;

    /// Standard normal (Box-Muller on counters 2n, 2n+1).
    double gaussian(std::uint64_t stream, std::uint64_t y, std::uint64_t x,
                    std::uint64_t n) const;

    /// Poisson sample with the given mean. Exact product method for small
    /// means; rounded normal approximation above `kPoissonNormalCutover`.
    double poisson(double mean, std::uint64_t stream, std::uint64_t y,
                   std::uint64_t x) const;

    static constexpr double kPoissonNormalCutover = 30.0;

private:
    std::uint64_t seed_;
};

/// Well-known stream ids so independent consumers never collide.
namespace rng_stream {
constexpr std::uint64_t kShotNoise = 1;
constexpr std::uint64_t kReadNoise = 2;
constexpr std::uint64_t kScene = 3;
constexpr std::uint64_t kReservoir = 4;
} // namespace rng_stream

} // namespace l3
