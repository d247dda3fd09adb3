// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "peftforge/matrix.hpp"

namespace peftforge {

// Deterministic, platform-independent random stream.
//
// Integer layer: splitmix64 with the standard constants —
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Uniform doubles take the top 53 bits: (z >> 11) * 2^-53, in [0, 1).
// Gaussians use classic Box–Muller on consecutive uniform pairs (u1, u2):
//   r = sqrt(-2 * ln(1 - u1)),  theta = 2*pi*u2
//   yields r*cos(theta) then r*sin(theta)
// The second value of each pair is cached, so one stream position is
// consumed per two gaussians. Golden vectors are committed in the tests.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();
    double next_uniform();
    double next_gaussian();

    // Unbiased-enough bounded draw via 128-bit multiply-shift; n must be > 0.
    std::uint64_t next_below(std::uint64_t n);

private:
    std::uint64_t state_;
    std::uint64_t seed_;
    bool has_cached_gaussian_ = false;
    double cached_gaussian_ = 0.0;
};

// Entries i.i.d. normal(0, stddev^2) drawn row-major from the stream.
Matrix gaussian_matrix(SeededRng& rng, std::size_t rows, std::size_t cols, double stddev);

// FNV-1a 64-bit of a byte string; used to derive per-token seeds.
std::uint64_t fnv1a64(const void* data, std::size_t len);

} // namespace peftforge
