// SPDX-License-Identifier: Apache-2.0
#include "peftforge/rng.hpp"

#include <cmath>

#include "peftforge/errors.hpp"

namespace peftforge {

std::uint64_t SeededRng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SeededRng::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1)); // 1-u1 in (0,1], log(0) unreachable
    const double theta = 6.283185307179586 * u2;
    cached_gaussian_ = r * std::sin(theta);
    has_cached_gaussian_ = true;
    return r * std::cos(theta);
}

std::uint64_t SeededRng::next_below(std::uint64_t n) {
    if (n == 0) {
        throw ParameterError("next_below: bound must be positive");
    }
    const unsigned __int128 wide = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
}

Matrix gaussian_matrix(SeededRng& rng, std::size_t rows, std::size_t cols, double stddev) {
    if (rows == 0 || cols == 0) {
        throw ParameterError("gaussian_matrix: dimensions must be positive, got " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (!(stddev > 0.0)) {
        throw ParameterError("gaussian_matrix: stddev must be positive, got " + std::to_string(stddev));
    }
    Matrix m(rows, cols, 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = rng.next_gaussian() * stddev;
    }
    return m;
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace peftforge
