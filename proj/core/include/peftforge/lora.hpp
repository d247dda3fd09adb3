// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "peftforge/matrix.hpp"
#include "peftforge/rng.hpp"

namespace peftforge {

// The trainable low-rank pair (A, B) with its rank/alpha metadata, without
// the frozen base. This is what QLoRA composes with a quantized base and
// what the trainer updates.
struct AdapterCore {
    Matrix a;            // r x k
    Matrix b;            // d x r
    std::uint32_t rank = 0;
    double alpha = 0.0;

    double scaling() const { return alpha / static_cast<double>(rank); }
};

struct AdapterGradients {
    Matrix grad_a; // r x k
    Matrix grad_b; // d x r
};

// Frozen d x k base plus a low-rank update. The base is never written by
// training; matrix_checksum(base()) is the freeze witness.
class LoraAdapter {
public:
    LoraAdapter(Matrix base, AdapterCore core);

    const Matrix& base() const { return base_; }
    const AdapterCore& core() const { return core_; }
    AdapterCore& core() { return core_; }

    const Matrix& a() const { return core_.a; }
    const Matrix& b() const { return core_.b; }
    std::uint32_t rank() const { return core_.rank; }
    double alpha() const { return core_.alpha; }
    double scaling() const { return core_.scaling(); }

    std::size_t d() const { return base_.rows(); }
    std::size_t k() const { return base_.cols(); }

    // base*x + (alpha/rank) * B * (A*x); both paths see the same input.
    Matrix forward(const Matrix& x) const;

    // grad_b = (alpha/rank) * upstream * (A*x)^T
    // grad_a = (alpha/rank) * B^T * upstream * x^T
    // The base receives no gradient.
    AdapterGradients backward(const Matrix& x, const Matrix& upstream_grad) const;

    // base + (alpha/rank) * B * A, adapter left untouched.
    Matrix merged() const;

private:
    Matrix base_;
    AdapterCore core_;
};

// A ~ gaussian(0, init_stddev^2), B = 0, so the update starts at exactly zero.
LoraAdapter init_adapter(SeededRng& rng, Matrix base, std::uint32_t rank, double alpha,
                         double init_stddev = 0.02);

// Forward using an externally supplied effective base (e.g. a dequantized one).
Matrix adapter_forward(const Matrix& effective_base, const AdapterCore& core, const Matrix& x);
AdapterGradients adapter_backward(const AdapterCore& core, const Matrix& x,
                                  const Matrix& upstream_grad);

// Sum over adapters of rank * (d + k).
std::uint64_t trainable_param_count(std::span<const LoraAdapter> adapters);
std::uint64_t trainable_param_count(const std::vector<LoraAdapter>& adapters);

} // namespace peftforge
