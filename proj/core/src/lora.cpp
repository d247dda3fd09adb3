// SPDX-License-Identifier: Apache-2.0
#include "peftforge/lora.hpp"

#include <algorithm>
#include <string>

#include "peftforge/errors.hpp"

namespace peftforge {

namespace {

void validate_adapter(const Matrix& base, const AdapterCore& core) {
    const std::size_t d = base.rows();
    const std::size_t k = base.cols();
    if (core.rank == 0 || core.rank > std::min(d, k)) {
        throw ParameterError("adapter rank " + std::to_string(core.rank) + " out of range for base " +
                             base.shape_str() + " (must be in [1, " +
                             std::to_string(std::min(d, k)) + "])");
    }
    if (!(core.alpha > 0.0)) {
        throw ParameterError("adapter alpha must be positive");
    }
    if (core.a.rows() != core.rank || core.a.cols() != k) {
        throw ShapeError("adapter A shape " + core.a.shape_str() + " does not match rank x k = " +
                         std::to_string(core.rank) + "x" + std::to_string(k));
    }
    if (core.b.rows() != d || core.b.cols() != core.rank) {
        throw ShapeError("adapter B shape " + core.b.shape_str() + " does not match d x rank = " +
                         std::to_string(d) + "x" + std::to_string(core.rank));
    }
}

} // namespace

LoraAdapter::LoraAdapter(Matrix base, AdapterCore core)
    : base_(std::move(base)), core_(std::move(core)) {
    validate_adapter(base_, core_);
}

Matrix adapter_forward(const Matrix& effective_base, const AdapterCore& core, const Matrix& x) {
    if (x.rows() != effective_base.cols()) {
        throw ShapeError("adapter forward: input " + x.shape_str() + " incompatible with base " +
                         effective_base.shape_str());
    }
    const Matrix ax = matmul(core.a, x);
    const Matrix bax = matmul(core.b, ax);
    return add(matmul(effective_base, x), scale(bax, core.scaling()));
}

AdapterGradients adapter_backward(const AdapterCore& core, const Matrix& x,
                                  const Matrix& upstream_grad) {
    if (x.rows() != core.a.cols()) {
        throw ShapeError("adapter backward: input " + x.shape_str() + " incompatible with A " +
                         core.a.shape_str());
    }
    if (upstream_grad.rows() != core.b.rows() || upstream_grad.cols() != x.cols()) {
        throw ShapeError("adapter backward: upstream gradient " + upstream_grad.shape_str() +
                         " does not match output shape " + std::to_string(core.b.rows()) + "x" +
                         std::to_string(x.cols()));
    }
    const double s = core.scaling();
    const Matrix ax = matmul(core.a, x);
    AdapterGradients g;
    g.grad_b = scale(matmul(upstream_grad, transpose(ax)), s);
    g.grad_a = scale(matmul(transpose(core.b), matmul(upstream_grad, transpose(x))), s);
    return g;
}

Matrix LoraAdapter::forward(const Matrix& x) const { return adapter_forward(base_, core_, x); }

AdapterGradients LoraAdapter::backward(const Matrix& x, const Matrix& upstream_grad) const {
    return adapter_backward(core_, x, upstream_grad);
}

Matrix LoraAdapter::merged() const {
    return add(base_, scale(matmul(core_.b, core_.a), core_.scaling()));
}

LoraAdapter init_adapter(SeededRng& rng, Matrix base, std::uint32_t rank, double alpha,
                         double init_stddev) {
    const std::size_t d = base.rows();
    const std::size_t k = base.cols();
    if (rank == 0 || rank > std::min(d, k)) {
        throw ParameterError("init_adapter: rank " + std::to_string(rank) + " out of range for base " +
                             base.shape_str());
    }
    AdapterCore core;
    core.rank = rank;
    core.alpha = alpha;
    core.a = gaussian_matrix(rng, rank, k, init_stddev);
    core.b = Matrix(d, rank, 0.0);
    return LoraAdapter(std::move(base), std::move(core));
}

std::uint64_t trainable_param_count(std::span<const LoraAdapter> adapters) {
    std::uint64_t total = 0;
    for (const auto& ad : adapters) {
        total += static_cast<std::uint64_t>(ad.rank()) * (ad.d() + ad.k());
    }
    return total;
}

std::uint64_t trainable_param_count(const std::vector<LoraAdapter>& adapters) {
    return trainable_param_count(std::span<const LoraAdapter>(adapters));
}

} // namespace peftforge
