// SPDX-License-Identifier: Apache-2.0
#include "peftforge/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "peftforge/errors.hpp"

namespace peftforge {

namespace {

std::string shape_of(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

void require_positive_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw ParameterError("matrix dimensions must be positive, got " + shape_of(rows, cols));
    }
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    require_positive_dims(rows, cols);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    require_positive_dims(rows, cols);
    if (data_.size() != rows * cols) {
        throw ParameterError("matrix data length " + std::to_string(data_.size()) +
                             " does not match shape " + shape_of(rows, cols));
    }
    ensure_finite("Matrix construction");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    require_positive_dims(r, c);
    std::vector<double> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw ParameterError("ragged row in matrix literal");
        }
        data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
}

std::string Matrix::shape_str() const { return shape_of(rows_, cols_); }

void Matrix::ensure_finite(const char* context) const {
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw NumericError(std::string(context) + ": non-finite entry in " + shape_of(rows_, cols_) +
                               " matrix");
        }
    }
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: inner dimensions differ, " + a.shape_str() + " * " + b.shape_str());
    }
    Matrix out(a.rows(), b.cols(), 0.0);
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    // i-k-j loop order keeps the inner walk contiguous for both operands.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double aik = a.at(i, kk);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                out.at(i, j) += aik * b.at(kk, j);
            }
        }
    }
    out.ensure_finite("matmul");
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows(), 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.at(c, r) = m.at(r, c);
        }
    }
    return out;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shape mismatch, " + a.shape_str() + " vs " + b.shape_str());
    }
}

} // namespace

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "add");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    out.ensure_finite("add");
    return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "sub");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    out.ensure_finite("sub");
    return out;
}

Matrix scale(const Matrix& m, double k) {
    Matrix out = m;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= k;
    out.ensure_finite("scale");
    return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "hadamard");
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
    out.ensure_finite("hadamard");
    return out;
}

double frobenius_norm(const Matrix& m) {
    double s = 0.0;
    for (double v : m.data()) s += v * v;
    return std::sqrt(s);
}

double absmax(const Matrix& m) {
    double s = 0.0;
    for (double v : m.data()) s = std::max(s, std::fabs(v));
    return s;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::fabs(a[i] - b[i]));
    return s;
}

std::uint64_t matrix_checksum(const Matrix& m) {
    constexpr std::uint64_t kOffset = 14695981039346656037ull;
    constexpr std::uint64_t kPrime = 1099511628211ull;
    std::uint64_t h = kOffset;
    auto mix_bytes = [&h](const void* p, std::size_t n) {
        const auto* bytes = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= bytes[i];
            h *= kPrime;
        }
    };
    const std::uint32_t r = static_cast<std::uint32_t>(m.rows());
    const std::uint32_t c = static_cast<std::uint32_t>(m.cols());
    mix_bytes(&r, sizeof r);
    mix_bytes(&c, sizeof c);
    for (double v : m.data()) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        unsigned char le[8];
        for (int i = 0; i < 8; ++i) le[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xFF);
        mix_bytes(le, 8);
    }
    return h;
}

} // namespace peftforge
