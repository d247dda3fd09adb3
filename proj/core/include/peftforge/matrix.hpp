// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace peftforge {

// Dense row-major matrix of 64-bit floats. Values are immutable by
// convention once handed to another module; every producing operation
// verifies the all-finite invariant.
class Matrix {
public:
    Matrix() = default; // empty sentinel (0x0), only valid as a placeholder

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double& operator[](std::size_t i) { return data_[i]; }

    std::span<const double> data() const { return data_; }
    std::span<double> mutable_data() { return data_; }

    std::string shape_str() const;

    // Throws NumericError if any entry is NaN/Inf.
    void ensure_finite(const char* context) const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double k);
Matrix hadamard(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& m);
double absmax(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

// FNV-1a 64-bit over dims and the little-endian byte image of the data;
// used for frozen-weight invariance checks and adapter/base binding.
std::uint64_t matrix_checksum(const Matrix& m);

} // namespace peftforge
