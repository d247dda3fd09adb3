// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "peftforge/lora.hpp"
#include "peftforge/matrix.hpp"

namespace peftforge {

// Packed storage for absmax codes. Codes live in [-(2^b - 1), 2^b - 1],
// which is one value too wide for a plain b-bit field, so the stream uses
// escape coding: codes within [-(2^(b-1) - 1), 2^(b-1) - 1] go straight
// into the b-bit main stream as offset binary, and the reserved all-ones
// pattern marks an escape whose full code is appended to the escape list.
// Escapes are entries with |x| >= ~absmax/2, so weight-like tensors pay
// almost exactly b bits per entry. Exact layout: docs/FORMATS.md.
struct PackedCodes {
    std::vector<std::uint8_t> stream;  // b=4: two entries per byte, low nibble first; b=8: one byte each
    std::vector<std::uint8_t> escapes; // b=4: 1 byte per escape (code+15); b=8: u16 LE (code+255)
};

PackedCodes pack_codes(std::span<const std::int16_t> codes, int bits);
// Throws FormatError when stream/escape lengths are inconsistent with count.
std::vector<std::int16_t> unpack_codes(const PackedCodes& packed, std::size_t count, int bits);

// Absmax quantization: scale c = (2^b - 1) / absmax(X), codes = round(c*X)
// with round-half-away-from-zero. The all-zero tensor is flagged and keeps
// scale 0.
class QuantizedTensor {
public:
    QuantizedTensor() = default;
    QuantizedTensor(std::size_t rows, std::size_t cols, int bits, double scale, bool zero_flag,
                    std::vector<std::int16_t> codes);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t count() const { return rows_ * cols_; }
    int bits() const { return bits_; }
    double scale() const { return scale_; }
    bool zero_flag() const { return zero_flag_; }
    std::span<const std::int16_t> codes() const { return codes_; }
    const PackedCodes& packed() const { return packed_; }
    std::size_t escape_count() const { return packed_.escapes.size() / (bits_ == 4 ? 1 : 2); }

    std::uint64_t checksum() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    int bits_ = 0;
    double scale_ = 0.0;
    bool zero_flag_ = false;
    std::vector<std::int16_t> codes_;
    PackedCodes packed_;
};

QuantizedTensor quantize(const Matrix& x, int bits);
Matrix dequantize(const QuantizedTensor& q);

// Exact byte count of the serialized quantized payload: fixed header (32
// bytes) + main stream + escape list. See docs/FORMATS.md.
std::uint64_t storage_footprint(const QuantizedTensor& q);

// dequantize(qbase)*x + (alpha/rank)*B*(A*x); the base exists only in
// quantized form and is expanded on use.
Matrix qlora_forward(const QuantizedTensor& qbase, const AdapterCore& adapter, const Matrix& x);

// Experimentation path: independent absmax scale per block of block_len
// consecutive row-major entries (last block may be short). Not the default
// and not part of the checkpoint format.
struct BlockQuantized {
    std::size_t rows = 0, cols = 0;
    int bits = 0;
    std::size_t block_len = 0;
    std::vector<double> scales;
    std::vector<std::uint8_t> zero_flags;
    std::vector<std::int16_t> codes;
};

BlockQuantized quantize_blocks(const Matrix& x, int bits, std::size_t block_len);
Matrix dequantize(const BlockQuantized& q);

} // namespace peftforge
