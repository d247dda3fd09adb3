// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace peftforge {

// Error taxonomy shared by every module. The CLI maps each type to a
// distinct exit code (see tools/).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand shapes do not satisfy an operation's precondition.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Out-of-range or otherwise invalid argument value.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Malformed input file or byte stream.
class FormatError : public Error {
public:
    using Error::Error;
};

// Cross-record or cross-file contract violation (duplicate ids, missing
// masks, checksum mismatch, ...).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Non-finite value reached a place that requires finite arithmetic.
class NumericError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure (missing path, unwritable output).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace peftforge
