#pragma once

#include <stdexcept>
#include <string>

namespace flowtel {

/// Malformed or inconsistent input data (bad trace line, out-of-order
/// timestamps, single-class training set, corrupt model file).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem-level failure (missing file, unwritable output).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace flowtel
