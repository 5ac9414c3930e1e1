#pragma once

#include <cstdint>
#include <limits>

namespace flowtel {

// All register aggregates saturate instead of wrapping: a wrapped
// sum-of-squares would silently corrupt every std computed from it.

inline std::uint32_t sat_add(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r;
    return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<std::uint32_t>::max() : r;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

/// Narrow a 64-bit aggregate into a 32-bit wire field.
inline std::uint32_t sat_cast32(std::uint64_t v) {
    return v > std::numeric_limits<std::uint32_t>::max()
               ? std::numeric_limits<std::uint32_t>::max()
               : static_cast<std::uint32_t>(v);
}

inline std::uint64_t sat_cast64(unsigned __int128 v) {
    return v > std::numeric_limits<std::uint64_t>::max()
               ? std::numeric_limits<std::uint64_t>::max()
               : static_cast<std::uint64_t>(v);
}

}  // namespace flowtel
