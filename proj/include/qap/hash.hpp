#pragma once

#include <cstdint>

namespace qap {

// FNV-1a over little-endian 64-bit words; used to fingerprint cost
// trajectories so two runs can be compared without storing them.
inline constexpr std::uint64_t kFnvOffset = 0xCBF29CE484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001B3ULL;

inline std::uint64_t fnv1a64_push(std::uint64_t h, std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
        h ^= value & 0xFFU;
        h *= kFnvPrime;
        value >>= 8;
    }
    return h;
}

}  // namespace qap
