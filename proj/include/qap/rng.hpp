#pragma once

#include <array>
#include <cstdint>

namespace qap {

// splitmix64 step; used to expand a single 64-bit seed into xoshiro state.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256**: fixed algorithm so identical seeds give identical streams on
// every platform (std::mt19937 + distributions do not guarantee that across
// standard libraries).
class RngState {
public:
    explicit RngState(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Plain modulo: slightly biased, but bias is irrelevant here and the
    // result is platform-independent, which the determinism contract needs.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

}  // namespace qap
