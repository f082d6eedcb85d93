#pragma once

#include <cstdint>

namespace bicon {

// 64-bit linear congruential generator with Knuth's MMIX constants.
// Chosen over std::mt19937_64 because the exact stream is part of the tool's
// reproducibility contract: seeds in config files must generate identical
// sample points across platforms and languages. uniform01() advances the
// state once and maps the top 53 bits onto [0, 1).
struct Lcg64 {
    std::uint64_t state;

    explicit Lcg64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }

    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

}  // namespace bicon
