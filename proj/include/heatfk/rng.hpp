#pragma once

#include <cstdint>

namespace heatfk {

// 64-bit linear congruential generator with Knuth's MMIX constants.
// state_{k+1} = 6364136223846793005 * state_k + 1442695040888963407 (mod 2^64).
// Doubles take the top 53 bits, so any port reproduces the same stream.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        auto k = static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
        return k < n ? k : n - 1;
    }

private:
    std::uint64_t state_;
};

} // namespace heatfk
