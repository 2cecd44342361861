#pragma once

#include <cstdint>

#include "hallq/rational.hpp"

namespace hallq {

// splitmix64 (Steele, Lea, Flood 2014).  Fixed by specification so that runs
// are reproducible across platforms and bindings; do not swap for any
// library generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // Nonzero rational with numerator and denominator of height <= h.
    Rat rat(unsigned h = 50) {
        long num = static_cast<long>(below(h)) + 1;
        long den = static_cast<long>(below(h)) + 1;
        if (next() & 1) num = -num;
        Rat r(num, den);
        r.canonicalize();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace hallq
