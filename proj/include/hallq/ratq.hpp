#pragma once

#include <vector>

#include "hallq/rational.hpp"

namespace hallq {

inline long binom2(long r) { return r * (r - 1) / 2; }

inline Rat rat_qpow(const Rat &q, long e) { return rat_pow(q, e); }

// Rational-mode value with explicit zero grading: unit * 0^zeros.
// zeros > 0 means an exact zero, zeros < 0 a pole.
struct RatGraded {
    long zeros = 0;
    Rat unit = 1;
};

inline RatGraded rg(const Rat &v) {
    if (v == 0) return {1, Rat(1)};
    return {0, v};
}

inline RatGraded rg_mul(const RatGraded &a, const RatGraded &b) {
    return {a.zeros + b.zeros, a.unit * b.unit};
}

inline RatGraded rg_div(const RatGraded &a, const RatGraded &b) {
    return {a.zeros - b.zeros, a.unit / b.unit};
}

// (a; q)_n with zero tracking; n may be negative.
inline RatGraded poch_rat(const Rat &a, const Rat &q, long n) {
    RatGraded out;
    if (n >= 0) {
        for (long k = 0; k < n; ++k) out = rg_mul(out, rg(Rat(1) - a * rat_qpow(q, k)));
    } else {
        for (long j = 1; j <= -n; ++j) out = rg_div(out, rg(Rat(1) - a * rat_qpow(q, -j)));
    }
    return out;
}

}  // namespace hallq
