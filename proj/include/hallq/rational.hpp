#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hallq {

using Rat = mpq_class;

// mpq_class(n, d) does not reduce; this does.
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat &a, long e) {
    if (e == 0) return Rat(1);
    if (a == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0^negative");
        return Rat(0);
    }
    Rat base = a;
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
    out.canonicalize();
    if (neg) return Rat(1) / out;
    return out;
}

inline std::string rat_str(const Rat &a) { return a.get_str(); }

// Accepts "p", "-p", "p/q"; throws on anything else.
inline Rat parse_rat(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty");
    Rat r;
    if (r.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat &a) { return a.get_den() == 1; }

inline long rat_to_long(const Rat &a) {
    if (!rat_is_integer(a)) throw std::domain_error("rat_to_long: not an integer");
    if (!a.get_num().fits_slong_p()) throw std::overflow_error("rat_to_long: overflow");
    return a.get_num().get_si();
}

}  // namespace hallq
