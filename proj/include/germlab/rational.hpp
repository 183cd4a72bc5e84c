#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace germlab {

// Arbitrary-precision rational, the coefficient field of every computation.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Canonical "p/q" form; integers print without the denominator.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p" or "p/q" with optional sign on p.
inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace germlab
