#pragma once

#include <cstdint>
#include <vector>

namespace germlab {

// Exponent vector of a monomial x^e in a ring of dimension e.size().
using Exponent = std::vector<std::uint32_t>;

// Total orders on monomials, both compatible with multiplication.
//
// GlobalDegrevlex is the usual degree reverse lexicographic order: higher
// total degree wins.  LocalDegrevlex negates the degree comparison, so 1 is
// the largest monomial; it is the order used for all local-ring computations.
//
// Tie-break (frozen for reproducibility): among monomials of equal total
// degree, scan exponents from the LAST variable down to the first; at the
// first index where they differ, the monomial with the SMALLER exponent is
// the larger one.  Both orders share this tie-break.
enum class MonomialOrder { LocalDegrevlex, GlobalDegrevlex };

inline std::uint64_t total_degree(const Exponent& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

// +1 if a > b under ord, -1 if a < b, 0 if equal.
inline int mono_cmp(const Exponent& a, const Exponent& b, MonomialOrder ord) {
    const std::uint64_t da = total_degree(a);
    const std::uint64_t db = total_degree(b);
    if (da != db) {
        const bool a_wins = (ord == MonomialOrder::GlobalDegrevlex) ? da > db : da < db;
        return a_wins ? 1 : -1;
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

inline bool mono_less(const Exponent& a, const Exponent& b, MonomialOrder ord) {
    return mono_cmp(a, b, ord) < 0;
}

// Does x^a divide x^b?
inline bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline Exponent exp_add(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Requires b | result, i.e. a[i] >= b[i].
inline Exponent exp_sub(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponent exp_lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool is_zero_exponent(const Exponent& e) {
    for (auto x : e) {
        if (x != 0) return false;
    }
    return true;
}

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : e) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace germlab
