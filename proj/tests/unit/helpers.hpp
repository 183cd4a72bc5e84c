#pragma once

#include <initializer_list>

#include "germlab/parser.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/sectional.hpp"

inline germlab::Exponent E(std::initializer_list<std::uint32_t> v) {
    return germlab::Exponent(v);
}

inline germlab::Polynomial random_poly(germlab::Rng64& rng, int n, int max_terms,
                                       std::uint32_t max_exp, bool rational_coeffs = true) {
    std::vector<germlab::Term> ts;
    const std::size_t count = 1 + rng.next() % static_cast<std::uint64_t>(max_terms);
    for (std::size_t t = 0; t < count; ++t) {
        germlab::Exponent e(static_cast<std::size_t>(n));
        for (auto& x : e) x = static_cast<std::uint32_t>(rng.next() % (max_exp + 1));
        germlab::Rat c(rng.nonzero_int(9));
        if (rational_coeffs && rng.next() % 2)
            c /= static_cast<long>(1 + rng.next() % 4);
        ts.push_back({c, e});
    }
    return germlab::Polynomial::from_terms(n, std::move(ts));
}

inline germlab::Polynomial random_nonzero_poly(germlab::Rng64& rng, int n, int max_terms,
                                               std::uint32_t max_exp) {
    for (;;) {
        auto p = random_poly(rng, n, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

inline germlab::Rat eval_at(const germlab::Polynomial& f, const std::vector<germlab::Rat>& pt) {
    germlab::Rat acc(0);
    for (const auto& t : f.terms()) {
        germlab::Rat v = t.coeff;
        for (std::size_t i = 0; i < pt.size(); ++i)
            for (std::uint32_t k = 0; k < t.exp[i]; ++k) v *= pt[i];
        acc += v;
    }
    return acc;
}
