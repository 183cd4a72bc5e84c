#pragma once

#include <optional>

#include "germlab/standard_basis.hpp"

namespace germlab {

// Brute-force dimension oracle, independent of the Mora/Buchberger code
// paths: dim S/(I + m^D) by exact rank of truncated multiples.  Deliberately
// naive; used to validate the engine and to fix corpus expectations.

struct TruncationResult {
    std::uint64_t degree_cap = 0;
    std::size_t dim_at_cap = 0;
    bool stable = false;  // same value at degree_cap and degree_cap + 1
};

// dim S/(I + m^D): count of monomials of total degree < D minus the exact
// rank of all truncations of x^alpha * g with |alpha| + order(g) < D.
// Nondecreasing in D; equals dim S/I as soon as m^D is contained in I.
std::size_t truncated_dim(const Ideal& I, std::uint64_t D);

TruncationResult truncation_result(const Ideal& I, std::uint64_t D);

struct OracleDim {
    bool finite = false;  // false = infinite suspected (the guard was hit)
    std::size_t dim = 0;
    std::uint64_t stabilized_at = 0;
};

// Raises D until truncated_dim agrees at two consecutive caps.  A staircase
// certificate (1 + max staircase degree, from the engine) makes the answer
// exact: past it, I + m^D = I.  Without one the plateau is a heuristic and
// the guard turns runaway growth into "infinite suspected".
OracleDim oracle_dim(const Ideal& I, std::optional<std::uint64_t> certified_cap = std::nullopt);

// Monomial-column guard (20000): beyond it the oracle refuses rather than
// approximates.
std::size_t oracle_monomial_cap();

}  // namespace germlab
