#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

struct Ideal {
    std::vector<Polynomial> gens;  // nonzero, all in the same ring

    explicit Ideal(std::vector<Polynomial> g);
    int n() const { return gens[0].n(); }
};

// Generating set closed under S-pair reduction for the given ordering,
// together with the minimal generators of its leading monomial ideal.
struct StandardBasis {
    MonomialOrder ord;
    std::vector<Polynomial> basis;
    std::vector<Exponent> lead_exponents;  // pairwise incomparable under divisibility
};

// Monomials outside the leading ideal, ascending under GlobalDegrevlex
// (so the constant monomial comes first).  When finite is false the
// quotient is infinite-dimensional and monomials is left empty.
struct Staircase {
    bool finite = false;
    std::vector<Exponent> monomials;

    std::size_t size() const { return monomials.size(); }
    // 1 + max total degree over the staircase (0 for an empty staircase).
    std::uint64_t truncation_degree() const;
};

// Default cap on quotient dimensions, overridable via GERMLAB_MAX_DIM.
std::size_t max_dim_cap();

// Weak normal form of g with respect to G.  For LocalDegrevlex this is
// Mora's algorithm: reducers are chosen by minimal ecart (ties by earliest
// index) and intermediate results join the reducer list whenever the chosen
// reducer has larger ecart than the current polynomial; that bound on the
// ecart of future reducers is what forces termination.  The result r
// satisfies u*g = r mod <G> for some unit u of the local ring, and is
// normalized to a primitive integer polynomial.  For GlobalDegrevlex the
// plain Buchberger lead reduction is used.
Polynomial mora_normal_form(const Polynomial& g, const std::vector<Polynomial>& G,
                            MonomialOrder ord);

// Buchberger loop over mora_normal_form with the normal selection strategy
// (lowest lcm degree first); new elements are made primitive on insertion.
StandardBasis standard_basis(const Ideal& I, MonomialOrder ord);

// The staircase is finite iff the leading ideal contains a pure power of
// every variable.  Enumeration is guarded by max_dim.
Staircase staircase(const StandardBasis& sb, std::size_t max_dim = max_dim_cap());

// dim of S/I as the staircase count of the LocalDegrevlex standard basis;
// nullopt when infinite.
std::optional<std::size_t> quotient_dim(const Ideal& I, std::size_t max_dim = max_dim_cap());

// g in <sb> iff the weak normal form vanishes (sb must be completed).
bool membership(const Polynomial& g, const StandardBasis& sb);

// Coset-exact normal form onto the staircase span, for LocalDegrevlex bases
// with finite quotient.  No unit scaling is applied, so the result is the
// canonical representative of g's coset.  Any term of total degree >=
// trunc_deg is dropped outright: with trunc_deg = staircase.truncation_degree()
// the maximal ideal to that power is contained in the ideal (highest-corner
// bound for local degree orderings), so dropping preserves the coset.
Polynomial reduced_normal_form(const Polynomial& g, const StandardBasis& sb,
                               std::uint64_t trunc_deg);

}  // namespace germlab
