#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "germlab/monomial.hpp"
#include "germlab/rational.hpp"

namespace germlab {

struct Term {
    Rat coeff;     // never zero in a stored polynomial
    Exponent exp;
};

// Sparse multivariate polynomial over Q.
//
// Terms are stored strictly descending under GlobalDegrevlex; this fixes a
// deterministic iteration order used for printing, hashing and equality.
// The zero polynomial has no terms.
class Polynomial {
  public:
    explicit Polynomial(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("ring dimension must be >= 1");
    }

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, const Rat& c);
    static Polynomial monomial(const Rat& c, const Exponent& e);
    static Polynomial variable(int n, int i);  // x_i, 0-based

    // Takes an arbitrary term list: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(int n, std::vector<Term> ts);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Minimal total degree over the support (the multiplicity of the germ);
    // nullopt for the zero polynomial.
    std::optional<std::uint64_t> order() const;

    // Maximal total degree over the support; nullopt for zero.
    std::optional<std::uint64_t> max_degree() const;

    const Term& leading_term(MonomialOrder ord) const;

    Rat coeff_of(const Exponent& e) const;
    Rat constant_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned k) const;

    // Formal partial derivative with respect to x_i (0-based).
    Polynomial partial(int i) const;

    // Substitutes images[i] for x_i.  All images must share one ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    // Sum of the terms of exact total degree d.
    Polynomial degree_part(std::uint64_t d) const;

    bool is_homogeneous() const;

    // Multiplies by c * x^e.  c must be nonzero.
    Polynomial times_term(const Rat& c, const Exponent& e) const;

    // Clears denominators and divides by the integer content; the leading
    // coefficient under GlobalDegrevlex becomes positive.  Scales by a
    // nonzero rational only, so ideals and vanishing loci are unchanged.
    Polynomial primitive_part() const;

  private:
    void check_same_ring(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("ring dimension mismatch");
    }

    int n_;
    std::vector<Term> terms_;  // descending GlobalDegrevlex
};

}  // namespace germlab
