#pragma once

#include <map>
#include <unordered_map>

#include "germlab/ratmat.hpp"
#include "germlab/standard_basis.hpp"

namespace germlab {

// The quotient has infinite dimension: the singularity is not isolated.
class NotIsolatedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The germ is regular at the origin (multiplicity 1): mu = tau = 0 and the
// ratio checks do not apply.
class SmoothGermError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Ideal jacobian_ideal(const Polynomial& f);
Ideal tjurina_ideal(const Polynomial& f);

// dim S/J_f.  Throws NotIsolatedError when infinite.
std::size_t milnor_number(const Polynomial& f, std::size_t max_dim = max_dim_cap());

// dim S/(J_f, f).  Throws NotIsolatedError when infinite; finiteness is
// cross-checked against dim S/J_f (the two are finite together).
std::size_t tjurina_number(const Polynomial& f, std::size_t max_dim = max_dim_cap());

struct AlgebraAnalysis;

// S/J_f with its monomial staircase basis.
class MilnorAlgebra {
  public:
    static MilnorAlgebra build(const Polynomial& f, std::size_t max_dim = max_dim_cap());

    const Polynomial& f() const { return f_; }
    const StandardBasis& jacobian_sb() const { return sb_; }
    const Staircase& basis() const { return basis_; }
    std::size_t mu() const { return basis_.size(); }
    int n() const { return f_.n(); }

    // Coordinates of g's coset in the staircase basis, as a mu x 1 column.
    QMat coordinates(const Polynomial& g) const;

  private:
    MilnorAlgebra(Polynomial f, StandardBasis sb, Staircase st);
    friend AlgebraAnalysis analyze_algebra(const Polynomial& f, std::size_t max_dim);

    Polynomial f_;
    StandardBasis sb_;
    Staircase basis_;
    std::uint64_t trunc_deg_;
    std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

// Multiplication by f on M_f in the staircase basis.  Construction verifies
// A^n = 0 (Briancon-Skoda) and caches A^0..A^n with their ranks.
class MultOperator {
  public:
    static MultOperator build(const MilnorAlgebra& alg);

    const QMat& matrix() const { return pow_[1]; }
    const QMat& power(unsigned i) const { return pow_.at(i); }
    std::size_t rank_of_power(unsigned i) const { return rank_.at(i); }
    std::size_t mu() const { return mu_; }
    int n() const { return n_; }

    std::size_t kernel_dim() const { return mu_ - rank_.at(1); }

  private:
    MultOperator() = default;
    std::size_t mu_ = 0;
    int n_ = 0;
    std::vector<QMat> pow_;          // A^0 .. A^n
    std::vector<std::size_t> rank_;  // matching ranks
};

// d_i = rank A^i - rank A^{i+1} for i = 1..n-1; each d_i is additionally
// verified against dim(ker A cap im A^i) computed from explicit subspaces.
struct FiltrationProfile {
    std::vector<std::size_t> d;
    std::size_t mu = 0;
    std::size_t tau = 0;

    std::size_t sum() const;
    bool nonincreasing() const;
};

FiltrationProfile filtration_profile(const MultOperator& op, std::size_t tau);

// NF(f^k) = 0 against the Jacobian standard basis.
bool power_membership(const Polynomial& f, unsigned k, const StandardBasis& jacobian_sb);

// Everything the ratio theorem needs for one germ, cross-checked.
struct AlgebraAnalysis {
    int n = 0;
    std::uint64_t m = 0;  // multiplicity
    std::size_t mu = 0;
    std::size_t tau = 0;
    Rat ratio;                              // mu/tau
    FiltrationProfile profile;              // d_1..d_{n-1}
    bool bs_holds = false;                  // f^n in J_f, by NF and by A^n
    std::map<unsigned, bool> f_pow_in_jf;   // k = 1..n
    bool saito_membership = false;          // f in J_f
    bool theorem_ok = false;                // mu <= n*tau, mu = tau + sum d, d_i <= tau
    bool equality_case = false;             // ker(A) = im(A^{n-1})
};

// Throws SmoothGermError (m = 1), NotIsolatedError (mu infinite),
// std::invalid_argument (f = 0 or f(0) != 0), InternalCheckError (bug).
AlgebraAnalysis analyze_algebra(const Polynomial& f, std::size_t max_dim = max_dim_cap());

}  // namespace germlab
