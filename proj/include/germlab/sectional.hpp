#pragma once

#include <cstdint>

#include "germlab/milnor.hpp"

namespace germlab {

// Deterministic 64-bit generator (splitmix-style).  The standard <random>
// distributions are not bit-identical across platforms, and sectional
// results must be reproducible from (seed, samples, coeff_bound) alone.
class Rng64 {
  public:
    explicit Rng64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        return mix(z);
    }

    // Uniform over {-bound..-1, 1..bound}.  The modulo bias is irrelevant
    // here; only determinism matters.
    long nonzero_int(std::uint32_t bound) {
        long v = static_cast<long>(next() % (2ull * bound)) - static_cast<long>(bound);
        return v >= 0 ? v + 1 : v;
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

// Independent stream per (section dimension, sample index), so samples can
// run in any order or in parallel with identical results.
std::uint64_t sample_stream_seed(std::uint64_t seed, int i, int sample);

struct SectionPlan {
    int samples = 3;
    std::uint64_t seed = 0;
    std::uint32_t coeff_bound = 20;
};

struct SectionalProfile {
    std::vector<std::size_t> mu_i;  // mu^0 .. mu^n
    bool log_convex = false;
    std::uint64_t m = 0;
};

// f composed with a random full-rank n x i matrix of nonzero integers in
// [-coeff_bound, coeff_bound], expanded in i fresh variables.  Rank-deficient
// draws and sections with non-isolated singularities are redrawn; gives up
// after 10 attempts.
Polynomial generic_section(const Polynomial& f, int i, Rng64& rng, std::uint32_t coeff_bound,
                           std::size_t max_dim = max_dim_cap());

// Minimum of mu over plan.samples independent sections: a non-generic plane
// can only overestimate mu (upper semicontinuity), so the minimum converges
// to the generic value from above.  mu^0 = 1 and mu^n = mu need no sampling;
// mu^1 is asserted to equal order(f) - 1.
std::size_t sectional_milnor(const Polynomial& f, int i, const SectionPlan& plan,
                             std::size_t max_dim = max_dim_cap());

SectionalProfile sectional_profile(const Polynomial& f, const SectionPlan& plan,
                                   std::size_t max_dim = max_dim_cap());

// (mu^i)^2 <= mu^{i-1} * mu^{i+1} for all interior i.
bool log_convexity_check(const std::vector<std::size_t>& mu_i);

struct MultiplicityBounds {
    bool mu_ge = false;   // mu >= (m-1)^n
    bool tau_ge = false;  // n*tau >= (m-1)^n
};

MultiplicityBounds multiplicity_bounds(const Polynomial& f, std::size_t mu, std::size_t tau);

// True iff the degree-m part of f (fixed coordinates) already has an
// isolated singularity; in that case mu(f) = (m-1)^n is asserted.
bool semi_homogeneous_check(const Polynomial& f, std::size_t max_dim = max_dim_cap());

}  // namespace germlab
