#include "germlab/sectional.hpp"

#include <future>

namespace germlab {

namespace {

constexpr int kRetryBudget = 10;

Int pow_int(unsigned long base, int e) {
    Int r(1);
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

}  // namespace

std::uint64_t sample_stream_seed(std::uint64_t seed, int i, int sample) {
    std::uint64_t s = Rng64::mix(seed + 0x9E3779B97F4A7C15ull);
    s = Rng64::mix(s ^ (0x517CC1B727220A95ull * static_cast<std::uint64_t>(i + 1)));
    s = Rng64::mix(s ^ (0x2545F4914F6CDD1Dull * static_cast<std::uint64_t>(sample + 1)));
    return s;
}

Polynomial generic_section(const Polynomial& f, int i, Rng64& rng, std::uint32_t coeff_bound,
                           std::size_t max_dim) {
    const int n = f.n();
    if (i < 1 || i > n) throw std::invalid_argument("section dimension out of range");
    if (coeff_bound == 0) throw std::invalid_argument("coeff_bound must be positive");

    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        QMat plane(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
        for (std::size_t r = 0; r < plane.rows(); ++r)
            for (std::size_t c = 0; c < plane.cols(); ++c)
                plane.at(r, c) = Rat(rng.nonzero_int(coeff_bound));
        if (plane.rank() < static_cast<std::size_t>(i)) continue;

        std::vector<Polynomial> images;
        images.reserve(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            Polynomial row = Polynomial::zero(i);
            for (int c = 0; c < i; ++c)
                row = row + Polynomial::variable(i, c) *
                                plane.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            images.push_back(std::move(row));
        }
        Polynomial g = f.substitute(images);
        if (g == Polynomial::zero(i)) continue;  // plane inside the zero locus
        if (!quotient_dim(jacobian_ideal(g), max_dim)) continue;  // non-isolated section
        return g;
    }
    throw ResourceLimitError("no generic section found within the retry budget");
}

std::size_t sectional_milnor(const Polynomial& f, int i, const SectionPlan& plan,
                             std::size_t max_dim) {
    const int n = f.n();
    if (i < 0 || i > n) throw std::invalid_argument("section dimension out of range");
    if (plan.samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (i == 0) return 1;
    if (i == n) return milnor_number(f, max_dim);

    auto one_sample = [&](int sample) {
        Rng64 rng(sample_stream_seed(plan.seed, i, sample));
        Polynomial g = generic_section(f, i, rng, plan.coeff_bound, max_dim);
        return milnor_number(g, max_dim);
    };

    std::vector<std::future<std::size_t>> jobs;
    jobs.reserve(static_cast<std::size_t>(plan.samples));
    for (int s = 0; s < plan.samples; ++s)
        jobs.push_back(std::async(std::launch::async, one_sample, s));
    std::size_t best = jobs[0].get();
    for (std::size_t s = 1; s < jobs.size(); ++s) best = std::min(best, jobs[s].get());

    if (i == 1) {
        std::uint64_t m = *f.order();
        if (best != m - 1)
            throw InternalCheckError(
                "generic line sections missed mu^1 = m - 1; try another seed or more samples");
    }
    return best;
}

SectionalProfile sectional_profile(const Polynomial& f, const SectionPlan& plan,
                                   std::size_t max_dim) {
    SectionalProfile p;
    p.m = *f.order();
    for (int i = 0; i <= f.n(); ++i) p.mu_i.push_back(sectional_milnor(f, i, plan, max_dim));
    p.log_convex = log_convexity_check(p.mu_i);
    return p;
}

bool log_convexity_check(const std::vector<std::size_t>& mu_i) {
    for (std::size_t i = 1; i + 1 < mu_i.size(); ++i) {
        Int mid(static_cast<unsigned long>(mu_i[i]));
        Int lo(static_cast<unsigned long>(mu_i[i - 1]));
        Int hi(static_cast<unsigned long>(mu_i[i + 1]));
        if (mid * mid > lo * hi) return false;
    }
    return true;
}

MultiplicityBounds multiplicity_bounds(const Polynomial& f, std::size_t mu, std::size_t tau) {
    auto ord = f.order();
    if (!ord) throw std::invalid_argument("f must be nonzero");
    if (*ord == 1) throw SmoothGermError("multiplicity bounds need m >= 2");
    Int lower = pow_int(static_cast<unsigned long>(*ord) - 1, f.n());
    MultiplicityBounds b;
    b.mu_ge = Int(static_cast<unsigned long>(mu)) >= lower;
    b.tau_ge = Int(static_cast<unsigned long>(tau)) * f.n() >= lower;
    return b;
}

bool semi_homogeneous_check(const Polynomial& f, std::size_t max_dim) {
    auto ord = f.order();
    if (!ord) throw std::invalid_argument("f must be nonzero");
    if (*ord == 1) throw SmoothGermError("semi-homogeneity check needs m >= 2");
    Polynomial fm = f.degree_part(*ord);
    if (!quotient_dim(jacobian_ideal(fm), max_dim)) return false;

    Int expect = pow_int(static_cast<unsigned long>(*ord) - 1, f.n());
    Int mu(static_cast<unsigned long>(milnor_number(f, max_dim)));
    if (mu != expect)
        throw InternalCheckError("semi-homogeneous germ with mu != (m-1)^n");
    return true;
}

}  // namespace germlab
