#include <doctest.h>

#include "germlab/milnor.hpp"
#include "helpers.hpp"

using namespace germlab;

namespace {

const std::vector<std::string> X = {"x"};
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};
const std::vector<std::string> XYZW = {"x", "y", "z", "w"};

struct Known {
    std::string poly;
    std::vector<std::string> vars;
    std::size_t mu;
    std::size_t tau;
};

}  // namespace

TEST_CASE("ADE and Brieskorn germs have the textbook mu = tau") {
    // All quasi-homogeneous, so tau = mu (Saito).
    std::vector<Known> known = {
        {"x^2 + y^2", XY, 1, 1},        // A1
        {"x^3 + y^2", XY, 2, 2},        // A2
        {"x^4 + y^2", XY, 3, 3},        // A3
        {"x^6 + y^2", XY, 5, 5},        // A5
        {"x^3 + x*y^2", XY, 4, 4},      // D4
        {"x^4 + x*y^2", XY, 5, 5},      // D5
        {"x^3 + y^4", XY, 6, 6},        // E6
        {"x^3 + x*y^3", XY, 7, 7},      // E7
        {"x^3 + y^5", XY, 8, 8},        // E8
        {"x^2 + y^3 + z^7", XYZ, 12, 12},
        {"x^3 + y^4 + z^5", XYZ, 24, 24},
        {"x^2 + y^3 + z^5 + w^7", XYZW, 48, 48},
        {"x^5", X, 4, 4},
    };
    for (const auto& k : known) {
        CAPTURE(k.poly);
        auto f = parse_poly(k.poly, k.vars);
        CHECK(milnor_number(f) == k.mu);
        CHECK(tjurina_number(f) == k.tau);
    }
}

TEST_CASE("Fermat cubic: full algebra analysis") {
    auto f = parse_poly("x^3 + y^3 + z^3", XYZ);
    auto a = analyze_algebra(f);
    CHECK(a.n == 3);
    CHECK(a.m == 3);
    CHECK(a.mu == 8);
    CHECK(a.tau == 8);
    CHECK(a.ratio == Rat(1));
    CHECK(a.profile.d == std::vector<std::size_t>{0, 0});
    CHECK(a.theorem_ok);
    CHECK(!a.equality_case);  // 8 != 3*8
    CHECK(a.bs_holds);
    CHECK(a.saito_membership);  // homogeneous: f in J_f by Euler
    CHECK(a.f_pow_in_jf.at(1));
    CHECK(a.f_pow_in_jf.at(2));
    CHECK(a.f_pow_in_jf.at(3));

    // multiplication by f is the zero operator here
    auto alg = MilnorAlgebra::build(f);
    auto op = MultOperator::build(alg);
    CHECK(op.matrix().is_zero());
    CHECK(op.kernel_dim() == 8);
}

TEST_CASE("one variable: equality case of the ratio theorem") {
    auto a = analyze_algebra(parse_poly("x^5", X));
    CHECK(a.mu == 4);
    CHECK(a.tau == 4);
    CHECK(a.equality_case);  // mu = 1 * tau, ker A = im A^0
    CHECK(a.profile.d.empty());
    CHECK(a.theorem_ok);
}

TEST_CASE("non-quasi-homogeneous germ: tau < mu and f not in J_f") {
    // T-series germ x^3 + y^7 + x*y^5 (not quasi-homogeneous)
    auto f = parse_poly("x^3 + y^7 + x*y^5", XY);
    auto a = analyze_algebra(f);
    CHECK(a.mu == 12);
    CHECK(a.tau == 11);
    CHECK(!a.saito_membership);
    CHECK(a.theorem_ok);
    CHECK(a.mu == a.tau + a.profile.d[0]);
    CHECK(a.profile.d[0] == 1);
    CHECK(a.bs_holds);
}

TEST_CASE("Malgrange n = 2: f not in J_f and ratio below 3/2") {
    auto f = parse_poly("(x*y)^2 + x^6 + y^6", XY);
    auto a = analyze_algebra(f);
    CHECK(a.mu > a.tau);
    CHECK(!a.f_pow_in_jf.at(1));  // f^{n-1} = f not in J_f
    CHECK(a.f_pow_in_jf.at(2));   // Briancon-Skoda at k = n
    CHECK(a.ratio < rat(3, 2));
    CHECK(a.ratio > Rat(1));
    CHECK(a.theorem_ok);
}

TEST_CASE("operator route equals normal-form route for powers of f") {
    for (const char* src : {"x^3 + y^3 + z^3", "x^4 + y^2", "(x*y)^2 + x^6 + y^6"}) {
        auto vars = (std::string(src).find('z') != std::string::npos) ? XYZ : XY;
        auto f = parse_poly(src, vars);
        auto alg = MilnorAlgebra::build(f);
        auto op = MultOperator::build(alg);
        auto one = Polynomial::constant(f.n(), Rat(1));
        for (int k = 0; k <= f.n(); ++k) {
            QMat via_op = op.power(static_cast<unsigned>(k)) * alg.coordinates(one);
            QMat via_nf = alg.coordinates(f.pow(static_cast<unsigned>(k)));
            CHECK(via_op == via_nf);
        }
    }
}

TEST_CASE("filtration profile is consistent on assorted germs") {
    for (const char* src :
         {"x^3 + y^3 + z^3", "x^2 + y^3 + z^7", "(x*y)^2 + x^6 + y^6", "x^3 + y^7 + x*y^5"}) {
        auto vars = (std::string(src).find('z') != std::string::npos) ? XYZ : XY;
        auto a = analyze_algebra(parse_poly(src, vars));
        std::size_t sum = 0;
        for (auto d : a.profile.d) sum += d;
        CHECK(a.mu == a.tau + sum);
        CHECK(a.profile.nonincreasing());
        for (auto d : a.profile.d) CHECK(d <= a.tau);
    }
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(analyze_algebra(parse_poly("x + y^2", XY)), SmoothGermError);
    CHECK_THROWS_AS(analyze_algebra(parse_poly("x^2", XY)), NotIsolatedError);
    CHECK_THROWS_AS(analyze_algebra(parse_poly("x^2*y^2", XY)), NotIsolatedError);
    CHECK_THROWS_AS(analyze_algebra(Polynomial::zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(analyze_algebra(parse_poly("1 + x", XY)), std::invalid_argument);
    CHECK_THROWS_AS(milnor_number(parse_poly("x^2*y^2", XY)), NotIsolatedError);
    CHECK_THROWS_AS(tjurina_number(parse_poly("x^2*y^2", XY)), NotIsolatedError);

    // the normal crossing x*y is isolated (it is A1), not degenerate
    CHECK(milnor_number(parse_poly("x*y", XY)) == 1);

    // smooth germ has mu = 0 through the plain counters
    CHECK(milnor_number(parse_poly("x + y^2", XY)) == 0);
    CHECK(tjurina_number(parse_poly("x + y^2", XY)) == 0);
}

TEST_CASE("random isolated germs satisfy Theorem 1.1 mechanically") {
    Rng64 rng(31);
    int done = 0;
    while (done < 8) {
        // random perturbation of a Brieskorn germ keeps the singularity isolated
        std::uint32_t p = 2 + static_cast<std::uint32_t>(rng.next() % 3);
        std::uint32_t q = 2 + static_cast<std::uint32_t>(rng.next() % 3);
        auto base = Polynomial::monomial(Rat(1), E({p, 0})) +
                    Polynomial::monomial(Rat(1), E({0, q}));
        auto pert = random_poly(rng, 2, 3, 3);
        pert = pert - Polynomial::constant(2, pert.constant_term());
        auto f = base + pert * pert * pert;  // cube keeps the perturbation order high
        std::optional<AlgebraAnalysis> a;
        try {
            a = analyze_algebra(f);
        } catch (const NotIsolatedError&) {
            continue;
        }
        ++done;
        const std::size_t n = 2;
        CHECK(a->mu <= n * a->tau);
        CHECK(a->theorem_ok);
        CHECK(a->bs_holds);
        CHECK(a->equality_case == (a->mu == n * a->tau));
    }
}
