#include <doctest.h>

#include <numeric>

#include "germlab/milnor.hpp"
#include "germlab/newton.hpp"
#include "helpers.hpp"

using namespace germlab;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};
const std::vector<std::string> XYZW = {"x", "y", "z", "w"};

Polynomial permuted(const Polynomial& f, const std::vector<int>& perm) {
    std::vector<Polynomial> images;
    for (int i = 0; i < f.n(); ++i) images.push_back(Polynomial::variable(f.n(), perm[i]));
    return f.substitute(images);
}

}  // namespace

TEST_CASE("support and convenience") {
    auto f = parse_poly("x^2*y + x*y^2", XY);
    auto s = support(f);
    CHECK(s.points == std::vector<Exponent>{E({1, 2}), E({2, 1})});
    CHECK(!is_convenient(s));
    CHECK(missing_axes(s) == std::vector<int>{0, 1});

    CHECK(is_convenient(support(parse_poly("x^3 + y^2", XY))));
    CHECK(missing_axes(support(parse_poly("x^3 + x*y^3", XY))) == std::vector<int>{1});
}

TEST_CASE("under-diagram volumes by hand") {
    auto s = support(parse_poly("x^3 + y^2", XY));
    CHECK(under_diagram_volume(s, {0}) == Rat(3));
    CHECK(under_diagram_volume(s, {1}) == Rat(2));
    CHECK(under_diagram_volume(s, {0, 1}) == Rat(3));  // triangle (0,0),(3,0),(0,2)

    // x^2 + x*y + y^2: the (1,1) point lies on the diagram, area unchanged
    auto t = support(parse_poly("x^2 + x*y + y^2", XY));
    CHECK(under_diagram_volume(t, {0, 1}) == Rat(2));

    // broken diagram: x^4 + x*y + y^4 has a vertex at (1,1)
    auto u = support(parse_poly("x^4 + x*y + y^4", XY));
    CHECK(under_diagram_volume(u, {0, 1}) == Rat(4));  // two triangles of area 2
}

TEST_CASE("Newton number of plane curve germs") {
    struct Case {
        const char* poly;
        long nu;
    };
    for (auto [src, nu] : std::initializer_list<Case>{{"x^2 + y^3", 2},
                                                      {"x^3 + y^4", 6},
                                                      {"x^4 + y^5", 12},
                                                      {"x^2 + y^2", 1},
                                                      {"x^3 + y^2", 2}}) {
        CAPTURE(src);
        auto r = newton_number(parse_poly(src, XY));
        CHECK(r.convenient);
        CHECK(r.nu == nu);
        // these germs are Newton-nondegenerate: nu = mu
        CHECK(Int(static_cast<unsigned long>(milnor_number(parse_poly(src, XY)))) == r.nu);
    }
}

TEST_CASE("Brieskorn product formula") {
    struct Case {
        const char* poly;
        std::vector<std::string> vars;
        std::vector<long> exps;
    };
    std::vector<Case> cases = {
        {"x^2 + y^3 + z^7", XYZ, {2, 3, 7}},
        {"x^3 + y^4 + z^5", XYZ, {3, 4, 5}},
        {"x^2 + y^3 + z^5 + w^7", XYZW, {2, 3, 5, 7}},
        {"x^4 + y^4 + z^4", XYZ, {4, 4, 4}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.poly);
        auto f = parse_poly(c.poly, c.vars);
        long expect = 1;
        for (long a : c.exps) expect *= a - 1;
        auto r = newton_number(f);
        CHECK(r.nu == expect);
        CHECK(milnor_number(f) == static_cast<std::size_t>(expect));
    }
}

TEST_CASE("Malgrange germs: nu matches the hand computation") {
    auto r2 = newton_number(parse_poly("(x*y)^2 + x^6 + y^6", XY));
    CHECK(r2.nu == 13);  // 2*12 - 12 + 1
    CHECK(r2.volumes[1] == Rat(12));  // quad (0,0),(6,0),(2,2),(0,6)
    CHECK(r2.volumes[0] == Rat(12));  // V_1: 6 + 6

    auto r3 = newton_number(parse_poly("(x*y*z)^2 + x^8 + y^8 + z^8", XYZ));
    CHECK(r3.volumes[2] == Rat(64));
    CHECK(r3.volumes[1] == Rat(96));
    CHECK(r3.volumes[0] == Rat(24));
    CHECK(r3.nu == 215);  // 6*64 - 2*96 + 24 - 1
}

TEST_CASE("nu is invariant under coordinate permutations and redundant points") {
    Rng64 rng(41);
    for (const char* src : {"x^2 + y^3 + z^7", "x^4 + y^4 + z^4",
                            "(x*y*z)^2 + x^8 + y^8 + z^8", "x^3 + x*y^2 + y^4 + z^3"}) {
        CAPTURE(src);
        auto f = parse_poly(src, XYZ);
        auto base = newton_number(f).nu;
        std::vector<std::vector<int>> perms = {{1, 0, 2}, {2, 1, 0}, {1, 2, 0}};
        for (const auto& p : perms) CHECK(newton_number(permuted(f, p)).nu == base);
    }

    // interior support points do not change the diagram
    auto f = parse_poly("x^3 + y^3", XY);
    auto g = parse_poly("x^3 + y^3 + x^2*y^2", XY);
    CHECK(newton_number(f).nu == newton_number(g).nu);
    auto h = parse_poly("x^3 + y^3 + 5*x^4 - 7*x*y^3", XY);
    CHECK(newton_number(h).nu == newton_number(f).nu);
}

TEST_CASE("non-convenient germs are refused with the missing axes") {
    try {
        newton_number(parse_poly("x^2*y + x*y^2", XY));
        CHECK(false);
    } catch (const NotConvenientError& e) {
        CHECK(e.missing_axes() == std::vector<int>{0, 1});
    }
    try {
        newton_number(parse_poly("x^3 + x*y^3", XY));
        CHECK(false);
    } catch (const NotConvenientError& e) {
        CHECK(e.missing_axes() == std::vector<int>{1});
    }
}

TEST_CASE("mu >= nu and n*tau >= nu on nondegenerate convenient germs") {
    for (const char* src : {"x^2 + y^3", "x^3 + y^4", "x^5 + y^5 + x^2*y^2"}) {
        auto f = parse_poly(src, XY);
        auto mu = milnor_number(f);
        auto tau = tjurina_number(f);
        auto kr = kushnirenko_report(f, mu, tau);
        CHECK(kr.mu_ge_nu);
        CHECK(kr.n_tau_ge_nu);
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(newton_number(Polynomial::zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(newton_number(parse_poly("1 + x", XY)), std::invalid_argument);
    std::vector<Term> squares;
    for (std::size_t i = 0; i < 5; ++i) {
        Exponent e(5, 0);
        e[i] = 2;
        squares.push_back({Rat(1), e});
    }
    CHECK_THROWS_AS(newton_number(Polynomial::from_terms(5, squares)), ResourceLimitError);
}
