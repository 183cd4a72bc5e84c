#include <doctest.h>

#include "germlab/milnor.hpp"
#include "germlab/oracle.hpp"
#include "germlab/parser.hpp"
#include "helpers.hpp"

using namespace germlab;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Ideal ideal_of(const std::vector<std::string>& polys, const std::vector<std::string>& vars) {
    std::vector<Polynomial> gens;
    for (const auto& s : polys) gens.push_back(parse_poly(s, vars));
    return Ideal(std::move(gens));
}
}  // namespace

TEST_CASE("truncated dimensions of hand-checked ideals") {
    // S/(x,y) is the ground field no matter where we cut
    auto mxy = ideal_of({"x", "y"}, XY);
    CHECK(truncated_dim(mxy, 1) == 1);
    CHECK(truncated_dim(mxy, 3) == 1);
    CHECK(truncated_dim(mxy, 9) == 1);

    // S/(x^2, y^2) = <1, x, y, xy>; m^4 already lies inside the ideal
    auto I = ideal_of({"x^2", "y^2"}, XY);
    CHECK(truncated_dim(I, 2) == 3);  // xy not visible below degree 2
    CHECK(truncated_dim(I, 3) == 4);
    CHECK(truncated_dim(I, 4) == 4);
    CHECK(truncated_dim(I, 5) == 4);

    // a unit generator kills everything
    auto unit = ideal_of({"1 + x"}, XY);
    CHECK(truncated_dim(unit, 1) == 0);
    CHECK(truncated_dim(unit, 6) == 0);

    // one variable
    auto x3 = ideal_of({"x^3"}, {"x"});
    CHECK(truncated_dim(x3, 2) == 2);   // cut hides the relation
    CHECK(truncated_dim(x3, 3) == 3);
    CHECK(truncated_dim(x3, 4) == 3);
    CHECK(truncated_dim(x3, 20) == 3);
}

TEST_CASE("truncated dimension is nondecreasing in the cap") {
    Rng64 rng(20240817);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<Polynomial> gens;
        int count = 1 + static_cast<int>(rng.next() % 3);
        for (int k = 0; k < count; ++k) gens.push_back(random_nonzero_poly(rng, 2, 4, 3));
        Ideal I(std::move(gens));
        std::size_t prev = truncated_dim(I, 1);
        for (std::uint64_t D = 2; D <= 7; ++D) {
            std::size_t cur = truncated_dim(I, D);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("truncation_result reports plateau stability") {
    auto I = ideal_of({"x^2", "y^2"}, XY);
    auto early = truncation_result(I, 2);
    CHECK(early.degree_cap == 2);
    CHECK(early.dim_at_cap == 3);
    CHECK_FALSE(early.stable);

    auto late = truncation_result(I, 4);
    CHECK(late.dim_at_cap == 4);
    CHECK(late.stable);
}

TEST_CASE("oracle stabilizes on the Fermat cubic Jacobian ideal") {
    auto f = parse_poly("x^3 + y^3 + z^3", XYZ);
    auto r = oracle_dim(jacobian_ideal(f));
    REQUIRE(r.finite);
    CHECK(r.dim == 8);

    // a staircase certificate from the engine pins the same answer
    auto sb = standard_basis(jacobian_ideal(f), MonomialOrder::LocalDegrevlex);
    auto st = staircase(sb);
    REQUIRE(st.finite);
    auto certified = oracle_dim(jacobian_ideal(f), st.truncation_degree());
    REQUIRE(certified.finite);
    CHECK(certified.dim == 8);
    CHECK(certified.stabilized_at == st.truncation_degree());
}

TEST_CASE("oracle flags a visibly infinite quotient") {
    auto I = ideal_of({"x*y"}, XY);
    auto r = oracle_dim(I);
    CHECK_FALSE(r.finite);  // dim grows linearly until the guard trips
}

TEST_CASE("oracle agrees with the engine on assorted germs") {
    struct Row {
        const char* poly;
        std::vector<std::string> vars;
    };
    const Row rows[] = {
        {"x^2 + y^5", XY},            // A4
        {"x^2*y + y^4", XY},          // D5
        {"x^3 + y^5", XY},            // E8
        {"x^3 + y^7 + x*y^5", XY},
        {"x^2 + y^3 + z^7", XYZ},
        {"x^3 + y^4 + z^5", XYZ},
    };
    for (const auto& row : rows) {
        CAPTURE(row.poly);
        auto f = parse_poly(row.poly, row.vars);
        for (const Ideal& I : {jacobian_ideal(f), tjurina_ideal(f)}) {
            auto engine = quotient_dim(I);
            REQUIRE(engine.has_value());
            auto st = staircase(standard_basis(I, MonomialOrder::LocalDegrevlex));
            auto ora = oracle_dim(I, st.truncation_degree());
            REQUIRE(ora.finite);
            CHECK(ora.dim == *engine);
        }
    }
}

TEST_CASE("oracle input guards") {
    auto I = ideal_of({"x^2", "y^2"}, XY);
    CHECK_THROWS_AS(truncated_dim(I, 0), std::invalid_argument);

    // the monomial-count guard refuses outsized truncations outright
    auto J = ideal_of({"x^2", "y^2", "z^2"}, XYZ);
    CHECK(oracle_monomial_cap() == 20000);
    CHECK_THROWS_AS(truncated_dim(J, 60), ResourceLimitError);
}
