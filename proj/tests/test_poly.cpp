#include <catch2/catch_amalgamated.hpp>

#include "arimat/poly.hpp"

using namespace arimat;

TEST_CASE("bivariate canonical printing") {
    BivariatePoly p;
    p.add_term(2, 0, 1);
    p.add_term(0, 2, 1);
    p.add_term(1, 0, 3);
    p.add_term(0, 1, 4);
    p.add_term(0, 0, 7);
    REQUIRE(to_string(p) == "x^2 + y^2 + 3x + 4y + 7");

    BivariatePoly q;
    q.add_term(2, 0, -1);
    q.add_term(0, 0, 1);
    REQUIRE(to_string(q) == "-x^2 + 1");

    BivariatePoly single;
    single.add_term(1, 0, 1);
    REQUIRE(to_string(single) == "x");
    REQUIRE(to_string(BivariatePoly{}) == "0");

    BivariatePoly mixed;
    mixed.add_term(1, 1, -2);
    mixed.add_term(1, 0, 1);
    REQUIRE(to_string(mixed) == "-2xy + x");
}

TEST_CASE("univariate canonical printing") {
    UniPoly p;
    p.add_term(2, 1);
    p.add_term(1, -5);
    p.add_term(0, 11);
    REQUIRE(to_string(p, "t") == "t^2 - 5t + 11");
    UniPoly c = UniPoly::constant(-3);
    REQUIRE(to_string(c, "t") == "-3");
}

TEST_CASE("corank-nullity term expands binomially") {
    BivariatePoly p = corank_nullity_term(2, 0);  // (x-1)^2
    BivariatePoly expect;
    expect.add_term(2, 0, 1);
    expect.add_term(1, 0, -2);
    expect.add_term(0, 0, 1);
    REQUIRE(p == expect);
    REQUIRE(corank_nullity_term(0, 0) == BivariatePoly::constant(1));
}

TEST_CASE("substitution x := 1-t, y := 0") {
    // T = x^2 + y^2 + 3x + 4y + 7 evaluated at (1-t, 0) is t^2 - 5t + 11
    BivariatePoly T;
    T.add_term(2, 0, 1);
    T.add_term(0, 2, 1);
    T.add_term(1, 0, 3);
    T.add_term(0, 1, 4);
    T.add_term(0, 0, 7);
    UniPoly one_minus_t = UniPoly::constant(1) - UniPoly::variable();
    UniPoly chi = T.substitute(one_minus_t, UniPoly{});
    UniPoly expect;
    expect.add_term(2, 1);
    expect.add_term(1, -5);
    expect.add_term(0, 11);
    REQUIRE(chi == expect);
}

TEST_CASE("no zero coefficients are stored") {
    BivariatePoly p;
    p.add_term(1, 1, 3);
    p.add_term(1, 1, -3);
    REQUIRE(p.c.empty());
    UniPoly u;
    u.add_term(2, 5);
    u.add_term(2, -5);
    REQUIRE(u.c.empty());
}

TEST_CASE("polynomial evaluation") {
    BivariatePoly p;
    p.add_term(2, 1, 2);  // 2 x^2 y
    REQUIRE(p.eval(3, 5) == 90);
    UniPoly u;
    u.add_term(3, -1);
    u.add_term(0, 4);
    REQUIRE(u.eval(2) == -4);
}
