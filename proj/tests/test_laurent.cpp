#include "doctest.h"

#include "tapoly/laurent.hpp"

using namespace tapoly;

static const Ring Z = Ring::integers();
static const Ring F5 = Ring::fp(5);

static LaurentPoly zp(const std::string& s) { return LaurentPoly::parse(s, Z); }
static LaurentPoly fp5(const std::string& s) { return LaurentPoly::parse(s, F5); }

TEST_CASE("arithmetic basics") {
    CHECK(zp("t - 1") * zp("t + 1") == zp("t^2 - 1"));
    CHECK(zp("t^2 - t + 1") + LaurentPoly::zero(Z) == zp("t^2 - t + 1"));
    // over F_5: (2t)(3 t^-1) = 6 = 1
    CHECK(fp5("2*t") * fp5("3*t^-1") == LaurentPoly::one(F5));
    CHECK(-zp("t - 2") == zp("2 - t"));
    CHECK_THROWS_AS(zp("t") + fp5("t"), error);
}

TEST_CASE("parse accepts arbitrary order and negative exponents") {
    CHECK(zp("- 7*t^3 + 2*t^4 + 9*t^2 + 2 - 7*t") == zp("2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2"));
    CHECK(zp("t^-2 + t") == LaurentPoly::monomial(Z, 1, -2) + LaurentPoly::monomial(Z, 1, 1));
    CHECK(zp("3") == LaurentPoly::monomial(Z, 3, 0));
    CHECK(zp("0").is_zero());
    CHECK_THROWS_AS(zp("t +"), error);
    CHECK_THROWS_AS(zp(""), error);
}

TEST_CASE("printing round-trips") {
    for (const char* s : {"t^2 - t + 1", "2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2", "t^-1 + 1", "-t + 2", "0"}) {
        LaurentPoly f = zp(s);
        CHECK(LaurentPoly::parse(f.to_string(), Z) == f);
    }
}

TEST_CASE("canonical form") {
    // 2t^3 - 2t^2 over F_5: shift to exponent 0, scale by inv(2)=3 -> t - 1 ... times -1?
    // lowest term is -2t^2 -> scale by inv(-2)=2: (2t-2)*? compute directly
    LaurentPoly f = fp5("2*t^3 - 2*t^2");
    CHECK(f.canonical() == fp5("t - 1").canonical());
    CHECK(f.canonical().low_exp() == 0);
    CHECK(f.canonical().terms().begin()->second == 1);

    CHECK(zp("t^2 - t + 1").canonical() == zp("t^2 - t + 1"));
    CHECK(LaurentPoly::zero(Z).canonical().is_zero());

    // idempotent and constant on unit orbits
    LaurentPoly g = zp("2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2");
    CHECK(g.canonical().canonical() == g.canonical());
    CHECK(g.times_unit(-1, 3).canonical() == g.canonical());
    LaurentPoly h = fp5("t^4 + 2*t^3 + 2*t^2 + 2*t + 1");
    CHECK(h.times_unit(3, -2).canonical() == h.canonical());
}

TEST_CASE("divisibility over the integers") {
    // golden values: 2t^4-7t^3+9t^2-7t+2 = (t^2-t+1)(2t^2-5t+2)
    CHECK(is_divisible(zp("2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2"), zp("t^2 - t + 1")));
    CHECK_FALSE(is_divisible(zp("t^2 - t + 1"), zp("2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2")));
    CHECK(is_divisible(zp("2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2"), zp("1")));
    CHECK(exact_div(zp("2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2"), zp("t^2 - t + 1")) == zp("2*t^2 - 5*t + 2"));

    // Z[t] divisibility is not Q[t] divisibility
    CHECK_FALSE(is_divisible(zp("t^2 + t"), zp("2*t + 2")));
    CHECK(is_divisible(zp("2*t^2 + 2*t"), zp("2*t + 2")));

    // unit-robust, Laurent shifts included
    CHECK(is_divisible(zp("t^-1 - t^-2"), zp("t - 1")));
    CHECK_THROWS_AS(is_divisible(zp("t"), LaurentPoly::zero(Z)), error);
    CHECK(is_divisible(LaurentPoly::zero(Z), zp("t - 1")));
}

TEST_CASE("divisibility iff equal canonical forms both ways") {
    auto both = [](const LaurentPoly& f, const LaurentPoly& g) {
        return is_divisible(f, g) && is_divisible(g, f);
    };
    LaurentPoly f = zp("2*t^2 - 2");
    CHECK(both(f, f.times_unit(-1, 4)) == (f.canonical() == f.times_unit(-1, 4).canonical()));
    LaurentPoly g = zp("t^2 - 1");
    CHECK_FALSE(both(f, g));
    CHECK(both(f, g) == (f.canonical() == g.canonical()));
}

TEST_CASE("gcd") {
    CHECK(lp_gcd({zp("t^2 - 1"), zp("t - 1")}) == zp("t - 1"));
    CHECK(lp_gcd({zp("2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2")}) ==
          zp("2*t^4 - 7*t^3 + 9*t^2 - 7*t + 2").canonical());

    // derived: over F_3, t^3 - t = t(t-1)(t+1) and t^2 + t = t(t+1)
    Ring F3 = Ring::fp(3);
    LaurentPoly a = LaurentPoly::parse("t^3 - t", F3);
    LaurentPoly b = LaurentPoly::parse("t^2 + t", F3);
    LaurentPoly g = lp_gcd({a, b});
    CHECK(g == LaurentPoly::parse("t + 1", F3));
    // oracle: brute force over monic linear factors
    for (i64 root = 0; root < 3; ++root) {
        LaurentPoly lin = LaurentPoly::parse("t", F3) - LaurentPoly::monomial(F3, root, 0);
        bool common = is_divisible(a, lin) && is_divisible(b, lin);
        CHECK(is_divisible(g, lin) == common);
    }

    CHECK(lp_gcd({zp("6*t^2 - 6"), zp("4*t + 4")}) == zp("2*t + 2"));
    CHECK_THROWS_AS(lp_gcd({}), error);
    CHECK_THROWS_AS(lp_gcd({LaurentPoly::zero(Z)}), error);

    // gcd divides every input; common divisors divide the gcd
    LaurentPoly u = zp("t^2 - t + 1") * zp("t - 2") * zp("3");
    LaurentPoly v = zp("t^2 - t + 1") * zp("t + 5") * zp("6");
    LaurentPoly g2 = lp_gcd({u, v});
    CHECK(is_divisible(u, g2));
    CHECK(is_divisible(v, g2));
    CHECK(is_divisible(g2, zp("3*t^2 - 3*t + 3")));
}
