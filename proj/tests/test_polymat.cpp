#include "doctest.h"

#include "oracles.hpp"
#include "tapoly/polymat.hpp"

#include <random>

using namespace tapoly;

TEST_CASE("determinant basics") {
    Ring Z = Ring::integers();
    CHECK(PolyMatrix::identity(4, Z).det() == LaurentPoly::one(Z));
    PolyMatrix one(1, 1, Z);
    one.at(0, 0) = LaurentPoly::parse("t^2 - t", Z);
    CHECK(one.det() == LaurentPoly::parse("t^2 - t", Z));
    CHECK(PolyMatrix(0, 0, Z).det() == LaurentPoly::one(Z));
    CHECK_THROWS_AS(PolyMatrix(2, 3, Z).det(), error);

    // zero column -> zero determinant
    PolyMatrix z(2, 2, Z);
    z.at(0, 1) = LaurentPoly::one(Z);
    z.at(1, 1) = LaurentPoly::parse("t", Z);
    CHECK(z.det().is_zero());
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        Ring ring = trial % 2 == 0 ? Ring::integers() : Ring::fp(5);
        std::uniform_int_distribution<int> size(1, 5);
        int n = size(rng);
        PolyMatrix m(n, n, ring);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = oracle::random_poly(rng, ring, 2, 3);
        CHECK(m.det() == oracle::det_cofactor(m));
    }
}

TEST_CASE("block upper-triangular determinant is the product of blocks") {
    std::mt19937 rng(7);
    Ring ring = Ring::fp(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> size(1, 3);
        int a = size(rng), b = size(rng);
        PolyMatrix m(a + b, a + b, ring);
        PolyMatrix A(a, a, ring), B(b, b, ring);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < a; ++j) m.at(i, j) = A.at(i, j) = oracle::random_poly(rng, ring, 2, 6);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j) m.at(a + i, a + j) = B.at(i, j) = oracle::random_poly(rng, ring, 2, 6);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) m.at(i, a + j) = oracle::random_poly(rng, ring, 2, 6);
        CHECK(m.det() == A.det() * B.det());
    }
}

TEST_CASE("row and column selection") {
    Ring Z = Ring::integers();
    PolyMatrix m(2, 3, Z);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = LaurentPoly::monomial(Z, 10 * i + j, 0);
    PolyMatrix c = m.with_columns_removed(1, 1);
    CHECK(c.cols() == 2);
    CHECK(c.at(1, 1) == LaurentPoly::monomial(Z, 12, 0));
    PolyMatrix r = m.with_rows({1});
    CHECK(r.rows() == 1);
    CHECK(r.at(0, 0) == LaurentPoly::monomial(Z, 10, 0));
}
