#include <gtest/gtest.h>

#include <random>

#include "pfshuffle/errors.hpp"
#include "pfshuffle/pfaffian.hpp"
#include "pfshuffle/polyring.hpp"
#include "test_support.hpp"

using namespace pfshuffle;

namespace {

SparsePoly x(int d, int i, int j) { return SparsePoly::variable(d, i, j); }

SparsePoly random_poly(int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(0, 4), degree(0, 3), coeff(-5, 5), var(1, d);
    SparsePoly p(d);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        Monomial m;
        const int deg = degree(rng);
        for (int e = 0; e < deg; ++e) {
            int i = var(rng), j = var(rng);
            while (j == i) j = var(rng);
            m.push_back(VarIndex(std::min(i, j), std::max(i, j)).code());
        }
        p.add_term(m, coeff(rng));
    }
    return p;
}

} // namespace

TEST(VarIndex, Validation) {
    EXPECT_NO_THROW(VarIndex(1, 2));
    EXPECT_THROW(VarIndex(2, 1), InputError);
    EXPECT_THROW(VarIndex(3, 3), InputError);
    EXPECT_THROW(VarIndex(0, 3), InputError);
    EXPECT_EQ(VarIndex::from_code(VarIndex(3, 7).code()), VarIndex(3, 7));
}

TEST(SparsePoly, Examples) {
    const SparsePoly zero(4);
    const SparsePoly p = x(4, 1, 2) * x(4, 3, 4);
    EXPECT_EQ(p + zero, p);
    EXPECT_EQ(p.term_count(), 1u);
    EXPECT_EQ(p.to_string(), "x12*x34");

    const SparsePoly pf = x(4, 1, 2) * x(4, 3, 4) - x(4, 1, 3) * x(4, 2, 4) + x(4, 1, 4) * x(4, 2, 3);
    const SparsePoly sq = pf * pf;
    EXPECT_EQ(sq.term_count(), 6u);
    std::vector<Integer> coeffs;
    for (const auto& [m, c] : sq.terms()) coeffs.push_back(c);
    std::sort(coeffs.begin(), coeffs.end());
    EXPECT_EQ(coeffs, (std::vector<Integer>{-2, -2, 1, 1, 1, 2}));
    EXPECT_EQ(sq, determinant(generic_matrix(4)));
    EXPECT_TRUE(sq.well_formed());
}

TEST(SparsePoly, MismatchedDimensionsThrow) {
    EXPECT_THROW(x(4, 1, 2) + x(5, 1, 2), InputError);
    EXPECT_THROW(x(4, 1, 2) * x(5, 1, 2), InputError);
    EXPECT_THROW(x(4, 1, 5), InputError);
}

TEST(SparsePoly, RingAxioms) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const SparsePoly a = random_poly(5, rng), b = random_poly(5, rng), c = random_poly(5, rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * SparsePoly::constant(5, 1), a);
        const SparsePoly d = a * b - c * Integer(3);
        EXPECT_TRUE(d.well_formed());
        EXPECT_LE(d.term_count(), a.term_count() * b.term_count() + c.term_count());
    }
}

TEST(SparsePoly, TextAndJsonRoundTrip) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const SparsePoly a = random_poly(5, rng);
        EXPECT_EQ(parse_poly(a.to_string(), 5), a) << a.to_string();
        EXPECT_EQ(poly_from_json(poly_to_json(a), 5), a);
    }
    EXPECT_EQ(poly_to_json(x(4, 1, 2) * x(4, 3, 4)).dump(), R"([{"coeff":"1","vars":[[1,2],[3,4]]}])");
    EXPECT_EQ(SparsePoly::variable(12, 2, 10).to_string(), "x2_10");
    EXPECT_EQ(parse_poly("x2_10 - 3*x1_2^2", 12).to_string(), "x2_10 - 3*x1_2^2");
}

TEST(Determinant, SymbolicSmallCases) {
    EXPECT_TRUE(determinant(generic_matrix(1)).is_zero());
    EXPECT_EQ(determinant(generic_matrix(2)), x(2, 1, 2) * x(2, 1, 2));
    EXPECT_TRUE(determinant(generic_matrix(3)).is_zero());
    EXPECT_TRUE(determinant(generic_matrix(5)).is_zero());
}

TEST(Determinant, NumericMatchesRationalElimination) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 1 + trial % 9;
        const IntMatrix m = pfshuffle::testing::random_antisymmetric(d, rng);
        EXPECT_EQ(Rational(determinant(m)), pfshuffle::testing::rational_determinant(pfshuffle::testing::to_rational(m)));
    }
}

TEST(Evaluate, MatrixM) {
    const IntMatrix m = matrix_M(4);
    EXPECT_EQ(evaluate(SparsePoly::constant(4, 1), m), 1);
    EXPECT_EQ(evaluate(x(4, 1, 2), m), 1);
    EXPECT_EQ(evaluate(x(4, 1, 3), m), 1);
    EXPECT_EQ(evaluate(x(4, 1, 3) * x(4, 2, 4) - x(4, 1, 2), m), 0);
    EXPECT_EQ(evaluate(x(4, 1, 3), tridiagonal_matrix(4)), 0);
    EXPECT_THROW(evaluate(x(5, 1, 2), m), InputError);
}
