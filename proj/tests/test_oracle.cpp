#include <gtest/gtest.h>

#include "pfshuffle/errors.hpp"
#include "pfshuffle/oracle.hpp"
#include "pfshuffle/pfaffian.hpp"
#include "pfshuffle/qpoly.hpp"
#include "pfshuffle/shuffle.hpp"
#include "test_support.hpp"

using namespace pfshuffle;

namespace {

// Dense rational copy of the relation matrix.
std::vector<std::vector<Rational>> dense(const RelationMatrix& m) {
    std::vector<std::vector<Rational>> out(m.row_count(), std::vector<Rational>(m.column_count()));
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        for (const auto& [col, v] : m.rows[r]) out[r][col] = Rational(v);
    }
    return out;
}

} // namespace

TEST(Oracle, MatrixShape) {
    const std::vector<std::size_t> rows{3, 10, 36, 136};
    for (int n = 1; n <= 4; ++n) {
        PfaffianContext ctx(n);
        const RelationMatrix m = build_relation_matrix(n, ctx);
        EXPECT_EQ(m.row_count(), rows[static_cast<std::size_t>(n - 1)]);
        EXPECT_EQ(m.row_count(), pair_count(n));
        std::size_t in_blocks = 0;
        for (const auto& block : m.blocks) in_blocks += block.size();
        EXPECT_EQ(in_blocks, m.row_count());
        for (std::size_t i = 0; i < m.row_count(); ++i) EXPECT_EQ(m.index_of(m.pairs[i]), i);
    }
}

TEST(Oracle, RankAgreesWithRationalElimination) {
    for (int n = 1; n <= 4; ++n) {
        PfaffianContext ctx(n);
        const RelationMatrix m = build_relation_matrix(n, ctx);
        EXPECT_EQ(matrix_rank(m), pfshuffle::testing::rational_rank(dense(m))) << n;
    }
    EXPECT_EQ(bareiss_rank({{1, 2}, {2, 4}}), 1u);
    EXPECT_EQ(bareiss_rank({{0, 0}, {0, 0}}), 0u);
    EXPECT_EQ(bareiss_rank({{0, 3}, {5, 0}, {1, 1}}), 2u);
}

TEST(Oracle, KernelAtLowRank) {
    PfaffianContext ctx2(2);
    EXPECT_TRUE(kernel_basis(build_relation_matrix(2, ctx2)).empty());

    PfaffianContext ctx3(3);
    const RelationMatrix m3 = build_relation_matrix(3, ctx3);
    const auto kernel = kernel_basis(m3);
    ASSERT_EQ(kernel.size(), 1u);
    const FormalQuadratic expected = parse_formal_quadratic("x(23/1) - x(13/2) + x(12/3) - x(123/∅)", 3);
    EXPECT_TRUE(kernel[0] == expected || kernel[0] == Integer(-1) * expected) << kernel[0].to_string(3);
    EXPECT_TRUE(in_kernel(m3, expected));
    EXPECT_FALSE(in_kernel(m3, parse_formal_quadratic("x(12/3)", 3)));
}

TEST(Oracle, KernelDimensions) {
    const std::vector<std::size_t> dims{0, 0, 1, 10, 66};
    for (int n = 1; n <= 5; ++n) {
        PfaffianContext ctx(n);
        const RelationMatrix m = build_relation_matrix(n, ctx);
        const auto kernel = kernel_basis(m);
        EXPECT_EQ(kernel.size(), dims[static_cast<std::size_t>(n - 1)]) << n;
        EXPECT_EQ(matrix_rank(m) + kernel.size(), m.row_count());
        EXPECT_EQ(family_rank(m, kernel), kernel.size());
        EXPECT_EQ(count_standard_pairs(n) + kernel.size(), pair_count(n));
        EXPECT_EQ(pair_count(n), binomial((1 << n) + 1, 2));
        for (const FormalQuadratic& v : kernel) EXPECT_TRUE(pfaffian_substitute(v, ctx).is_zero());
    }
}

TEST(Oracle, RelationsSpanKernel) {
    for (int n = 2; n <= 4; ++n) {
        PfaffianContext ctx(n);
        const SpanReport r = span_equals_kernel(n, ctx);
        EXPECT_TRUE(r.all_theta_vanish);
        EXPECT_TRUE(r.span_ok);
        EXPECT_EQ(r.theta_rank, r.kernel_dim);
        EXPECT_EQ(r.rank + r.kernel_dim, r.pairs);
        const nlohmann::json j = r;
        EXPECT_EQ(j.at("kernel_dim").get<std::size_t>(), r.kernel_dim);
    }
    PfaffianContext ctx4(4);
    const SpanReport r4 = span_equals_kernel(4, ctx4);
    EXPECT_EQ(r4.theta_count, 37u);
    EXPECT_EQ(r4.kernel_dim, 10u);
}

TEST(Oracle, StandardMonomialsIndependent) {
    for (int n = 1; n <= 4; ++n) {
        PfaffianContext ctx(n);
        const IndependenceReport one = standard_monomial_independence(n, 1, ctx);
        EXPECT_TRUE(one.independent);
        EXPECT_EQ(one.count, std::size_t{1} << n);
        const IndependenceReport two = standard_monomial_independence(n, 2, ctx);
        EXPECT_TRUE(two.independent);
        EXPECT_TRUE(two.count_ok);
        EXPECT_EQ(two.count + two.kernel_dim, two.total);
        EXPECT_EQ(two.rank, two.count);
    }
    PfaffianContext ctx(3);
    EXPECT_EQ(standard_monomial_independence(3, 2, ctx).count, 35u);
    EXPECT_THROW(standard_monomial_independence(3, 3, ctx), InputError);
}

TEST(Oracle, RefusesLargeRankWithoutOverride) {
    PfaffianContext ctx(6);
    EXPECT_THROW(build_relation_matrix(6, ctx), InputError);
    EXPECT_THROW(build_relation_matrix(3, ctx), InputError);
}

TEST(Oracle, ThreadCountDoesNotChangeMatrix) {
    PfaffianContext a(4), b(4);
    const RelationMatrix one = build_relation_matrix(4, a, {5, false, 1});
    const RelationMatrix four = build_relation_matrix(4, b, {5, false, 4});
    EXPECT_EQ(one.pairs, four.pairs);
    EXPECT_EQ(one.columns, four.columns);
    EXPECT_EQ(one.rows, four.rows);
    EXPECT_EQ(kernel_basis(one), kernel_basis(four));
}
