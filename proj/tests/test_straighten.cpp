#include <gtest/gtest.h>

#include <random>

#include "pfshuffle/errors.hpp"
#include "pfshuffle/pfaffian.hpp"
#include "pfshuffle/straighten.hpp"
#include "test_support.hpp"

using namespace pfshuffle;

namespace {

bool all_standard(const FormalQuadratic& f) {
    for (const auto& [key, c] : f.terms()) {
        if (!key.is_standard()) return false;
    }
    return true;
}

SparsePoly pair_pf(const Row& a, const Row& b, PfaffianContext& ctx) { return ctx.pf_row(a) * ctx.pf_row(b); }

} // namespace

TEST(Straighten, Examples) {
    const Straightener s(4);
    const auto standard = s.straighten_pair(Row{1, 2}, Row{3, 4});
    EXPECT_EQ(standard.steps, 0u);
    EXPECT_EQ(standard.expansion, parse_formal_quadratic("x(12/34)", 4));

    const auto a = s.straighten_pair(Row{2, 3}, Row{1, 4});
    EXPECT_EQ(a.expansion, parse_formal_quadratic("x(1234/∅) - x(12/34) + x(13/24)", 4));
    EXPECT_EQ(a.steps, 2u);

    const Straightener s3(3);
    EXPECT_EQ(s3.straighten_pair(Row{2, 3}, Row{1}).expansion, parse_formal_quadratic("x(13/2) - x(12/3) + x(123/∅)", 3));
    EXPECT_TRUE(s3.straighten_pair(Row{2, 2}, Row{1}).expansion.is_zero());
    EXPECT_EQ(s3.straighten_pair(Row{3, 2}, Row{1}).expansion, Integer(-1) * s3.straighten_pair(Row{2, 3}, Row{1}).expansion);
}

TEST(Straighten, DegreeTwoCensus) {
    for (int n = 1; n <= 4; ++n) {
        PfaffianContext ctx(n);
        const Straightener canonical(n);
        const auto rows = standard_rows(n);
        std::size_t seed = 0;
        for (const Row& a : rows) {
            for (const Row& b : rows) {
                const auto result = canonical.straighten_pair(a, b);
                EXPECT_TRUE(all_standard(result.expansion));
                EXPECT_EQ(pfaffian_substitute(result.expansion, ctx), pair_pf(a, b, ctx));
                if (comparable(a, b)) {
                    FormalQuadratic self;
                    self.add(a, b, 1);
                    EXPECT_EQ(result.expansion, self);
                    EXPECT_EQ(result.steps, 0u);
                }
                const Straightener random(n, {1'000'000, ReductionOrder::randomized, ++seed});
                EXPECT_EQ(random.straighten_pair(a, b).expansion, result.expansion);
            }
        }
    }
}

// For incomparable rows every standard term (H / K) of the expansion should
// have H below both rows and K above both; recorded, not assumed.
TEST(Straighten, ExpansionTermsLieBetweenTheRows) {
    for (int n = 2; n <= 4; ++n) {
        const Straightener s(n);
        const auto rows = standard_rows(n);
        for (const Row& a : rows) {
            for (const Row& b : rows) {
                if (comparable(a, b)) continue;
                const FormalQuadratic expansion = s.straighten_pair(a, b).expansion;
                for (const auto& [key, c] : expansion.terms()) {
                    EXPECT_TRUE(row_leq(key.first, a) && row_leq(key.first, b)) << format_row(a, n) << "," << format_row(b, n);
                    EXPECT_TRUE(row_leq(a, key.second) && row_leq(b, key.second)) << format_row(a, n) << "," << format_row(b, n);
                }
            }
        }
    }
}

TEST(Straighten, RandomDegreeThree) {
    const int n = 4;
    PfaffianContext ctx(n);
    const Straightener canonical(n);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Row> rows;
        for (int k = 0; k < 3; ++k) rows.push_back(pfshuffle::testing::random_standard_row(n, rng));
        const auto result = canonical.straighten_monomial(rows);
        for (const auto& [mono, c] : result.expansion) {
            EXPECT_TRUE(is_standard_monomial(mono));
            EXPECT_NE(c, 0);
        }
        EXPECT_EQ(expansion_pf(result.expansion, ctx), monomial_pf(rows, ctx));
        const Straightener random(n, {1'000'000, ReductionOrder::randomized, static_cast<std::uint64_t>(trial)});
        EXPECT_EQ(random.straighten_monomial(rows).expansion, result.expansion);
    }
}

TEST(Straighten, Idempotent) {
    const int n = 4;
    const Straightener s(n);
    const auto rows = standard_rows(n);
    for (const Row& a : rows) {
        for (const Row& b : rows) {
            const FormalQuadratic once = s.straighten_pair(a, b).expansion;
            EXPECT_EQ(s.straighten(once).expansion, once);
            EXPECT_EQ(s.straighten(once).steps, 0u);
        }
    }
}

TEST(Straighten, MonomialHelpers) {
    const auto c = canonical_monomial({Row{4}, Row{2, 1}, Row{1, 2, 3}});
    ASSERT_TRUE(c);
    EXPECT_EQ(c->first, (std::vector<Row>{Row{1, 2, 3}, Row{1, 2}, Row{4}}));
    EXPECT_EQ(c->second, -1);
    EXPECT_FALSE(canonical_monomial({Row{1, 1}}));
    EXPECT_TRUE(is_standard_monomial({Row{1, 2, 3}, Row{1, 2}, Row{4}}));
    EXPECT_FALSE(is_standard_monomial({Row{2, 3}, Row{1, 4}}));

    const Straightener s(4);
    const auto r = s.straighten_monomial({Row{2, 3}, Row{1, 4}});
    EXPECT_EQ(to_string(r.expansion, 4), "x(1234/∅) - x(12/34) + x(13/24)");
    EXPECT_EQ(monomial_expansion_from_json(monomial_expansion_to_json(r.expansion)), r.expansion);
    EXPECT_EQ(to_monomial_expansion(s.straighten_pair(Row{2, 3}, Row{1, 4}).expansion), r.expansion);
    EXPECT_EQ(to_string(MonomialExpansion{}, 4), "0");
    EXPECT_THROW(s.straighten_monomial({}), InputError);
}

TEST(Straighten, BudgetExhaustionReportsState) {
    const Straightener s(4, {1, ReductionOrder::canonical, 0});
    try {
        (void)s.straighten_pair(Row{2, 3}, Row{1, 4});
        FAIL() << "expected StraighteningError";
    } catch (const StraighteningError& e) {
        EXPECT_FALSE(e.tableau().empty());
        EXPECT_FALSE(std::string(e.what()).empty());
    }
    const Straightener roomy(5);
    EXPECT_NO_THROW((void)roomy.straighten_monomial({Row{2, 3}, Row{1, 4}, Row{3, 5}, Row{2}}));
    EXPECT_GT(roomy.memo_size(), 0u);
}
