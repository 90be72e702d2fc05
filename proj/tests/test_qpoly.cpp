#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "pfshuffle/combinatorics.hpp"
#include "pfshuffle/errors.hpp"
#include "pfshuffle/qpoly.hpp"
#include "test_support.hpp"

using namespace pfshuffle;

namespace {

QPoly one_minus_q_power(int e) { return QPoly::constant(1) - QPoly::monomial(1, e); }

// The defining quotient, computed by exact division.
QPoly gauss_by_division(int m, int k) {
    if (k < 0 || k > m) return {};
    QPoly num = QPoly::constant(1), den = QPoly::constant(1);
    for (int t = 0; t < k; ++t) {
        num *= one_minus_q_power(m - t);
        den *= one_minus_q_power(t + 1);
    }
    auto [quotient, remainder] = num.divmod(den);
    EXPECT_TRUE(remainder.is_zero()) << m << "," << k;
    return quotient;
}

} // namespace

TEST(QPoly, ArithmeticAndText) {
    const QPoly p({1, 1});
    EXPECT_EQ((p * p).to_string(), "1 + 2*q + q^2");
    EXPECT_EQ(QPoly().to_string(), "0");
    EXPECT_EQ(QPoly().degree(), -1);
    EXPECT_EQ((p - p).degree(), -1);
    EXPECT_EQ(QPoly({0, 0, 3, 0, 0}).degree(), 2);
    EXPECT_EQ(p.evaluate(-1), 0);
    EXPECT_EQ((QPoly({2, 0, -1})).to_string(), "2 - q^2");
}

TEST(GaussBinom, Examples) {
    EXPECT_EQ(gauss_binom(5, 0), QPoly::constant(1));
    EXPECT_EQ(gauss_binom(4, 2), QPoly({1, 1, 2, 1, 1}));
    EXPECT_TRUE(gauss_binom(2, 3).is_zero());
    EXPECT_TRUE(gauss_binom(3, -1).is_zero());
    EXPECT_EQ(gauss_binom(4, 2).to_string(), "1 + q + 2*q^2 + q^3 + q^4");
}

TEST(GaussBinom, MatchesDivisionFormula) {
    for (int m = 0; m <= 14; ++m) {
        for (int k = 0; k <= m; ++k) EXPECT_EQ(gauss_binom(m, k), gauss_by_division(m, k)) << m << "," << k;
    }
}

TEST(GaussBinom, SymmetryPascalAndSpecialization) {
    for (int m = 0; m <= 12; ++m) {
        for (int k = 0; k <= m; ++k) {
            EXPECT_EQ(gauss_binom(m, k), gauss_binom(m, m - k));
            EXPECT_EQ(gauss_binom(m, k).evaluate(1), binomial(m, k));
            if (m >= 1) {
                EXPECT_EQ(gauss_binom(m, k), gauss_binom(m - 1, k - 1) + gauss_binom(m - 1, k).shifted(k));
            }
        }
    }
}

TEST(GaussBinom, ValueAtMinusOne) {
    EXPECT_EQ(gauss_binom_at_minus1(3, 1), 1);
    EXPECT_EQ(gauss_binom_at_minus1(4, 1), 0);
    EXPECT_EQ(gauss_binom_at_minus1(2, 0), 1);
    EXPECT_EQ(gauss_binom_at_minus1(2, 3), 0);
    for (int m = 0; m <= 16; ++m) {
        for (int k = 0; k <= m; ++k) {
            EXPECT_EQ(gauss_binom_at_minus1(m, k), gauss_binom(m, k).evaluate(-1)) << m << "," << k;
        }
    }
}

TEST(AlternatingIdentity, VanishesInRange) {
    EXPECT_TRUE(check_alternating_identity(1, 1));
    EXPECT_TRUE(check_alternating_identity(5, 3));
    EXPECT_TRUE(check_alternating_identity(12, 12));
    for (int m = 1; m <= 10; ++m) {
        for (int s = 1; s <= m; ++s) EXPECT_TRUE(alternating_sum(m, s).is_zero());
    }
    EXPECT_THROW(check_alternating_identity(3, 0), InputError);
    EXPECT_THROW(check_alternating_identity(3, 4), InputError);
}

// Sum of q^inv over the k-subsets S of an ordered m-set, inv counted between
// S and its complement, is [m, k]_q; at q = -1 the sum of signs of the
// shuffles S (complement) is [m, k]_{-1}.
TEST(PoincareIdentity, ShuffleSignsSumToGaussianAtMinusOne) {
    for (int m = 0; m <= 9; ++m) {
        for (int k = 0; k <= m; ++k) {
            std::vector<Integer> counts(static_cast<std::size_t>(k * (m - k) + 1), Integer(0));
            Integer signed_sum = 0;
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                if (__builtin_popcount(mask) != k) continue;
                std::vector<int> shuffle;
                for (int v = 0; v < m; ++v) {
                    if (mask & (1u << v)) shuffle.push_back(v + 1);
                }
                for (int v = 0; v < m; ++v) {
                    if (!(mask & (1u << v))) shuffle.push_back(v + 1);
                }
                int inv = 0;
                for (std::size_t a = 0; a < shuffle.size(); ++a) {
                    for (std::size_t b = a + 1; b < shuffle.size(); ++b) inv += shuffle[a] > shuffle[b];
                }
                counts[static_cast<std::size_t>(inv)] += 1;
                signed_sum += pfshuffle::testing::brute_inversion_sign(shuffle);
            }
            EXPECT_EQ(QPoly(counts), gauss_binom(m, k));
            EXPECT_EQ(signed_sum, gauss_binom_at_minus1(m, k));
        }
    }
}
