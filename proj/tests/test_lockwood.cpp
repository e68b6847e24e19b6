#include "oracles.hpp"
#include "vertalign/alignment.hpp"
#include "vertalign/combinatorics.hpp"
#include "vertalign/lockwood.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace vertalign;

namespace {

BivariatePolynomial x_plus_y()
{
    return BivariatePolynomial::monomial(1, 1, 0) + BivariatePolynomial::monomial(1, 0, 1);
}

}  // namespace

TEST(BivariatePolynomial, CanonicalText)
{
    EXPECT_EQ(binomial_expand(2).to_string(), "x^2 + 2*x*y + y^2");
    EXPECT_EQ(binomial_expand(0).to_string(), "1");
    EXPECT_EQ(BivariatePolynomial{}.to_string(), "0");
    EXPECT_EQ((BivariatePolynomial::monomial(-3, 0, 2) + BivariatePolynomial::monomial(1, 3, 0)).to_string(),
              "x^3 - 3*y^2");
    EXPECT_EQ(power_sum(11).to_string(), "x^11 + y^11");
}

TEST(BivariatePolynomial, NeverStoresZero)
{
    auto p = x_plus_y();
    p -= BivariatePolynomial::monomial(1, 1, 0);
    EXPECT_EQ(p.size(), 1U);
    p -= BivariatePolynomial::monomial(1, 0, 1);
    EXPECT_TRUE(p.is_zero());
    const auto q = x_plus_y() * (BivariatePolynomial::monomial(1, 1, 0) - BivariatePolynomial::monomial(1, 0, 1));
    EXPECT_EQ(q.to_string(), "x^2 - y^2");
    for (const auto& [m, c] : q.terms())
        EXPECT_FALSE(c.is_zero());
    EXPECT_TRUE(x_plus_y().scaled(0, 3, 3).is_zero());
}

TEST(BinomialExpand, Coefficients)
{
    EXPECT_EQ(binomial_expand(12).coefficient(6, 6), ExactInt(924));
    EXPECT_EQ(binomial_expand(0), BivariatePolynomial::constant(1));
    EXPECT_THROW(binomial_expand(-1), std::invalid_argument);

    // Repeated multiplication by (x + y), independent of binomial().
    BivariatePolynomial p = BivariatePolynomial::constant(1);
    for (std::int64_t n = 0; n <= 60; ++n) {
        ASSERT_EQ(binomial_expand(n), p) << n;
        p = p * x_plus_y();
    }
}

TEST(LockwoodRhs, SmallCases)
{
    EXPECT_EQ(lockwood_rhs(2), power_sum(2));
    EXPECT_EQ(lockwood_rhs(2).to_string(), "x^2 + y^2");
    EXPECT_THROW(lockwood_rhs(0), std::invalid_argument);

    // 1*(x+y)^5 - 5*xy*(x+y)^3 + 5*(xy)^2*(x+y), written out term by term.
    const auto xy = BivariatePolynomial::monomial(1, 1, 1);
    const auto s = x_plus_y();
    const auto by_hand = s * s * s * s * s - (xy * s * s * s).scaled(5) + (xy * xy * s).scaled(5);
    EXPECT_EQ(by_hand, power_sum(5));
    EXPECT_EQ(lockwood_rhs(5), by_hand);
    EXPECT_EQ(lockwood_rhs(11).to_string(), "x^11 + y^11");
}

TEST(LockwoodRhs, InteriorCancellationIsTheWorkedExample)
{
    // Coefficient of x^8 y^3 in each summand for n = 11: 165, -11*36, 44*7, -77*1.
    const std::vector<long> expected{165, -396, 308, -77};
    for (std::int64_t k = 0; k <= 3; ++k)
        EXPECT_EQ(lockwood_summand(11, k).coefficient(8, 3), ExactInt(expected[static_cast<std::size_t>(k)]));
    EXPECT_EQ(lockwood_rhs(11).coefficient(8, 3), ExactInt(0));
}

TEST(VerifyLockwood, HoldsThroughTwoHundred)
{
    EXPECT_TRUE(verify_lockwood(1));
    EXPECT_EQ(lockwood_rhs(1).to_string(), "x + y");
    EXPECT_TRUE(verify_lockwood(6));
    for (std::int64_t n = 1; n <= 200; ++n)
        ASSERT_TRUE(verify_lockwood(n)) << n;
    const auto c = check_lockwood(9);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.rhs, power_sum(9));
}

TEST(TermCoefficient, Values)
{
    EXPECT_EQ(term_coefficient(11, 1, 3), ExactInt(36));
    EXPECT_EQ(term_coefficient(12, 6, 6), ExactInt(1));
    for (std::int64_t i = 0; i <= 9; ++i)
        EXPECT_EQ(term_coefficient(9, 0, i), binomial(9, i));
    EXPECT_THROW(term_coefficient(5, 3, 1), std::invalid_argument);
    EXPECT_THROW(term_coefficient(5, 1, 6), std::invalid_argument);
    EXPECT_THROW(term_coefficient(0, 0, 0), std::invalid_argument);
}

TEST(TermCoefficient, MatchesBinomialForAllSmallN)
{
    for (std::int64_t n = 1; n <= 60; ++n)
        for (std::int64_t k = 0; 2 * k <= n; ++k) {
            const auto row = term_coefficient_row(n, k);
            for (std::int64_t i = 0; i <= n; ++i)
                ASSERT_EQ(row[static_cast<std::size_t>(i)], binomial(n - 2 * k, i - k)) << n << " " << k << " " << i;
        }
}

TEST(CoefficientMatching, SummandsReproduceIdentityTerms)
{
    // For each k, the x^(n-i) y^i coefficient of the k-th Lockwood summand is
    // exactly the k-th product in the identity report.
    for (std::int64_t n = 2; n <= 60; ++n) {
        std::vector<BivariatePolynomial> summands;
        for (std::int64_t k = 0; 2 * k <= n; ++k)
            summands.push_back(lockwood_summand(n, k));
        const BivariatePolynomial interior = binomial_expand(n) - power_sum(n);
        const BivariatePolynomial tail = lockwood_rhs(n, 1);
        for (std::int64_t i = 1; i < n; ++i) {
            const auto xe = static_cast<std::uint32_t>(n - i);
            const auto ye = static_cast<std::uint32_t>(i);
            ASSERT_TRUE((interior.coefficient(xe, ye) + tail.coefficient(xe, ye)).is_zero()) << n << " " << i;
            const auto rep = identity_sum(n, i);
            ExactInt total = 0;
            for (const auto& t : rep.terms) {
                const ExactInt expected = 2 * t.k <= n ? summands[static_cast<std::size_t>(t.k)].coefficient(xe, ye)
                                                       : ExactInt(0);
                ASSERT_EQ(t.product, expected) << n << " " << i << " " << t.k;
                total += expected;
            }
            ASSERT_EQ(total, rep.total);
        }
    }
}
