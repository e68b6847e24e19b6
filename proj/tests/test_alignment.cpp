#include "vertalign/alignment.hpp"
#include "vertalign/combinatorics.hpp"
#include "vertalign/lockwood.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

using namespace vertalign;

namespace {

std::vector<long> values(const AlignedColumn& col)
{
    std::vector<long> out;
    for (const auto& e : col.entries)
        out.push_back(e.value.to_long());
    return out;
}

struct ExpectedTerm {
    long coefficient;
    long binomial;
};

void expect_terms(const IdentityReport& rep, const std::vector<ExpectedTerm>& expected)
{
    ASSERT_GE(rep.terms.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_EQ(rep.terms[k].k, static_cast<std::int64_t>(k));
        EXPECT_EQ(rep.terms[k].signed_coefficient, ExactInt(expected[k].coefficient)) << "k = " << k;
        EXPECT_EQ(rep.terms[k].binomial_value, ExactInt(expected[k].binomial)) << "k = " << k;
        EXPECT_EQ(rep.terms[k].product, ExactInt(expected[k].coefficient * expected[k].binomial));
    }
    EXPECT_TRUE(rep.total.is_zero());
    EXPECT_TRUE(rep.holds);
}

}  // namespace

TEST(AlignedEntries, WorkedExamples)
{
    EXPECT_EQ(values(aligned_entries(11, 3)), (std::vector<long>{165, 36, 7, 1}));
    EXPECT_EQ(values(aligned_entries(12, 6)), (std::vector<long>{924, 252, 70, 20, 6, 2, 1}));
    for (std::int64_t n = 0; n <= 10; ++n)
        EXPECT_EQ(values(aligned_entries(n, 0)), (std::vector<long>{1}));
}

TEST(AlignedEntries, RejectsOutOfRow)
{
    EXPECT_THROW(aligned_entries(5, -1), std::invalid_argument);
    EXPECT_THROW(aligned_entries(5, 6), std::invalid_argument);
}

TEST(AlignedEntries, ValuesSitInEarlierRows)
{
    for (std::int64_t n = 0; n <= 40; ++n)
        for (std::int64_t i = 0; i <= n; ++i) {
            const auto col = aligned_entries(n, i);
            ASSERT_EQ(col.entries.size(), static_cast<std::size_t>(std::min(i, n / 2) + 1));
            EXPECT_EQ(col.entries.front().value, binomial(n, i));
            for (const auto& e : col.entries) {
                const auto row = pascal_row(n - 2 * e.k);
                const auto idx = static_cast<std::size_t>(i - e.k);
                ASSERT_EQ(e.value, idx < row.size() ? row[idx] : ExactInt(0)) << n << " " << i << " " << e.k;
            }
        }
}

TEST(IdentitySum, WorkedExamples)
{
    expect_terms(identity_sum(11, 3), {{1, 165}, {-11, 36}, {44, 7}, {-77, 1}});
    expect_terms(identity_sum(12, 6), {{1, 924}, {-12, 252}, {54, 70}, {-112, 20}, {105, 6}, {-36, 2}, {2, 1}});
    expect_terms(identity_sum(5, 2), {{1, 10}, {-5, 3}, {5, 1}});
    expect_terms(identity_sum(2, 1), {{1, 2}, {-2, 1}});
}

TEST(IdentitySum, RejectsOutsideHypothesis)
{
    EXPECT_THROW(identity_sum(11, 0), std::invalid_argument);
    EXPECT_THROW(identity_sum(11, 11), std::invalid_argument);
    EXPECT_THROW(identity_sum(11, -2), std::invalid_argument);
    EXPECT_THROW(identity_sum(1, 1), std::invalid_argument);
    EXPECT_THROW(identity_sum(0, 0), std::invalid_argument);
}

TEST(IdentitySum, ListsEveryTermUpToI)
{
    // n = 11, i = 8: k = 4 has 0 <= n-2k = 3 < i-k = 4.
    const auto rep = identity_sum(11, 8);
    ASSERT_EQ(rep.terms.size(), 9U);
    EXPECT_TRUE(rep.terms[4].binomial_value.is_zero());
    EXPECT_TRUE(rep.holds);
}

TEST(IdentitySum, VanishingTermsHaveKnownCauses)
{
    for (std::int64_t n = 2; n <= 80; ++n)
        for (std::int64_t i = 1; i < n; ++i) {
            const auto rep = identity_sum(n, i);
            ASSERT_TRUE(rep.holds) << n << " " << i;
            ExactInt sum = 0;
            for (const auto& t : rep.terms) {
                sum += t.product;
                ExactInt expected = lucas_coeff(n, t.k);
                if (t.k % 2 != 0)
                    expected = -expected;
                ASSERT_EQ(t.signed_coefficient, expected);
                const std::int64_t top = n - 2 * t.k;
                const std::int64_t bottom = i - t.k;
                if (top >= 0 && top < bottom) {
                    ASSERT_TRUE(t.binomial_value.is_zero()) << n << " " << i << " " << t.k;
                }
                if (top < 0) {
                    ASSERT_TRUE(t.signed_coefficient.is_zero()) << n << " " << i << " " << t.k;
                    // The generalized binomial is nonzero here; the Lucas factor kills the term.
                    ASSERT_FALSE(t.binomial_value.is_zero()) << n << " " << i << " " << t.k;
                }
            }
            ASSERT_EQ(sum, rep.total);
        }
}

TEST(IdentitySum, TailMatchesLockwoodCoefficients)
{
    for (std::int64_t n = 2; n <= 40; ++n) {
        const auto tail = lockwood_rhs(n, 1);
        for (std::int64_t i = 1; i < n; ++i) {
            const auto rep = identity_sum(n, i);
            ExactInt k_ge_1 = 0;
            for (std::size_t k = 1; k < rep.terms.size(); ++k)
                k_ge_1 += rep.terms[k].product;
            const ExactInt c = tail.coefficient(static_cast<std::uint32_t>(n - i), static_cast<std::uint32_t>(i));
            ASSERT_EQ(k_ge_1, c) << n << " " << i;
            ASSERT_EQ(c, -binomial(n, i)) << n << " " << i;
        }
    }
}

TEST(IdentitySweep, Counts)
{
    auto s = identity_sweep(12);
    EXPECT_EQ(s.checked, 66);
    EXPECT_TRUE(s.failures.empty());

    s = identity_sweep(2);
    EXPECT_EQ(s.checked, 1);
    EXPECT_TRUE(s.failures.empty());

    EXPECT_THROW(identity_sweep(1), std::invalid_argument);
}

TEST(IdentitySweep, WorkerCountDoesNotChangeTheReport)
{
    const auto one = identity_sweep(60, 1);
    const auto four = identity_sweep(60, 4);
    EXPECT_EQ(one.checked, 59 * 60 / 2);
    EXPECT_EQ(one.checked, four.checked);
    EXPECT_EQ(one.failures, four.failures);
}
