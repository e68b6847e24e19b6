#pragma once

#include "vertalign/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vertalign {

namespace detail {

inline ExactInt from_int128(__int128 v)
{
    const bool neg = v < 0;
    const unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class r(static_cast<unsigned long>(mag >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(mag & ~static_cast<std::uint64_t>(0));
    if (neg)
        r = -r;
    return ExactInt(r);
}

}  // namespace detail

/// Generalized binomial coefficient C(m, r).
///
/// Zero for r < 0; otherwise the falling-factorial product
/// m(m-1)...(m-r+1) / r!, accumulated with an exact division by j at step j.
/// The upper index may be negative, in which case the product is nonzero.
inline ExactInt binomial(std::int64_t m, std::int64_t r)
{
    if (r < 0)
        return 0;
    if (m >= 0) {
        if (r > m)
            return 0;
        if (r > m - r)
            r = m - r;
    }
    // Each partial value is C(m, j), an integer, so the division is exact.
    // Stay in 128-bit arithmetic until the value reaches 2^62.
    constexpr __int128 kNativeLimit = static_cast<__int128>(1) << 62;
    __int128 small = 1;
    std::int64_t j = 1;
    for (; j <= r && small < kNativeLimit && small > -kNativeLimit; ++j)
        small = small * (m - j + 1) / j;
    ExactInt acc = detail::from_int128(small);
    for (; j <= r; ++j) {
        acc *= ExactInt(static_cast<long>(m - j + 1));
        acc.divide_exact(ExactInt(static_cast<long>(j)));
    }
    return acc;
}

namespace detail {

inline void check_lucas_domain(std::int64_t n, std::int64_t k)
{
    if (n < 1)
        throw std::invalid_argument("Lucas coefficient needs n >= 1, got n = " + std::to_string(n));
    if (k < 0 || k >= n)
        throw std::invalid_argument("Lucas coefficient needs 0 <= k < n, got n = " + std::to_string(n) +
                                    ", k = " + std::to_string(k));
}

}  // namespace detail

/// n/(n-k) * C(n-k, k) as an exact rational, before integrality is checked.
inline ExactRational lucas_coeff_rational(std::int64_t n, std::int64_t k)
{
    detail::check_lucas_domain(n, k);
    ExactRational factor(ExactInt(static_cast<long>(n)), ExactInt(static_cast<long>(n - k)));
    return factor * ExactRational(binomial(n - k, k));
}

/// Coefficient T(n, k) of the Lucas (Cardan) polynomial triangle.
inline ExactInt lucas_coeff(std::int64_t n, std::int64_t k)
{
    ExactRational q = lucas_coeff_rational(n, k);
    if (!q.is_integer())
        throw std::logic_error("n/(n-k)*C(n-k,k) is not integral at n = " + std::to_string(n) +
                               ", k = " + std::to_string(k) + ": " + q.to_string());
    return q.numerator();
}

/// T(n, k) through C(n-k, k) + C(n-k-1, k-1); integer-only route.
inline ExactInt lucas_coeff_alt(std::int64_t n, std::int64_t k)
{
    detail::check_lucas_domain(n, k);
    return binomial(n - k, k) + binomial(n - k - 1, k - 1);
}

struct LucasRow {
    std::int64_t n = 0;
    std::vector<ExactInt> coefficients;  // k = 0 .. floor(n/2), unsigned

    friend bool operator==(const LucasRow&, const LucasRow&) = default;
};

inline LucasRow lucas_row(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("lucas_row needs n >= 1, got " + std::to_string(n));
    LucasRow row{n, {}};
    row.coefficients.reserve(static_cast<std::size_t>(n / 2 + 1));
    for (std::int64_t k = 0; k <= n / 2; ++k)
        row.coefficients.push_back(lucas_coeff(n, k));
    return row;
}

inline std::vector<ExactInt> pascal_row(std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("pascal_row needs n >= 0, got " + std::to_string(n));
    std::vector<ExactInt> row;
    row.reserve(static_cast<std::size_t>(n + 1));
    for (std::int64_t i = 0; i <= n; ++i)
        row.push_back(binomial(n, i));
    return row;
}

}  // namespace vertalign
