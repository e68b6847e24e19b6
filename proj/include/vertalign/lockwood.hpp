#pragma once

// Brute-force route to the alignment identity: expand x^n + y^n through
// Lockwood's identity in Z[x, y] and read off the x^(n-i) y^i coefficients.
// Powers of (x + y) come from repeated multiplication, never from binomial().

#include "vertalign/combinatorics.hpp"
#include "vertalign/exact.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vertalign {

struct Monomial {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    std::uint32_t degree() const noexcept { return x + y; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic, x > y, largest first.
struct GradedLexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept
    {
        if (a.degree() != b.degree())
            return a.degree() > b.degree();
        return a.x > b.x;
    }
};

class BivariatePolynomial {
public:
    using Terms = std::map<Monomial, ExactInt, GradedLexDescending>;

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const ExactInt& c) { return monomial(c, 0, 0); }

    static BivariatePolynomial monomial(const ExactInt& c, std::uint32_t x_exp, std::uint32_t y_exp)
    {
        BivariatePolynomial p;
        p.add_term({x_exp, y_exp}, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    ExactInt coefficient(std::uint32_t x_exp, std::uint32_t y_exp) const
    {
        auto it = terms_.find({x_exp, y_exp});
        return it == terms_.end() ? ExactInt(0) : it->second;
    }

    void add_term(const Monomial& m, const ExactInt& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    BivariatePolynomial& operator-=(const BivariatePolynomial& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    BivariatePolynomial operator-() const
    {
        BivariatePolynomial r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    /// Multiplies by c * x^dx * y^dy.
    BivariatePolynomial scaled(const ExactInt& c, std::uint32_t dx = 0, std::uint32_t dy = 0) const
    {
        BivariatePolynomial r;
        if (c.is_zero())
            return r;
        for (const auto& [m, v] : terms_)
            r.terms_.emplace(Monomial{m.x + dx, m.y + dy}, v * c);
        return r;
    }

    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b)
    {
        BivariatePolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
        return r;
    }

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b)
    {
        return a.terms_ == b.terms_;
    }

    /// Canonical text: graded-lex terms, e.g. "x^2 + 2*x*y + y^2", "0" when empty.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool neg = c.sign() < 0;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;

            const ExactInt mag = abs(c);
            std::string mono;
            auto push = [&mono](char var, std::uint32_t e) {
                if (e == 0)
                    return;
                if (!mono.empty())
                    mono += '*';
                mono += var;
                if (e > 1)
                    mono += '^' + std::to_string(e);
            };
            push('x', m.x);
            push('y', m.y);
            if (mono.empty())
                out += mag.to_string();
            else if (mag == ExactInt(1))
                out += mono;
            else
                out += mag.to_string() + '*' + mono;
        }
        return out;
    }

private:
    Terms terms_;  // never holds a zero coefficient
};

namespace detail {

/// (x + y)^0 .. (x + y)^m by repeated multiplication.
inline std::vector<BivariatePolynomial> sum_powers(std::uint32_t m)
{
    const BivariatePolynomial x_plus_y =
        BivariatePolynomial::monomial(1, 1, 0) + BivariatePolynomial::monomial(1, 0, 1);
    std::vector<BivariatePolynomial> out;
    out.reserve(m + 1);
    out.push_back(BivariatePolynomial::constant(1));
    for (std::uint32_t e = 1; e <= m; ++e)
        out.push_back(out.back() * x_plus_y);
    return out;
}

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

}  // namespace detail

/// Sum_i C(n, i) x^(n-i) y^i, filled directly from binomial().
inline BivariatePolynomial binomial_expand(std::int64_t n)
{
    detail::require(n >= 0, "binomial_expand needs n >= 0, got " + std::to_string(n));
    BivariatePolynomial p;
    for (std::int64_t i = 0; i <= n; ++i)
        p.add_term({static_cast<std::uint32_t>(n - i), static_cast<std::uint32_t>(i)}, binomial(n, i));
    return p;
}

/// The k-th summand (-1)^k T(n,k) (xy)^k (x+y)^(n-2k), expanded.
inline BivariatePolynomial lockwood_summand(std::int64_t n, std::int64_t k)
{
    detail::require(n >= 1 && k >= 0 && 2 * k <= n,
                    "lockwood_summand needs n >= 1, 0 <= k <= n/2, got n = " + std::to_string(n) +
                        ", k = " + std::to_string(k));
    ExactInt coeff = lucas_coeff(n, k);
    if (k % 2 != 0)
        coeff = -coeff;
    const auto m = static_cast<std::uint32_t>(n - 2 * k);
    const auto kk = static_cast<std::uint32_t>(k);
    return detail::sum_powers(m).back().scaled(coeff, kk, kk);
}

/// Expanded right side of Lockwood's identity, over k = k_first .. floor(n/2).
///
/// k_first = 0 gives the full sum (which must equal x^n + y^n); k_first = 1
/// gives the tail that cancels the interior of the binomial expansion.
inline BivariatePolynomial lockwood_rhs(std::int64_t n, std::int64_t k_first = 0)
{
    detail::require(n >= 1, "lockwood_rhs needs n >= 1, got " + std::to_string(n));
    detail::require(k_first >= 0, "lockwood_rhs needs k_first >= 0");
    const auto powers = detail::sum_powers(static_cast<std::uint32_t>(n));
    BivariatePolynomial acc;
    for (std::int64_t k = k_first; 2 * k <= n; ++k) {
        ExactInt coeff = lucas_coeff(n, k);
        if (k % 2 != 0)
            coeff = -coeff;
        const auto kk = static_cast<std::uint32_t>(k);
        acc += powers[static_cast<std::size_t>(n - 2 * k)].scaled(coeff, kk, kk);
    }
    return acc;
}

/// Coefficients of x^(n-i) y^i, i = 0..n, in the expanded (xy)^k (x+y)^(n-2k).
inline std::vector<ExactInt> term_coefficient_row(std::int64_t n, std::int64_t k)
{
    detail::require(n >= 1 && k >= 0 && 2 * k <= n,
                    "term_coefficient needs n >= 1, 0 <= k <= n/2, got n = " + std::to_string(n) +
                        ", k = " + std::to_string(k));
    const auto kk = static_cast<std::uint32_t>(k);
    const BivariatePolynomial expanded =
        detail::sum_powers(static_cast<std::uint32_t>(n - 2 * k)).back().scaled(1, kk, kk);
    std::vector<ExactInt> row;
    row.reserve(static_cast<std::size_t>(n + 1));
    for (std::int64_t i = 0; i <= n; ++i)
        row.push_back(expanded.coefficient(static_cast<std::uint32_t>(n - i), static_cast<std::uint32_t>(i)));
    return row;
}

inline ExactInt term_coefficient(std::int64_t n, std::int64_t k, std::int64_t i)
{
    detail::require(i >= 0 && i <= n, "term_coefficient needs 0 <= i <= n, got i = " + std::to_string(i));
    return term_coefficient_row(n, k)[static_cast<std::size_t>(i)];
}

/// x^n + y^n.
inline BivariatePolynomial power_sum(std::int64_t n)
{
    detail::require(n >= 1, "power_sum needs n >= 1");
    const auto e = static_cast<std::uint32_t>(n);
    return BivariatePolynomial::monomial(1, e, 0) + BivariatePolynomial::monomial(1, 0, e);
}

inline bool verify_lockwood(std::int64_t n)
{
    return lockwood_rhs(n) == power_sum(n);
}

struct LockwoodCheck {
    std::int64_t n = 0;
    bool holds = false;
    BivariatePolynomial rhs;
};

inline LockwoodCheck check_lockwood(std::int64_t n)
{
    BivariatePolynomial rhs = lockwood_rhs(n);
    const bool holds = rhs == power_sum(n);
    return {n, holds, std::move(rhs)};
}

}  // namespace vertalign
