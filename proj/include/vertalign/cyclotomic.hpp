#pragma once

#include "vertalign/exact.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vertalign {

/// Dense univariate integer polynomial in z, lowest degree first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<ExactInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// c * z^e.
    static IntPolynomial monomial(const ExactInt& c, std::size_t e)
    {
        std::vector<ExactInt> v(e + 1, ExactInt(0));
        v[e] = c;
        return IntPolynomial(std::move(v));
    }

    const std::vector<ExactInt>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    const ExactInt& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == ExactInt(1); }

    ExactInt operator[](std::size_t e) const { return e < c_.size() ? c_[e] : ExactInt(0); }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
    {
        std::vector<ExactInt> v(std::max(a.c_.size(), b.c_.size()), ExactInt(0));
        for (std::size_t e = 0; e < v.size(); ++e)
            v[e] = a[e] + b[e];
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
    {
        std::vector<ExactInt> v(std::max(a.c_.size(), b.c_.size()), ExactInt(0));
        for (std::size_t e = 0; e < v.size(); ++e)
            v[e] = a[e] - b[e];
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<ExactInt> v(a.c_.size() + b.c_.size() - 1, ExactInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(v));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Quotient and remainder by a monic divisor.
    friend std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& num, const IntPolynomial& den)
    {
        if (!den.is_monic())
            throw std::invalid_argument("divmod needs a monic divisor");
        std::vector<ExactInt> rem = num.c_;
        const std::size_t dd = den.c_.size() - 1;
        if (rem.size() <= dd)
            return {IntPolynomial{}, num};
        std::vector<ExactInt> quo(rem.size() - dd, ExactInt(0));
        for (std::size_t top = rem.size(); top-- > dd;) {
            const ExactInt q = rem[top];
            if (q.is_zero())
                continue;
            const std::size_t shift = top - dd;
            quo[shift] = q;
            for (std::size_t j = 0; j <= dd; ++j)
                rem[shift + j] -= q * den.c_[j];
        }
        return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
    }

    std::string to_string(char var = 'z') const
    {
        if (c_.empty())
            return "0";
        std::string out;
        for (std::size_t e = c_.size(); e-- > 0;) {
            const ExactInt& c = c_[e];
            if (c.is_zero())
                continue;
            const bool neg = c.sign() < 0;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const ExactInt mag = abs(c);
            const bool unit = mag == ExactInt(1);
            if (e == 0) {
                out += mag.to_string();
                continue;
            }
            if (!unit)
                out += mag.to_string() + '*';
            out += var;
            if (e > 1)
                out += '^' + std::to_string(e);
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<ExactInt> c_;
};

/// Distinct prime factors by trial division.
inline std::vector<std::int64_t> prime_factors(std::int64_t n)
{
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        ps.push_back(p);
        while (n % p == 0)
            n /= p;
    }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

inline std::int64_t euler_totient(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("euler_totient needs n >= 1");
    std::int64_t phi = n;
    for (std::int64_t p : prime_factors(n))
        phi = phi / p * (p - 1);
    return phi;
}

inline std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> ds;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            ds.push_back(d);
    return ds;
}

/// z^n - 1.
inline IntPolynomial unity_polynomial(std::int64_t n)
{
    return IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial::monomial(1, 0);
}

/// The g-th cyclotomic polynomial, by exact division of z^g - 1 by
/// Phi_d for the proper divisors d of g (built bottom-up over the divisors).
inline IntPolynomial cyclotomic(std::int64_t g)
{
    if (g < 1)
        throw std::invalid_argument("cyclotomic needs g >= 1, got " + std::to_string(g));
    std::map<std::int64_t, IntPolynomial> phi;
    const auto ds = divisors(g);
    for (std::int64_t d : ds) {
        IntPolynomial q = unity_polynomial(d);
        for (std::int64_t e : ds) {
            if (e >= d)
                break;
            if (d % e != 0)
                continue;
            auto [quo, rem] = divmod(q, phi.at(e));
            if (!rem.is_zero())
                throw std::logic_error("cyclotomic: inexact division at d = " + std::to_string(d));
            q = std::move(quo);
        }
        phi.emplace(d, std::move(q));
    }
    return phi.at(g);
}

}  // namespace vertalign
