#pragma once

// Exact scalar types. ExactInt and ExactRational are thin value wrappers over
// GMP's mpz_class / mpq_class; the wrappers exist so that expression templates
// never leak into `auto` and so that the rational invariant (reduced, positive
// denominator) is enforced at every construction site.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vertalign {

class ExactInt {
public:
    ExactInt() = default;
    ExactInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    ExactInt(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit ExactInt(const mpz_class& v) : v_(v) {}

    static ExactInt parse(std::string_view text)
    {
        ExactInt out;
        std::string s(text);
        if (s.empty() || out.v_.set_str(s, 10) != 0)
            throw std::invalid_argument("not an integer literal: '" + s + "'");
        return out;
    }

    const mpz_class& raw() const noexcept { return v_; }

    int sign() const noexcept { return sgn(v_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool fits_long() const noexcept { return v_.fits_slong_p(); }
    long to_long() const
    {
        if (!fits_long())
            throw std::overflow_error("ExactInt does not fit in long");
        return v_.get_si();
    }

    std::string to_string() const { return v_.get_str(10); }

    ExactInt operator-() const { return ExactInt(mpz_class(-v_)); }

    ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
    ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
    ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }

    /// Division that is known to be exact; throws if it is not.
    ExactInt& divide_exact(const ExactInt& d)
    {
        if (d.is_zero())
            throw std::domain_error("division by zero");
        if (!mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()))
            throw std::domain_error("inexact division " + to_string() + " / " + d.to_string());
        mpz_divexact(v_.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
        return *this;
    }

    friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
    friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
    friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }

    friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b)
    {
        return cmp(a.v_, b.v_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

private:
    mpz_class v_;
};

inline ExactInt abs(const ExactInt& v) { return v.sign() < 0 ? -v : v; }

inline ExactInt gcd(const ExactInt& a, const ExactInt& b)
{
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return ExactInt(r);
}

inline ExactInt pow(const ExactInt& base, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), e);
    return ExactInt(r);
}

class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    ExactRational(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const ExactInt& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)

    ExactRational(const ExactInt& num, const ExactInt& den)
    {
        if (den.is_zero())
            throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num.raw(), den.raw());
        v_.canonicalize();
    }

    /// Accepts "p/q" or an integer literal.
    static ExactRational parse(std::string_view text)
    {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return ExactRational(ExactInt::parse(text));
        auto num = ExactInt::parse(text.substr(0, slash));
        auto den = ExactInt::parse(text.substr(slash + 1));
        if (den.is_zero())
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return ExactRational(num, den);
    }

    ExactInt numerator() const { return ExactInt(v_.get_num()); }
    ExactInt denominator() const { return ExactInt(v_.get_den()); }
    bool is_integer() const { return v_.get_den() == 1; }

    int sign() const noexcept { return sgn(v_); }
    bool is_zero() const noexcept { return sign() == 0; }

    std::string to_string() const { return v_.get_str(10); }

    ExactRational operator-() const { return from_raw(mpq_class(-v_)); }

    ExactRational& operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }
    ExactRational& operator/=(const ExactRational& o)
    {
        if (o.is_zero())
            throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b)
    {
        return cmp(a.v_, b.v_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.to_string(); }

private:
    static ExactRational from_raw(mpq_class v)
    {
        ExactRational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

inline ExactRational pow(const ExactRational& base, unsigned long e)
{
    ExactRational r(1);
    ExactRational b = base;
    while (e != 0) {
        if (e & 1UL)
            r *= b;
        e >>= 1;
        if (e != 0)
            b *= b;
    }
    return r;
}

/// The rational r with r^n = q, if one exists (the positive one for even n).
inline std::optional<ExactRational> exact_root(const ExactRational& q, unsigned long n)
{
    if (n == 0)
        throw std::invalid_argument("exact_root needs n >= 1");
    if (q.sign() < 0 && n % 2 == 0)
        return std::nullopt;
    auto int_root = [n](const ExactInt& v) -> std::optional<ExactInt> {
        mpz_class r;
        mpz_class mag = abs(v).raw();
        if (mpz_root(r.get_mpz_t(), mag.get_mpz_t(), n) == 0)
            return std::nullopt;
        return ExactInt(r);
    };
    auto num = int_root(q.numerator());
    auto den = int_root(q.denominator());
    if (!num || !den)
        return std::nullopt;
    ExactRational r(*num, *den);
    return q.sign() < 0 ? -r : r;
}

}  // namespace vertalign

template <>
struct std::hash<vertalign::ExactInt> {
    std::size_t operator()(const vertalign::ExactInt& v) const noexcept
    {
        return std::hash<std::string>{}(v.to_string());
    }
};
