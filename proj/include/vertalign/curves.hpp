#pragma once

// Source curve y^2 = x^(2g+1) + c x, target curves
//   y^2 = sum_k (-1)^k T(g,k) zeta^(ik) c^(k/g) x^(g-2k),
// and the check that substituting x -> (x^2 + zeta^i c^(1/g)) / x and clearing
// x^(g+1) turns the target's right side back into the source's.
//
// Only the y^2 equation is checked. For even g the y-exponent (g+1)/2 is a
// half-integer, so the coordinate map itself is never formed.

#include "vertalign/combinatorics.hpp"
#include "vertalign/exact.hpp"
#include "vertalign/quotient_ring.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vertalign {

/// Univariate polynomial in x over R(g, c), lowest degree first.
class RingPolynomial {
public:
    explicit RingPolynomial(RingHandle spec) : spec_(std::move(spec)) {}

    RingPolynomial(RingHandle spec, std::vector<QuotientRingElement> coeffs)
        : spec_(std::move(spec)), c_(std::move(coeffs))
    {
        for (const auto& e : c_)
            if (!e.spec().same_ring(*spec_))
                throw std::invalid_argument("RingPolynomial coefficient from a different ring");
        trim();
    }

    /// q * x^e.
    static RingPolynomial monomial(const QuotientRingElement& q, std::size_t e)
    {
        std::vector<QuotientRingElement> v(e + 1, QuotientRingElement::zero(q.handle()));
        v[e] = q;
        return RingPolynomial(q.handle(), std::move(v));
    }

    const RingHandle& handle() const noexcept { return spec_; }
    const std::vector<QuotientRingElement>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }

    QuotientRingElement coefficient(std::size_t e) const
    {
        return e < c_.size() ? c_[e] : QuotientRingElement::zero(spec_);
    }

    /// Exponents with a nonzero coefficient, ascending.
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> out;
        for (std::size_t e = 0; e < c_.size(); ++e)
            if (!c_[e].is_zero())
                out.push_back(e);
        return out;
    }

    RingPolynomial& operator+=(const RingPolynomial& o)
    {
        check_same(o);
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), QuotientRingElement::zero(spec_));
        for (std::size_t e = 0; e < o.c_.size(); ++e)
            if (!o.c_[e].is_zero())
                c_[e] += o.c_[e];
        trim();
        return *this;
    }

    RingPolynomial& operator-=(const RingPolynomial& o)
    {
        check_same(o);
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), QuotientRingElement::zero(spec_));
        for (std::size_t e = 0; e < o.c_.size(); ++e)
            if (!o.c_[e].is_zero())
                c_[e] -= o.c_[e];
        trim();
        return *this;
    }

    friend RingPolynomial operator+(RingPolynomial a, const RingPolynomial& b) { return a += b; }
    friend RingPolynomial operator-(RingPolynomial a, const RingPolynomial& b) { return a -= b; }

    friend RingPolynomial operator*(const RingPolynomial& a, const RingPolynomial& b)
    {
        a.check_same(b);
        if (a.is_zero() || b.is_zero())
            return RingPolynomial(a.spec_);
        std::vector<QuotientRingElement> v(a.c_.size() + b.c_.size() - 1, QuotientRingElement::zero(a.spec_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero())
                    v[i + j] += a.c_[i] * b.c_[j];
        }
        return RingPolynomial(a.spec_, std::move(v));
    }

    /// Multiplies by q * x^shift.
    RingPolynomial scaled(const QuotientRingElement& q, std::size_t shift = 0) const
    {
        std::vector<QuotientRingElement> v(c_.size() + shift, QuotientRingElement::zero(spec_));
        for (std::size_t e = 0; e < c_.size(); ++e)
            if (!c_[e].is_zero())
                v[e + shift] = c_[e] * q;
        return RingPolynomial(spec_, std::move(v));
    }

    friend bool operator==(const RingPolynomial& a, const RingPolynomial& b)
    {
        return a.spec_->same_ring(*b.spec_) && a.c_ == b.c_;
    }

    /// Descending powers of x. Scalar and single-term coefficients carry
    /// their sign into the joiner; longer ones are parenthesized.
    std::string to_string() const
    {
        if (c_.empty())
            return "0";
        std::string out;
        for (std::size_t e = c_.size(); e-- > 0;) {
            const QuotientRingElement& q = c_[e];
            if (q.is_zero())
                continue;
            const auto terms = q.terms();
            std::string body;
            bool neg = false;
            if (terms.size() == 1) {
                neg = std::get<2>(terms.front()).sign() < 0;
                body = (neg ? -q : q).to_string();
                if (body == "1" && e > 0)
                    body.clear();
            } else {
                body = "(" + q.to_string() + ")";
            }
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string xpart;
            if (e > 0)
                xpart = e == 1 ? std::string("x") : "x^" + std::to_string(e);
            if (!body.empty() && !xpart.empty())
                out += body + "*" + xpart;
            else
                out += body + xpart;
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    void check_same(const RingPolynomial& o) const
    {
        if (!spec_->same_ring(*o.spec_))
            throw std::invalid_argument("ring spec mismatch between polynomials");
    }

    RingHandle spec_;
    std::vector<QuotientRingElement> c_;
};

/// p^e by repeated multiplication; keeps one factor at the sparsity of p.
inline RingPolynomial ring_poly_pow(const RingPolynomial& p, std::uint64_t e)
{
    RingPolynomial r = RingPolynomial::monomial(QuotientRingElement::one(p.handle()), 0);
    for (std::uint64_t j = 0; j < e; ++j)
        r = r * p;
    return r;
}

/// Which element stands in for c^(1/g).
enum class RootChoice {
    /// The rational g-th root of c when c is a perfect g-th power (c = 1 -> 1), else u.
    rational_when_available,
    /// Always the formal generator u, with u^g = c.
    formal,
};

inline QuotientRingElement g_th_root_of_c(const RingHandle& spec, RootChoice choice)
{
    if (choice == RootChoice::rational_when_available)
        if (auto r = exact_root(spec->c(), static_cast<unsigned long>(spec->g())))
            return QuotientRingElement::scalar(spec, *r);
    return root_power(spec, 1);
}

/// zeta^i * c^(1/g), the constant in the x-coordinate map.
inline QuotientRingElement map_constant(const RingHandle& spec, std::int64_t i, RootChoice choice)
{
    return zeta_power(spec, i) * g_th_root_of_c(spec, choice);
}

/// "(x^2 + w)/x" with w rendered in ring notation.
inline std::string x_map_string(const QuotientRingElement& w)
{
    const RingPolynomial num =
        RingPolynomial::monomial(QuotientRingElement::one(w.handle()), 2) + RingPolynomial::monomial(w, 0);
    return "(" + num.to_string() + ")/x";
}

enum class CurveRole { source, target };

struct CurveEquation {
    RingPolynomial f;
    std::int64_t g = 0;
    ExactRational c;
    std::optional<std::int64_t> i;
    CurveRole role = CurveRole::source;

    std::string to_string() const { return "y^2 = " + f.to_string(); }
};

namespace detail {

inline void check_branch(std::int64_t i)
{
    if (i != 0 && i != 1)
        throw std::invalid_argument("curve index i must be 0 or 1, got " + std::to_string(i));
}

inline ExactInt signed_lucas(std::int64_t g, std::int64_t k)
{
    ExactInt t = lucas_coeff(g, k);
    return k % 2 == 0 ? t : -t;
}

}  // namespace detail

/// y^2 = x^(2g+1) + c x.
inline CurveEquation build_source(const RingHandle& spec)
{
    const auto g = static_cast<std::size_t>(spec->g());
    RingPolynomial f = RingPolynomial::monomial(QuotientRingElement::one(spec), 2 * g + 1) +
                       RingPolynomial::monomial(QuotientRingElement::scalar(spec, spec->c()), 1);
    return {std::move(f), spec->g(), spec->c(), std::nullopt, CurveRole::source};
}

inline CurveEquation build_target(const RingHandle& spec, std::int64_t i,
                                  RootChoice choice = RootChoice::rational_when_available)
{
    detail::check_branch(i);
    const std::int64_t g = spec->g();
    const QuotientRingElement w = map_constant(spec, i, choice);
    RingPolynomial f(spec);
    for (std::int64_t k = 0; 2 * k <= g; ++k) {
        QuotientRingElement coeff =
            QuotientRingElement::scalar(spec, detail::signed_lucas(g, k)) * ring_pow(w, static_cast<std::uint64_t>(k));
        f += RingPolynomial::monomial(coeff, static_cast<std::size_t>(g - 2 * k));
    }
    return {std::move(f), g, spec->c(), i, CurveRole::target};
}

/// sum_k (-1)^k T(g,k) w^k x^(2k+1) (x^2 + w)^(g-2k), w = zeta^i c^(1/g).
inline RingPolynomial pullback_rhs(const RingHandle& spec, std::int64_t i,
                                   RootChoice choice = RootChoice::rational_when_available)
{
    detail::check_branch(i);
    const std::int64_t g = spec->g();
    const QuotientRingElement w = map_constant(spec, i, choice);
    const RingPolynomial shifted_square =
        RingPolynomial::monomial(QuotientRingElement::one(spec), 2) + RingPolynomial::monomial(w, 0);
    RingPolynomial acc(spec);
    for (std::int64_t k = 0; 2 * k <= g; ++k) {
        const QuotientRingElement coeff =
            QuotientRingElement::scalar(spec, detail::signed_lucas(g, k)) * ring_pow(w, static_cast<std::uint64_t>(k));
        const RingPolynomial power = ring_poly_pow(shifted_square, static_cast<std::uint64_t>(g - 2 * k));
        acc += power.scaled(coeff, static_cast<std::size_t>(2 * k + 1));
    }
    return acc;
}

struct MorphismReport {
    std::int64_t g = 0;
    ExactRational c;
    std::int64_t i = 0;
    CurveEquation source;
    CurveEquation target;
    QuotientRingElement map_constant;  // x -> (x^2 + map_constant) / x
    RingPolynomial pullback;
    RingPolynomial residual;
    bool holds = false;
};

inline MorphismReport verify_morphism(const RingHandle& spec, std::int64_t i,
                                      RootChoice choice = RootChoice::rational_when_available)
{
    CurveEquation source = build_source(spec);
    CurveEquation target = build_target(spec, i, choice);
    RingPolynomial pulled = pullback_rhs(spec, i, choice);
    RingPolynomial residual = pulled - source.f;
    const bool holds = residual.is_zero();
    return {spec->g(), spec->c(), i, std::move(source), std::move(target), map_constant(spec, i, choice),
            std::move(pulled), std::move(residual), holds};
}

struct CoefficientFacts {
    ExactInt second;
    ExactInt last;
    std::int64_t last_exponent = 0;

    friend bool operator==(const CoefficientFacts&, const CoefficientFacts&) = default;
};

/// Closed forms for the x^(g-2) coefficient and the lowest-degree coefficient
/// of the c = 1, i = 0 target.
inline CoefficientFacts coefficient_facts(std::int64_t g)
{
    if (g < 2)
        throw std::invalid_argument("coefficient_facts needs g >= 2, got " + std::to_string(g));
    CoefficientFacts f;
    f.second = ExactInt(static_cast<long>(-g));
    if (g % 2 == 0) {
        f.last = (g / 2) % 2 == 0 ? ExactInt(2) : ExactInt(-2);
        f.last_exponent = 0;
    } else {
        const long mag = static_cast<long>(g);
        f.last = ((g - 1) / 2) % 2 == 0 ? ExactInt(mag) : ExactInt(-mag);
        f.last_exponent = 1;
    }
    return f;
}

/// One coefficient of a symbolic c = 1 table row: sign * magnitude * zeta^(zeta_exp * i) * x^x_exp.
struct TableCoefficient {
    std::int64_t k = 0;
    int sign = 1;
    ExactInt magnitude;
    std::int64_t zeta_exp = 0;
    std::int64_t x_exp = 0;

    friend bool operator==(const TableCoefficient&, const TableCoefficient&) = default;
};

struct TableRow {
    std::int64_t g = 0;
    std::vector<TableCoefficient> coefficients;

    /// e.g. "y^2 = x^5 - 5*zeta^i*x^3 + 5*zeta^(2i)*x".
    std::string to_string() const
    {
        std::string out = "y^2 = ";
        bool first = true;
        for (const auto& t : coefficients) {
            if (first)
                out += t.sign < 0 ? "-" : "";
            else
                out += t.sign < 0 ? " - " : " + ";
            first = false;
            std::vector<std::string> factors;
            if (t.magnitude != ExactInt(1) || (t.zeta_exp == 0 && t.x_exp == 0))
                factors.push_back(t.magnitude.to_string());
            if (t.zeta_exp == 1)
                factors.emplace_back("zeta^i");
            else if (t.zeta_exp > 1)
                factors.push_back("zeta^(" + std::to_string(t.zeta_exp) + "i)");
            if (t.x_exp == 1)
                factors.emplace_back("x");
            else if (t.x_exp > 1)
                factors.push_back("x^" + std::to_string(t.x_exp));
            for (std::size_t j = 0; j < factors.size(); ++j)
                out += (j == 0 ? "" : "*") + factors[j];
        }
        return out;
    }
};

/// Target curves for c = 1 with the zeta^(ik) factor left symbolic.
///
/// Sign and magnitude are read from build_target(g, c = 1, i = 0); the i = 1
/// curve must then carry exactly zeta^k on the x^(g-2k) coefficient.
inline std::vector<TableRow> table_rows(std::int64_t g_min, std::int64_t g_max)
{
    if (g_min < 1 || g_max < g_min)
        throw std::invalid_argument("table_rows needs 1 <= g_min <= g_max");
    std::vector<TableRow> rows;
    for (std::int64_t g = g_min; g <= g_max; ++g) {
        const RingHandle spec = make_ring(g, 1);
        const CurveEquation untwisted = build_target(spec, 0);
        const CurveEquation twisted = build_target(spec, 1);
        TableRow row{g, {}};
        for (std::int64_t k = 0; 2 * k <= g; ++k) {
            const auto e = static_cast<std::size_t>(g - 2 * k);
            const QuotientRingElement q = untwisted.f.coefficient(e);
            if (!q.is_scalar() || !q.constant_term().is_integer())
                throw std::logic_error("c = 1 target coefficient is not an integer at g = " + std::to_string(g));
            const ExactInt v = q.constant_term().numerator();
            if (twisted.f.coefficient(e) != q * zeta_power(spec, k))
                throw std::logic_error("twisted target disagrees with zeta^k scaling at g = " + std::to_string(g));
            row.coefficients.push_back({k, v.sign() < 0 ? -1 : 1, abs(v), k, static_cast<std::int64_t>(e)});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace vertalign
