#pragma once

// Exact arithmetic in R(g, c) = Q[z, u] / (Phi_g(z), u^g - c).
//
// z stands for a primitive g-th root of unity and u for a g-th root of c.
// Elements are stored sparsely over the basis z^a u^b, 0 <= a < phi(g),
// 0 <= b < g. For special c (c = 1 among them) u^g - c is reducible and the
// ring is not a field; nothing here needs inverses.

#include "vertalign/cyclotomic.hpp"
#include "vertalign/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace vertalign {

class RingSpec {
public:
    std::int64_t g() const noexcept { return g_; }
    const ExactRational& c() const noexcept { return c_; }
    const IntPolynomial& phi_g() const noexcept { return phi_; }
    /// phi(g), the z-degree of the basis.
    std::size_t deg_z() const noexcept { return deg_z_; }
    /// g, the u-degree of the basis.
    std::size_t deg_u() const noexcept { return static_cast<std::size_t>(g_); }
    std::size_t dimension() const noexcept { return deg_z() * deg_u(); }

    /// z^e reduced modulo Phi_g, for e < max(2 * deg_z - 1, g).
    const std::vector<ExactRational>& z_power_residue(std::size_t e) const { return z_residues_.at(e); }

    bool same_ring(const RingSpec& o) const noexcept { return this == &o || (g_ == o.g_ && c_ == o.c_); }

    friend std::shared_ptr<const RingSpec> make_ring(std::int64_t g, const ExactRational& c);

private:
    RingSpec() = default;

    std::int64_t g_ = 1;
    ExactRational c_{1};
    IntPolynomial phi_;
    std::size_t deg_z_ = 1;
    std::vector<std::vector<ExactRational>> z_residues_;
};

using RingHandle = std::shared_ptr<const RingSpec>;

inline RingHandle make_ring(std::int64_t g, const ExactRational& c)
{
    if (g < 1)
        throw std::invalid_argument("make_ring needs g >= 1, got " + std::to_string(g));
    if (c.is_zero())
        throw std::invalid_argument("make_ring needs c != 0");

    std::shared_ptr<RingSpec> spec(new RingSpec());
    spec->g_ = g;
    spec->c_ = c;
    spec->phi_ = cyclotomic(g);
    spec->deg_z_ = static_cast<std::size_t>(spec->phi_.degree());
    if (static_cast<std::int64_t>(spec->deg_z_) != euler_totient(g))
        throw std::logic_error("cyclotomic degree disagrees with totient at g = " + std::to_string(g));

    // Residues of z^e by shifting the previous residue and folding the top
    // coefficient back with the monic Phi_g.
    const std::size_t dz = spec->deg_z_;
    const auto& phi = spec->phi_.coefficients();
    std::vector<ExactInt> cur(dz, ExactInt(0));
    cur[0] = 1;
    const std::size_t table = std::max(2 * dz - 1, static_cast<std::size_t>(g));
    for (std::size_t e = 0; e < table; ++e) {
        spec->z_residues_.emplace_back(cur.begin(), cur.end());
        ExactInt top = cur[dz - 1];
        for (std::size_t j = dz - 1; j > 0; --j)
            cur[j] = cur[j - 1];
        cur[0] = 0;
        if (!top.is_zero())
            for (std::size_t j = 0; j < dz; ++j)
                cur[j] -= top * phi[j];
    }
    return spec;
}

class QuotientRingElement {
public:
    static QuotientRingElement zero(const RingHandle& spec) { return QuotientRingElement(spec); }

    static QuotientRingElement scalar(const RingHandle& spec, const ExactRational& q)
    {
        QuotientRingElement e(spec);
        e.add_at(0, q);
        return e;
    }

    static QuotientRingElement one(const RingHandle& spec) { return scalar(spec, 1); }

    /// Reduces the sparse sum of q * z^a * u^b for arbitrary a, b >= 0.
    static QuotientRingElement from_terms(const RingHandle& spec,
                                          const std::vector<std::tuple<std::uint64_t, std::uint64_t, ExactRational>>& terms)
    {
        const auto g = static_cast<std::uint64_t>(spec->g());
        const std::size_t du = spec->deg_u();
        QuotientRingElement acc = zero(spec);
        for (const auto& [a, b, q] : terms) {
            if (q.is_zero())
                continue;
            const ExactRational scale = q * pow(spec->c(), b / g);
            // z has order g in the ring.
            const auto& residue = spec->z_power_residue(a % g);
            for (std::size_t j = 0; j < spec->deg_z(); ++j)
                if (!residue[j].is_zero())
                    acc.add_at(j * du + b % g, scale * residue[j]);
        }
        return acc;
    }

    const RingSpec& spec() const noexcept { return *spec_; }
    const RingHandle& handle() const noexcept { return spec_; }

    const ExactRational& coefficient(std::size_t a, std::size_t b) const
    {
        if (a >= spec_->deg_z() || b >= spec_->deg_u())
            throw std::out_of_range("basis index out of range");
        const auto it = c_.find(a * spec_->deg_u() + b);
        return it == c_.end() ? zero_value() : it->second;
    }

    /// Nonzero (a, b, q) in lexicographic (a, b) order.
    std::vector<std::tuple<std::uint64_t, std::uint64_t, ExactRational>> terms() const
    {
        std::vector<std::tuple<std::uint64_t, std::uint64_t, ExactRational>> out;
        const std::size_t du = spec_->deg_u();
        for (const auto& [idx, q] : c_)
            out.emplace_back(idx / du, idx % du, q);
        return out;
    }

    bool is_zero() const noexcept { return c_.empty(); }

    /// True when only the constant slot is populated (zero included).
    bool is_scalar() const noexcept { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }

    const ExactRational& constant_term() const noexcept
    {
        const auto it = c_.find(0);
        return it == c_.end() ? zero_value() : it->second;
    }

    std::size_t nonzero_count() const noexcept { return c_.size(); }

    QuotientRingElement operator-() const
    {
        QuotientRingElement r = *this;
        for (auto& [idx, q] : r.c_)
            q = -q;
        return r;
    }

    QuotientRingElement& operator+=(const QuotientRingElement& o)
    {
        check_same(o);
        for (const auto& [idx, q] : o.c_)
            add_at(idx, q);
        return *this;
    }

    QuotientRingElement& operator-=(const QuotientRingElement& o)
    {
        check_same(o);
        for (const auto& [idx, q] : o.c_)
            add_at(idx, -q);
        return *this;
    }

    friend QuotientRingElement operator+(QuotientRingElement a, const QuotientRingElement& b) { return a += b; }
    friend QuotientRingElement operator-(QuotientRingElement a, const QuotientRingElement& b) { return a -= b; }

    /// Polynomial product in z, u; u-degree folded with u^g = c, then the
    /// z-degree folded modulo Phi_g.
    friend QuotientRingElement operator*(const QuotientRingElement& a, const QuotientRingElement& b)
    {
        a.check_same(b);
        const RingSpec& s = *a.spec_;
        const std::size_t dz = s.deg_z();
        const std::size_t du = s.deg_u();
        QuotientRingElement out(a.spec_);
        if (a.is_zero() || b.is_zero())
            return out;

        // Unreduced in z, keyed by zz * du + uu with zz < 2 * dz - 1.
        std::map<std::size_t, ExactRational> wide;
        ExactRational prod;
        for (const auto& [ia, qa] : a.c_) {
            const std::size_t za = ia / du;
            const std::size_t ua = ia % du;
            for (const auto& [ib, qb] : b.c_) {
                const std::size_t zz = za + ib / du;
                std::size_t uu = ua + ib % du;
                prod = qa;
                prod *= qb;
                if (uu >= du) {
                    uu -= du;
                    prod *= s.c();
                }
                wide[zz * du + uu] += prod;
            }
        }

        for (const auto& [key, w] : wide) {
            if (w.is_zero())
                continue;
            const std::size_t zz = key / du;
            const std::size_t uu = key % du;
            if (zz < dz) {
                out.add_at(key, w);
                continue;
            }
            const auto& residue = s.z_power_residue(zz);
            for (std::size_t j = 0; j < dz; ++j)
                if (!residue[j].is_zero())
                    out.add_at(j * du + uu, w * residue[j]);
        }
        return out;
    }

    QuotientRingElement& operator*=(const QuotientRingElement& o) { return *this = *this * o; }

    friend bool operator==(const QuotientRingElement& a, const QuotientRingElement& b)
    {
        return a.spec_->same_ring(*b.spec_) && a.c_ == b.c_;
    }

    /// Sum of q*z^a*u^b in lexicographic (a, b) order, e.g. "-1 + z", "3*u^2".
    std::string to_string() const
    {
        std::string out;
        for (const auto& [a, b, q] : terms()) {
            const bool neg = q.sign() < 0;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const ExactRational mag = neg ? -q : q;
            std::string mono;
            if (a > 0)
                mono += a == 1 ? std::string("z") : "z^" + std::to_string(a);
            if (b > 0) {
                if (!mono.empty())
                    mono += '*';
                mono += b == 1 ? std::string("u") : "u^" + std::to_string(b);
            }
            if (mono.empty())
                out += mag.to_string();
            else if (mag == ExactRational(1))
                out += mono;
            else
                out += mag.to_string() + '*' + mono;
        }
        return out.empty() ? "0" : out;
    }

private:
    explicit QuotientRingElement(RingHandle spec) : spec_(std::move(spec))
    {
        if (!spec_)
            throw std::invalid_argument("null ring spec");
    }

    static const ExactRational& zero_value()
    {
        static const ExactRational z(0);
        return z;
    }

    void add_at(std::size_t idx, const ExactRational& q)
    {
        if (q.is_zero())
            return;
        auto [it, inserted] = c_.try_emplace(idx, q);
        if (!inserted) {
            it->second += q;
            if (it->second.is_zero())
                c_.erase(it);
        }
    }

    void check_same(const QuotientRingElement& o) const
    {
        if (!spec_->same_ring(*o.spec_))
            throw std::invalid_argument("ring spec mismatch: R(" + std::to_string(spec_->g()) + ", " +
                                        spec_->c().to_string() + ") vs R(" + std::to_string(o.spec_->g()) +
                                        ", " + o.spec_->c().to_string() + ")");
    }

    RingHandle spec_;
    std::map<std::size_t, ExactRational> c_;  // nonzero only, key a * deg_u + b
};

inline QuotientRingElement ring_add(const QuotientRingElement& a, const QuotientRingElement& b) { return a + b; }
inline QuotientRingElement ring_mul(const QuotientRingElement& a, const QuotientRingElement& b) { return a * b; }
inline QuotientRingElement ring_neg(const QuotientRingElement& a) { return -a; }

inline QuotientRingElement ring_pow(const QuotientRingElement& base, std::uint64_t e)
{
    QuotientRingElement r = QuotientRingElement::one(base.handle());
    QuotientRingElement b = base;
    while (e != 0) {
        if (e & 1U)
            r = r * b;
        e >>= 1;
        if (e != 0)
            b = b * b;
    }
    return r;
}

/// zeta^m, i.e. the class of z^(m mod g).
inline QuotientRingElement zeta_power(const RingHandle& spec, std::int64_t m)
{
    const std::int64_t g = spec->g();
    const auto e = static_cast<std::uint64_t>(((m % g) + g) % g);
    return QuotientRingElement::from_terms(spec, {{e, 0, ExactRational(1)}});
}

/// u^k = c^(k div g) * u^(k mod g).
inline QuotientRingElement root_power(const RingHandle& spec, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("root_power needs k >= 0");
    return QuotientRingElement::from_terms(spec, {{0, static_cast<std::uint64_t>(k), ExactRational(1)}});
}

}  // namespace vertalign
