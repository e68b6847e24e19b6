#pragma once

// JSON encodings. Exact scalars are always decimal strings ("-77", "3/5").

#include "vertalign/alignment.hpp"
#include "vertalign/combinatorics.hpp"
#include "vertalign/curves.hpp"
#include "vertalign/exact.hpp"
#include "vertalign/lockwood.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace vertalign {

using json = nlohmann::ordered_json;

inline void to_json(json& j, const ExactInt& v) { j = v.to_string(); }
inline void from_json(const json& j, ExactInt& v) { v = ExactInt::parse(j.get<std::string>()); }
inline void to_json(json& j, const ExactRational& v) { j = v.to_string(); }
inline void from_json(const json& j, ExactRational& v) { v = ExactRational::parse(j.get<std::string>()); }

inline void to_json(json& j, const IdentityTerm& t)
{
    j = json{{"k", t.k},
             {"signed_coefficient", t.signed_coefficient},
             {"binomial_value", t.binomial_value},
             {"product", t.product}};
}

inline void from_json(const json& j, IdentityTerm& t)
{
    j.at("k").get_to(t.k);
    j.at("signed_coefficient").get_to(t.signed_coefficient);
    j.at("binomial_value").get_to(t.binomial_value);
    j.at("product").get_to(t.product);
}

inline void to_json(json& j, const IdentityReport& r)
{
    j = json{{"n", r.n}, {"i", r.i}, {"terms", r.terms}, {"total", r.total}, {"holds", r.holds}};
}

inline void from_json(const json& j, IdentityReport& r)
{
    j.at("n").get_to(r.n);
    j.at("i").get_to(r.i);
    j.at("terms").get_to(r.terms);
    j.at("total").get_to(r.total);
    j.at("holds").get_to(r.holds);
}

inline void to_json(json& j, const AlignedColumn& col)
{
    json entries = json::array();
    for (const auto& e : col.entries)
        entries.push_back({{"k", e.k}, {"row", col.n - 2 * e.k}, {"index", col.i - e.k}, {"value", e.value}});
    j = json{{"n", col.n}, {"i", col.i}, {"entries", std::move(entries)}};
}

inline void to_json(json& j, const SweepSummary& s)
{
    json fails = json::array();
    for (const auto& f : s.failures)
        fails.push_back({{"n", f.n}, {"i", f.i}, {"total", f.total}});
    j = json{{"n_max", s.n_max}, {"checked", s.checked}, {"failures", std::move(fails)}, {"holds", s.failures.empty()}};
}

inline void to_json(json& j, const LucasRow& row)
{
    j = json{{"n", row.n}, {"coefficients", row.coefficients}};
}

inline void to_json(json& j, const LockwoodCheck& c)
{
    j = json{{"n", c.n}, {"holds", c.holds}, {"rhs", c.rhs.to_string()}};
}

inline void to_json(json& j, const TableCoefficient& t)
{
    j = json{{"k", t.k}, {"sign", t.sign}, {"magnitude", t.magnitude}, {"zeta_exp", t.zeta_exp}, {"x_exp", t.x_exp}};
}

inline void to_json(json& j, const TableRow& row)
{
    j = json{{"g", row.g}, {"curve", row.to_string()}, {"coefficients", row.coefficients}};
}

/// Nonzero coefficients, highest exponent first.
inline json coefficients_json(const RingPolynomial& p)
{
    json out = json::array();
    const auto sup = p.support();
    for (auto it = sup.rbegin(); it != sup.rend(); ++it)
        out.push_back({{"x_exp", *it}, {"value", p.coefficient(*it).to_string()}});
    return out;
}

inline void to_json(json& j, const CurveEquation& e)
{
    j = json{{"role", e.role == CurveRole::source ? "source" : "target"},
             {"g", e.g},
             {"c", e.c},
             {"i", e.i ? json(*e.i) : json(nullptr)},
             {"equation", e.to_string()},
             {"coefficients", coefficients_json(e.f)}};
}

inline void to_json(json& j, const MorphismReport& r)
{
    j = json{{"g", r.g},
             {"c", r.c},
             {"i", r.i},
             {"map_x", x_map_string(r.map_constant)},
             {"source", r.source},
             {"target", r.target},
             {"pullback", r.pullback.to_string()},
             {"residual", r.residual.to_string()},
             {"holds", r.holds}};
}

}  // namespace vertalign
