#pragma once

// Text and CSV renderings used by the command-line tool. Output is a pure
// function of the report: no timestamps, no unordered containers.

#include "vertalign/alignment.hpp"
#include "vertalign/combinatorics.hpp"
#include "vertalign/curves.hpp"
#include "vertalign/lockwood.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace vertalign {

enum class OutputFormat { text, json, csv };

/// Rows beyond this are listed one per line instead of centered.
inline constexpr std::int64_t kCenteredTriangleRows = 20;

namespace detail {

inline std::string pad_left(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

inline std::string binom_label(std::int64_t m, std::int64_t r)
{
    return "C(" + std::to_string(m) + "," + std::to_string(r) + ")";
}

inline std::string rstrip(std::string s)
{
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

}  // namespace detail

/// Centered layout: entry i of row n sits in grid column (n_max - n) + 2i,
/// so rows of equal parity share columns and C(n-2k, i-k) lies above C(n, i).
inline std::string render_triangle_text(std::int64_t n_max)
{
    std::vector<std::vector<ExactInt>> rows;
    for (std::int64_t n = 0; n <= n_max; ++n)
        rows.push_back(pascal_row(n));

    std::ostringstream os;
    if (n_max > kCenteredTriangleRows) {
        for (std::int64_t n = 0; n <= n_max; ++n) {
            os << n << ":";
            for (const auto& v : rows[static_cast<std::size_t>(n)])
                os << ' ' << v;
            os << '\n';
        }
        return os.str();
    }

    std::size_t width = 1;
    for (const auto& row : rows)
        for (const auto& v : row)
            width = std::max(width, v.to_string().size());

    for (std::int64_t n = 0; n <= n_max; ++n) {
        const std::size_t columns = static_cast<std::size_t>(2 * n_max + 1);
        std::vector<std::string> cells(columns, std::string(width, ' '));
        for (std::int64_t i = 0; i <= n; ++i)
            cells[static_cast<std::size_t>(n_max - n + 2 * i)] =
                detail::pad_left(rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)].to_string(), width);
        std::string line;
        for (std::size_t col = 0; col < columns; ++col) {
            if (col > 0)
                line += ' ';
            line += cells[col];
        }
        os << detail::rstrip(line) << '\n';
    }
    return os.str();
}

inline std::string render_triangle_csv(std::int64_t n_max)
{
    std::ostringstream os;
    os << "n,i,value\n";
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto row = pascal_row(n);
        for (std::size_t i = 0; i < row.size(); ++i)
            os << n << ',' << i << ',' << row[i] << '\n';
    }
    return os.str();
}

inline std::string render_text(const AlignedColumn& col)
{
    std::ostringstream os;
    os << "entries vertically aligned with " << detail::binom_label(col.n, col.i) << ":\n";
    os << "  k  entry       value\n";
    for (const auto& e : col.entries) {
        std::string label = detail::binom_label(col.n - 2 * e.k, col.i - e.k);
        label.resize(std::max<std::size_t>(label.size() + 1, 12), ' ');
        os << detail::pad_left(std::to_string(e.k), 3) << "  " << label << e.value << '\n';
    }
    return os.str();
}

inline std::string render_csv(const AlignedColumn& col)
{
    std::ostringstream os;
    os << "k,row,index,value\n";
    for (const auto& e : col.entries)
        os << e.k << ',' << col.n - 2 * e.k << ',' << col.i - e.k << ',' << e.value << '\n';
    return os.str();
}

inline std::string render_text(const IdentityReport& rep)
{
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"k", "(-1)^k T(n,k)", "C(n-2k,i-k)", "product"});
    for (const auto& t : rep.terms)
        cells.push_back({std::to_string(t.k), t.signed_coefficient.to_string(), t.binomial_value.to_string(),
                         t.product.to_string()});
    std::vector<std::size_t> width(4, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 4; ++c)
            width[c] = std::max(width[c], row[c].size());

    std::ostringstream os;
    os << "identity n = " << rep.n << ", i = " << rep.i << '\n';
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < 4; ++c)
            line += (c == 0 ? "" : "  ") + detail::pad_left(row[c], width[c]);
        os << line << '\n';
    }
    os << "total = " << rep.total << '\n';
    os << (rep.holds ? "holds" : "FAILS") << '\n';
    return os.str();
}

inline std::string render_csv(const IdentityReport& rep)
{
    std::ostringstream os;
    os << "k,signed_coefficient,binomial_value,product\n";
    for (const auto& t : rep.terms)
        os << t.k << ',' << t.signed_coefficient << ',' << t.binomial_value << ',' << t.product << '\n';
    return os.str();
}

inline std::string render_text(const SweepSummary& s)
{
    std::ostringstream os;
    os << "checked " << s.checked << " pairs (2 <= n <= " << s.n_max << ", 0 < i < n), " << s.failures.size()
       << " failures\n";
    for (const auto& f : s.failures)
        os << "  FAIL n = " << f.n << ", i = " << f.i << ": total = " << f.total << '\n';
    os << (s.failures.empty() ? "holds" : "FAILS") << '\n';
    return os.str();
}

inline std::string render_csv(const SweepSummary& s)
{
    std::ostringstream os;
    os << "n_max,checked,failed\n" << s.n_max << ',' << s.checked << ',' << s.failures.size() << '\n';
    return os.str();
}

inline std::string render_text(const LucasRow& row)
{
    std::ostringstream os;
    os << "T(" << row.n << ",k), k = 0.." << row.n / 2 << ":";
    for (const auto& v : row.coefficients)
        os << ' ' << v;
    os << '\n';
    return os.str();
}

inline std::string render_csv(const LucasRow& row)
{
    std::ostringstream os;
    os << "k,coefficient\n";
    for (std::size_t k = 0; k < row.coefficients.size(); ++k)
        os << k << ',' << row.coefficients[k] << '\n';
    return os.str();
}

inline std::string render_text(const std::vector<LockwoodCheck>& checks)
{
    std::ostringstream os;
    bool all = true;
    for (const auto& c : checks) {
        os << "n = " << c.n << ": " << (c.holds ? "holds" : "FAILS");
        if (!c.holds)
            os << ", rhs - (x^n + y^n) = " << (c.rhs - power_sum(c.n)).to_string();
        os << '\n';
        all = all && c.holds;
    }
    os << (all ? "holds" : "FAILS") << '\n';
    return os.str();
}

inline std::string render_csv(const std::vector<LockwoodCheck>& checks)
{
    std::ostringstream os;
    os << "n,holds\n";
    for (const auto& c : checks)
        os << c.n << ',' << (c.holds ? "true" : "false") << '\n';
    return os.str();
}

inline std::string render_text(const CurveEquation& source, const CurveEquation& target)
{
    std::ostringstream os;
    os << "ring:   R(" << source.g << ", " << source.c << ")\n";
    os << "source: " << source.to_string() << '\n';
    os << "target: " << target.to_string() << '\n';
    return os.str();
}

inline std::string render_csv(const CurveEquation& source, const CurveEquation& target)
{
    std::ostringstream os;
    os << "role,x_exp,coefficient\n";
    for (const CurveEquation* eq : {&source, &target}) {
        const auto sup = eq->f.support();
        for (auto it = sup.rbegin(); it != sup.rend(); ++it)
            os << (eq->role == CurveRole::source ? "source" : "target") << ',' << *it << ','
               << eq->f.coefficient(*it).to_string() << '\n';
    }
    return os.str();
}

inline std::string render_text(const MorphismReport& r)
{
    std::ostringstream os;
    os << "ring:     R(" << r.g << ", " << r.c << "), i = " << r.i << '\n';
    os << "map:      x -> " << x_map_string(r.map_constant) << '\n';
    os << "source:   " << r.source.to_string() << '\n';
    os << "target:   " << r.target.to_string() << '\n';
    os << "pullback: y^2 = " << r.pullback.to_string() << '\n';
    os << "residual: " << r.residual.to_string() << '\n';
    os << (r.holds ? "holds" : "FAILS") << '\n';
    return os.str();
}

inline std::string render_csv(const MorphismReport& r)
{
    std::ostringstream os;
    os << "x_exp,pullback,source,residual\n";
    const auto top = static_cast<std::int64_t>(
        std::max({r.pullback.degree(), r.source.f.degree(), r.residual.degree()}));
    for (std::int64_t e = top; e >= 0; --e) {
        const auto ue = static_cast<std::size_t>(e);
        const auto p = r.pullback.coefficient(ue);
        const auto s = r.source.f.coefficient(ue);
        const auto d = r.residual.coefficient(ue);
        if (p.is_zero() && s.is_zero() && d.is_zero())
            continue;
        os << e << ',' << p.to_string() << ',' << s.to_string() << ',' << d.to_string() << '\n';
    }
    return os.str();
}

inline std::string render_text(const std::vector<TableRow>& rows)
{
    std::ostringstream os;
    os << " g  curve C_i (c = 1)\n";
    for (const auto& row : rows)
        os << detail::pad_left(std::to_string(row.g), 2) << "  " << row.to_string() << '\n';
    return os.str();
}

inline std::string render_csv(const std::vector<TableRow>& rows)
{
    std::ostringstream os;
    os << "g,k,sign,magnitude,zeta_exp,x_exp\n";
    for (const auto& row : rows)
        for (const auto& t : row.coefficients)
            os << row.g << ',' << t.k << ',' << t.sign << ',' << t.magnitude << ',' << t.zeta_exp << ',' << t.x_exp
               << '\n';
    return os.str();
}

}  // namespace vertalign
