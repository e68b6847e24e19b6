#pragma once

// Vertically aligned entries of Pascal's triangle and the signed Lucas-weighted
// sum over them, which vanishes for every 0 < i < n.

#include "vertalign/combinatorics.hpp"
#include "vertalign/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace vertalign {

struct AlignedEntry {
    std::int64_t k = 0;
    ExactInt value;  // C(n-2k, i-k)

    friend bool operator==(const AlignedEntry&, const AlignedEntry&) = default;
};

/// Entries directly above C(n, i) in the centered triangle, anchor included.
struct AlignedColumn {
    std::int64_t n = 0;
    std::int64_t i = 0;
    std::vector<AlignedEntry> entries;  // k = 0 .. min(i, floor(n/2))
};

inline AlignedColumn aligned_entries(std::int64_t n, std::int64_t i)
{
    if (n < 0 || i < 0 || i > n)
        throw std::invalid_argument("aligned_entries needs 0 <= i <= n, got n = " + std::to_string(n) +
                                    ", i = " + std::to_string(i));
    AlignedColumn col{n, i, {}};
    const std::int64_t last = std::min(i, n / 2);
    for (std::int64_t k = 0; k <= last; ++k)
        col.entries.push_back({k, binomial(n - 2 * k, i - k)});
    return col;
}

struct IdentityTerm {
    std::int64_t k = 0;
    ExactInt signed_coefficient;  // (-1)^k T(n,k)
    ExactInt binomial_value;      // C(n-2k, i-k), generalized
    ExactInt product;

    friend bool operator==(const IdentityTerm&, const IdentityTerm&) = default;
};

struct IdentityReport {
    std::int64_t n = 0;
    std::int64_t i = 0;
    std::vector<IdentityTerm> terms;  // k = 0 .. i, vanishing terms included
    ExactInt total;
    bool holds = false;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

inline IdentityReport identity_sum(std::int64_t n, std::int64_t i)
{
    if (i <= 0 || i >= n)
        throw std::invalid_argument("identity_sum needs 0 < i < n, got n = " + std::to_string(n) +
                                    ", i = " + std::to_string(i));
    IdentityReport rep{n, i, {}, 0, false};
    rep.terms.reserve(static_cast<std::size_t>(i + 1));
    for (std::int64_t k = 0; k <= i; ++k) {
        ExactInt coeff = lucas_coeff(n, k);
        if (k % 2 != 0)
            coeff = -coeff;
        ExactInt b = binomial(n - 2 * k, i - k);
        ExactInt p = coeff * b;
        rep.total += p;
        rep.terms.push_back({k, std::move(coeff), std::move(b), std::move(p)});
    }
    rep.holds = rep.total.is_zero();
    return rep;
}

struct SweepFailure {
    std::int64_t n = 0;
    std::int64_t i = 0;
    ExactInt total;

    friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

struct SweepSummary {
    std::int64_t n_max = 0;
    std::int64_t checked = 0;
    std::vector<SweepFailure> failures;  // ordered by (n, i)
};

/// Runs identity_sum over all 2 <= n <= n_max, 0 < i < n.
///
/// Rows are dealt round-robin to `workers` threads; each row's results land in
/// a slot indexed by n, so the merged report is in (n, i) order regardless of
/// scheduling.
inline SweepSummary identity_sweep(std::int64_t n_max, unsigned workers = 1)
{
    if (n_max < 2)
        throw std::invalid_argument("identity_sweep needs n_max >= 2, got " + std::to_string(n_max));
    workers = std::max(1U, workers);

    const auto rows = static_cast<std::size_t>(n_max + 1);
    std::vector<std::vector<SweepFailure>> per_row(rows);
    std::vector<std::int64_t> per_row_count(rows, 0);

    auto run = [&](unsigned w) {
        for (std::int64_t n = 2 + w; n <= n_max; n += workers) {
            auto& fails = per_row[static_cast<std::size_t>(n)];
            for (std::int64_t i = 1; i < n; ++i) {
                IdentityReport rep = identity_sum(n, i);
                if (!rep.holds)
                    fails.push_back({n, i, rep.total});
            }
            per_row_count[static_cast<std::size_t>(n)] = n - 1;
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
    }

    SweepSummary out{n_max, 0, {}};
    for (std::size_t n = 0; n < rows; ++n) {
        out.checked += per_row_count[n];
        for (auto& f : per_row[n])
            out.failures.push_back(std::move(f));
    }
    return out;
}

}  // namespace vertalign
