// vertalign: command-line front end for the alignment identity, the Lockwood
// oracle and the hyperelliptic curve checks.
//
// Exit codes: 0 every verification held, 1 some verification failed,
// 2 usage error.

#include "vertalign/alignment.hpp"
#include "vertalign/combinatorics.hpp"
#include "vertalign/curves.hpp"
#include "vertalign/json_io.hpp"
#include "vertalign/lockwood.hpp"
#include "vertalign/quotient_ring.hpp"
#include "vertalign/report_format.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace vertalign;

constexpr int kExitHolds = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    OutputFormat format = OutputFormat::text;
    unsigned workers = 1;
    RootChoice root = RootChoice::rational_when_available;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

ExactRational parse_c(const std::string& text)
{
    ExactRational c;
    try {
        c = ExactRational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("c must be an integer or p/q, got '" + text + "'");
    }
    if (c.is_zero())
        throw UsageError("c must be nonzero");
    return c;
}

int cmd_triangle(const Options& opt, std::int64_t n_max)
{
    if (n_max < 0)
        throw UsageError("triangle needs n_max >= 0");
    switch (opt.format) {
    case OutputFormat::text:
        std::cout << render_triangle_text(n_max);
        break;
    case OutputFormat::csv:
        std::cout << render_triangle_csv(n_max);
        break;
    case OutputFormat::json: {
        json rows = json::array();
        for (std::int64_t n = 0; n <= n_max; ++n)
            rows.push_back(pascal_row(n));
        emit(json{{"n_max", n_max}, {"rows", std::move(rows)}});
        break;
    }
    }
    return kExitHolds;
}

int cmd_aligned(const Options& opt, std::int64_t n, std::int64_t i)
{
    const AlignedColumn col = aligned_entries(n, i);
    if (opt.format == OutputFormat::json)
        emit(json(col));
    else
        std::cout << (opt.format == OutputFormat::csv ? render_csv(col) : render_text(col));
    return kExitHolds;
}

int cmd_identity(const Options& opt, std::int64_t n, std::int64_t i)
{
    const IdentityReport rep = identity_sum(n, i);
    if (opt.format == OutputFormat::json)
        emit(json(rep));
    else
        std::cout << (opt.format == OutputFormat::csv ? render_csv(rep) : render_text(rep));
    return rep.holds ? kExitHolds : kExitFailed;
}

int cmd_sweep(const Options& opt, std::int64_t n_max)
{
    const SweepSummary s = identity_sweep(n_max, opt.workers);
    if (opt.format == OutputFormat::json)
        emit(json(s));
    else
        std::cout << (opt.format == OutputFormat::csv ? render_csv(s) : render_text(s));
    return s.failures.empty() ? kExitHolds : kExitFailed;
}

int cmd_lucas_row(const Options& opt, std::int64_t n)
{
    const LucasRow row = lucas_row(n);
    if (opt.format == OutputFormat::json)
        emit(json(row));
    else
        std::cout << (opt.format == OutputFormat::csv ? render_csv(row) : render_text(row));
    return kExitHolds;
}

int cmd_lockwood(const Options& opt, std::int64_t n_max)
{
    if (n_max < 1)
        throw UsageError("lockwood needs n_max >= 1");
    std::vector<LockwoodCheck> checks(static_cast<std::size_t>(n_max));
    const unsigned workers = std::max(1U, opt.workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::int64_t n = 1 + w; n <= n_max; n += workers)
                    checks[static_cast<std::size_t>(n - 1)] = check_lockwood(n);
            });
    }
    bool all = true;
    for (const auto& c : checks)
        all = all && c.holds;
    if (opt.format == OutputFormat::json)
        emit(json{{"n_max", n_max}, {"results", checks}, {"holds", all}});
    else
        std::cout << (opt.format == OutputFormat::csv ? render_csv(checks) : render_text(checks));
    return all ? kExitHolds : kExitFailed;
}

void check_branch(std::int64_t g, std::int64_t i)
{
    if (g < 1)
        throw UsageError("g must be >= 1");
    if (i != 0 && i != 1)
        throw UsageError("i must be 0 or 1");
}

int cmd_curve(const Options& opt, std::int64_t g, const std::string& c_text, std::int64_t i)
{
    check_branch(g, i);
    const RingHandle spec = make_ring(g, parse_c(c_text));
    const CurveEquation source = build_source(spec);
    const CurveEquation target = build_target(spec, i, opt.root);
    if (opt.format == OutputFormat::json)
        emit(json{{"source", source}, {"target", target}});
    else
        std::cout << (opt.format == OutputFormat::csv ? render_csv(source, target) : render_text(source, target));
    return kExitHolds;
}

int cmd_verify_morphism(const Options& opt, std::int64_t g, const std::string& c_text, std::int64_t i)
{
    check_branch(g, i);
    const RingHandle spec = make_ring(g, parse_c(c_text));
    const MorphismReport rep = verify_morphism(spec, i, opt.root);
    if (opt.format == OutputFormat::json)
        emit(json(rep));
    else
        std::cout << (opt.format == OutputFormat::csv ? render_csv(rep) : render_text(rep));
    return rep.holds ? kExitHolds : kExitFailed;
}

int cmd_table(const Options& opt, std::int64_t g_min, std::int64_t g_max)
{
    if (g_min < 1 || g_max < g_min)
        throw UsageError("table needs 1 <= g_min <= g_max");
    const auto rows = table_rows(g_min, g_max);
    if (opt.format == OutputFormat::json)
        emit(json{{"rows", rows}});
    else
        std::cout << (opt.format == OutputFormat::csv ? render_csv(rows) : render_text(rows));
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks of the vertical-alignment identity in Pascal's triangle and of the "
                 "hyperelliptic curve maps built on Lucas coefficients."};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    app.add_option("--format", opt.format, "Output format (default text)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("{text,json,csv}");
    app.add_option("--workers", opt.workers, "Worker threads for sweep and lockwood (default 1)")
        ->check(CLI::PositiveNumber)
        ->option_text("N");
    const std::map<std::string, RootChoice> roots{{"rational", RootChoice::rational_when_available},
                                                  {"formal", RootChoice::formal}};
    app.add_option("--root", opt.root,
                   "g-th root of c in curve and verify-morphism: 'rational' uses the rational root when c "
                   "is a perfect g-th power, 'formal' always uses u (default rational)")
        ->transform(CLI::CheckedTransformer(roots))
        ->option_text("{rational,formal}");

    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t branch = 0;
    std::string c_text;
    std::function<int()> action;

    auto* triangle = app.add_subcommand("triangle", "Render rows 0..N of Pascal's triangle");
    triangle->add_option("n_max", a)->required();
    triangle->callback([&] { action = [&] { return cmd_triangle(opt, a); }; });

    auto* aligned = app.add_subcommand("aligned", "List the entries C(n-2k, i-k) above C(n, i)");
    aligned->add_option("n", a)->required();
    aligned->add_option("i", b)->required();
    aligned->callback([&] { action = [&] { return cmd_aligned(opt, a, b); }; });

    auto* identity = app.add_subcommand("identity", "Evaluate the signed Lucas-weighted column sum at (n, i)");
    identity->add_option("n", a)->required();
    identity->add_option("i", b)->required();
    identity->callback([&] { action = [&] { return cmd_identity(opt, a, b); }; });

    auto* sweep = app.add_subcommand("sweep", "Check the identity for all 0 < i < n <= N");
    sweep->add_option("n_max", a)->required();
    sweep->callback([&] { action = [&] { return cmd_sweep(opt, a); }; });

    auto* lucas = app.add_subcommand("lucas-row", "Print T(n, k) for k = 0..n/2");
    lucas->add_option("n", a)->required();
    lucas->callback([&] { action = [&] { return cmd_lucas_row(opt, a); }; });

    auto* lockwood = app.add_subcommand("lockwood", "Expand Lockwood's identity for n = 1..N");
    lockwood->add_option("n_max", a)->required();
    lockwood->callback([&] { action = [&] { return cmd_lockwood(opt, a); }; });

    auto* curve = app.add_subcommand("curve", "Print the source and target curve for (g, c, i)");
    curve->add_option("g", a)->required();
    curve->add_option("c", c_text)->required();
    curve->add_option("i", branch)->required();
    curve->callback([&] { action = [&] { return cmd_curve(opt, a, c_text, branch); }; });

    auto* verify = app.add_subcommand("verify-morphism", "Pull the target back and compare with the source");
    verify->add_option("g", a)->required();
    verify->add_option("c", c_text)->required();
    verify->add_option("i", branch)->required();
    verify->callback([&] { action = [&] { return cmd_verify_morphism(opt, a, c_text, branch); }; });

    auto* table = app.add_subcommand("table", "Target curves for c = 1 with symbolic zeta factors");
    table->add_option("g_min", a)->required();
    table->add_option("g_max", b)->required();
    table->callback([&] { action = [&] { return cmd_table(opt, a, b); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
}
