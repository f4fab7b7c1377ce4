// Command-line front end: conjecture scans, table reproduction, extrema
// searches, the constants engine, the bound chain and the elementary-route
// identity checks.  Data goes to stdout (CSV or JSON), progress to stderr.
// Exit status is 0 only when every asserted inequality/identity holds.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <csignal>
#include <cstdio>
#include <iostream>

#include "reprcount/bounds.hpp"
#include "reprcount/chebyshev.hpp"
#include "reprcount/constants.hpp"
#include "reprcount/selberg.hpp"
#include "reprcount/verify.hpp"

using namespace reprcount;
using json = nlohmann::ordered_json;

namespace {

std::atomic<bool> g_interrupted{false};
void handle_sigint(int) { g_interrupted.store(true); }

std::string fmt_double(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// All reals in JSON reports are serialized as decimal strings.
std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json report_shell(const std::string& command) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

json rows_json(const std::vector<SampleRow>& rows, int decimals) {
    json arr = json::array();
    for (const SampleRow& r : rows) {
        arr.push_back({{"x", r.x},
                       {"B1", r.b1},
                       {"B3", r.b3},
                       {"lambda1", fmt_double(r.lam1, decimals)},
                       {"lambda3", fmt_double(r.lam3, decimals)},
                       {"mu1", fmt_double(r.mu1, decimals)},
                       {"mu3", fmt_double(r.mu3, decimals)}});
    }
    return arr;
}

void print_rows_csv(const std::vector<SampleRow>& rows, int decimals) {
    std::printf("x,B1,B3,lambda1,lambda3,mu1,mu3\n");
    for (const SampleRow& r : rows)
        std::printf("%llu,%llu,%llu,%s,%s,%s,%s\n", static_cast<unsigned long long>(r.x),
                    static_cast<unsigned long long>(r.b1), static_cast<unsigned long long>(r.b3),
                    fmt_double(r.lam1, decimals).c_str(), fmt_double(r.lam3, decimals).c_str(),
                    fmt_double(r.mu1, decimals).c_str(), fmt_double(r.mu3, decimals).c_str());
}

json verify_report_json(const VerificationReport& r, int decimals) {
    json data;
    data["x_max"] = r.x_max;
    data["completed"] = r.completed;
    data["conjecture1_ok"] = r.conjecture1_ok;
    data["conjecture2_ok"] = r.conjecture2_ok;
    data["conjecture3_ok"] = r.conjecture3_ok;
    data["sub8_lambda_exceptions"] = r.sub8_lambda_exceptions;
    json viol = json::array();
    for (const Violation& v : r.counterexamples)
        viol.push_back({{"x", v.x}, {"conjecture", v.which}});
    data["counterexamples"] = viol;
    data["rows"] = rows_json(r.table_rows, decimals);
    data["worst_margins"] = {
        {"count", {{"slack", fmt_full(r.margin_count.slack)}, {"x", r.margin_count.x}}},
        {"lambda", {{"slack", fmt_full(r.margin_lambda.slack)}, {"x", r.margin_lambda.x}}},
        {"mu", {{"slack", fmt_full(r.margin_mu.slack)}, {"x", r.margin_mu.x}}}};
    return data;
}

unsigned worker_count(unsigned cli_value) {
    if (const char* env = std::getenv("REPRCOUNT_WORKERS"))
        return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    return cli_value;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counting and verification toolkit for the x^2+y^2 vs x^2+3y^2 lattices"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bool full_precision = false;
    app.add_flag("--full-precision", full_precision, "print reals with 15 decimals instead of 3");

    // ---- verify / table1 / table2 ----
    u64 x_max = 1ull << 26;
    u64 segment_len = 1ull << 20;
    unsigned workers = 0;
    std::string checkpoint;
    std::string checkpoint_format = "json";
    bool resume = false;

    auto add_scan_options = [&](CLI::App* cmd) {
        cmd->add_option("--x-max", x_max, "scan upper bound");
        cmd->add_option("--segment-len", segment_len, "segment length (default 2^20)");
        cmd->add_option("--workers", workers, "sieve worker threads (0 = all cores)");
        cmd->add_option("--checkpoint", checkpoint, "checkpoint file path");
        cmd->add_option("--checkpoint-format", checkpoint_format, "binary or json")
            ->check(CLI::IsMember({"binary", "json"}));
        cmd->add_flag("--resume", resume, "resume from the checkpoint file");
    };

    CLI::App* verify = app.add_subcommand("verify", "full conjecture scan over [1, x_max]");
    add_scan_options(verify);
    CLI::App* table1 = app.add_subcommand("table1", "B1/B3 at powers of two up to x_max");
    add_scan_options(table1);
    CLI::App* table2 =
        app.add_subcommand("table2", "lambda/B rows at multiples of 10^11 (long-run mode)");
    add_scan_options(table2);

    // ---- hmax ----
    u64 bound = 1'000'000;
    CLI::App* hmax = app.add_subcommand("hmax", "maxima of H_1 and H_3 over event points");
    hmax->add_option("--bound", bound, "search bound (default 10^6)");

    // ---- envelopes ----
    u64 env_max = 10'000'000;
    CLI::App* envelopes = app.add_subcommand("envelopes", "psi envelope verification");
    envelopes->add_option("--x-max", env_max, "scan bound (default 10^7)");

    // ---- curves ----
    u64 curve_bound = 1000;
    int curve_j = 1;
    CLI::App* curves = app.add_subcommand("curves", "CSV of (n, Lambda, psi, H) event rows");
    curves->add_option("--bound", curve_bound, "event bound");
    curves->add_option("--j", curve_j, "form class (1 or 3)")->check(CLI::IsMember({1, 3}));

    // ---- constants ----
    int digits = 30;
    CLI::App* constants = app.add_subcommand("constants", "high-precision constant set");
    constants->add_option("--digits", digits, "requested significant digits (default 30)");

    // ---- bounds ----
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "L/U sandwich machinery");
    double chain_x0 = 1.5e11;
    int chain_iters = 8;
    CLI::App* chain = bounds_cmd->add_subcommand("chain", "final inequality chain");
    chain->add_option("--x0", chain_x0, "chain evaluation point (default 1.5e11)");
    chain->add_option("--iters", chain_iters, "D- improvement iterations (default 8)");
    double it_x0 = 1e9;
    int it_j = 3, it_count = 8;
    CLI::App* iterate = bounds_cmd->add_subcommand("iterate", "D- improvement trace");
    iterate->add_option("--x0", it_x0, "evaluation point (default 1e9)");
    iterate->add_option("--j", it_j, "form class (1 or 3)")->check(CLI::IsMember({1, 3}));
    iterate->add_option("--iters", it_count, "iteration count");
    bounds_cmd->require_subcommand(1);

    // ---- selberg ----
    CLI::App* selberg_cmd = app.add_subcommand("selberg", "elementary-route identity checks");
    u64 sel_x = 10'000;
    CLI::App* sel_check = selberg_cmd->add_subcommand("check", "functional equation at one x");
    sel_check->add_option("--x", sel_x, "evaluation point (default 10^4)");
    u64 sel_xmax = 1'000'000;
    CLI::App* sel_explicit =
        selberg_cmd->add_subcommand("explicit", "explicit 9.62/8.53 band scan");
    sel_explicit->add_option("--x-max", sel_xmax, "scan bound (default 10^6)");
    selberg_cmd->require_subcommand(1);

    // ---- crossover ----
    CLI::App* crossover_cmd =
        app.add_subcommand("crossover", "unconditional crossover exponent from the bands");

    CLI11_PARSE(app, argc, argv);

    std::signal(SIGINT, handle_sigint);
    const int decimals = full_precision ? 15 : 3;
    int exit_status = 0;

    try {
        if (*verify || *table1 || *table2) {
            VerifyOptions o;
            o.x_max = x_max;
            o.segment_len = segment_len;
            o.workers = worker_count(workers);
            o.checkpoint_path = checkpoint;
            o.checkpoint_format =
                checkpoint_format == "binary" ? CheckpointFormat::binary : CheckpointFormat::json;
            o.resume = resume;
            o.interrupted = [] { return g_interrupted.load(); };
            o.progress = [&](u64 x, double rate) {
                std::fprintf(stderr, "x=%llu rate=%.3g/s eta=%.0fs\n",
                             static_cast<unsigned long long>(x), rate,
                             rate > 0 ? static_cast<double>(x_max - x) / rate : 0.0);
            };
            if (*table2) {
                o.samples.clear();
                o.samples.push_back(100'000'000'000ull);
                o.samples.push_back(150'000'000'000ull);
                for (u64 j = 2; j <= 10; ++j) o.samples.push_back(j * 100'000'000'000ull);
                std::erase_if(o.samples, [&](u64 v) { return v > x_max; });
            }
            const VerificationReport r = verify_conjectures(o);
            const bool ok = r.completed && r.conjecture1_ok && r.conjecture2_ok && r.conjecture3_ok;
            if (!ok) exit_status = 1;
            if (format == "csv") {
                print_rows_csv(r.table_rows, decimals);
            } else {
                json j = report_shell(*verify ? "verify" : (*table1 ? "table1" : "table2"));
                j["data"] = verify_report_json(r, decimals);
                j["diagnostics"] = {{"elapsed_seconds", fmt_full(r.elapsed_seconds)}};
                std::cout << j.dump(2) << "\n";
            }
            std::fprintf(stderr, "%s\n", ok ? "all conjectures hold" : "VIOLATION or incomplete");
        } else if (*hmax) {
            const HExtremum h1 = h_extrema(form_b1(), bound);
            const HExtremum h3 = h_extrema(form_b3(), bound);
            json j = report_shell("hmax");
            j["data"] = {{"bound", bound},
                         {"H1", {{"location", h1.location}, {"value", fmt_full(h1.value)}}},
                         {"H3", {{"location", h3.location}, {"value", fmt_full(h3.value)}}},
                         {"H1_min_left",
                          {{"location", h1.min_location}, {"value", fmt_full(h1.min_left)}}},
                         {"H3_min_left",
                          {{"location", h3.min_location}, {"value", fmt_full(h3.min_left)}}}};
            std::cout << j.dump(2) << "\n";
        } else if (*envelopes) {
            const EnvelopeReport r = check_envelopes(env_max);
            const bool ok = r.upper_ok && r.linear_lower_ok && r.linear_upper_ok;
            if (!ok) exit_status = 1;
            json j = report_shell("envelopes");
            j["data"] = {{"x_max", r.x_max},
                         {"psi3_le_S_ok", r.upper_ok},
                         {"psi1_ge_0.4924x_ok", r.linear_lower_ok},
                         {"psi3_le_0.5176x_ok", r.linear_upper_ok},
                         {"S_min_slack", fmt_full(r.upper_min_slack)},
                         {"S_min_at", r.upper_min_at},
                         {"lower_min_slack", fmt_full(r.lower_min_slack)},
                         {"lower_min_at", r.lower_min_at},
                         {"linear_min_slack", fmt_full(r.linear_min_slack)},
                         {"linear_min_at", r.linear_min_at}};
            json fails = json::array();
            for (const auto& [x, what] : r.failures) fails.push_back({{"x", x}, {"what", what}});
            j["data"]["failures"] = fails;
            std::cout << j.dump(2) << "\n";
        } else if (*curves) {
            const auto rows = curve_rows(curve_j == 1 ? form_b1() : form_b3(), curve_bound);
            std::printf("n,Lambda,psi,H\n");
            for (const CurveRow& r : rows)
                std::printf("%llu,%.15g,%.15g,%.15g\n", static_cast<unsigned long long>(r.n),
                            r.lambda, r.psi, r.h);
        } else if (*constants) {
            const ConstantSet s = compute_constant_set(digits);
            json j = report_shell("constants");
            auto put = [&](const char* name, const BigReal& v) {
                j["data"][name] = {{"value", v.str(digits)},
                                   {"certified_digits", v.certified_decimals()}};
            };
            put("C_b1", s.c_b1);
            put("C_b3", s.c_b3);
            put("B_b1", s.b_b1);
            put("B_b3", s.b_b3);
            put("C2_b1", s.c2_b1);
            put("C2_b3", s.c2_b3);
            put("ratio", s.ratio);
            put("ramanujan_C", s.ramanujan_c);
            put("B_T", s.b_t);
            put("second_coeff_T", s.second_coeff_t);
            std::cout << j.dump(2) << "\n";
        } else if (*chain) {
            const ChainReport r = theorem7_chain(chain_x0, chain_iters);
            if (!r.all_hold) exit_status = 1;
            json j = report_shell("bounds chain");
            json links = json::array();
            for (const ChainLink& l : r.links)
                links.push_back({{"name", l.name},
                                 {"lhs", fmt_full(l.lhs)},
                                 {"rhs", fmt_full(l.rhs)},
                                 {"margin", fmt_full(l.margin)},
                                 {"holds", l.holds}});
            j["data"] = {{"x0", fmt_full(r.x0)},
                         {"iters", r.iters},
                         {"all_hold", r.all_hold},
                         {"links", links},
                         {"w8_x0_over_3", fmt_full(r.w8_x0_over_3)},
                         {"v8_x0_over_37", fmt_full(r.v8_x0_over_37)},
                         {"U3_x0_over_3", fmt_full(r.u3_x0_over_3)},
                         {"L1_x0_over_37", fmt_full(r.l1_x0_over_37)},
                         {"envelope_sum_6", fmt_full(r.envelope_sum_paper6)},
                         {"envelope_sum_7", fmt_full(r.envelope_sum_all7)},
                         {"envelope_budget", fmt_full(r.envelope_budget)}};
            std::cout << j.dump(2) << "\n";
        } else if (*iterate) {
            const IterationTrace t =
                tilde_iteration(it_j == 1 ? form_b1() : form_b3(), it_x0, it_count);
            json j = report_shell("bounds iterate");
            json vals = json::array();
            for (double v : t.values) vals.push_back(fmt_full(v));
            j["data"] = {{"j", t.j},
                         {"x0", fmt_full(t.x0)},
                         {"start", fmt_full(t.start)},
                         {"frozen", t.frozen},
                         {"converged", t.converged},
                         {"values", vals}};
            std::cout << j.dump(2) << "\n";
        } else if (*sel_check) {
            json j = report_shell("selberg check");
            SelbergTables tables(sel_x);
            json per = json::array();
            bool ok = true;
            for (const FormClass& c : {form_b1(), form_b3()}) {
                const FunctionalBreakdown b = functional_residual(sel_x, c, tables);
                ok = ok && b.residual / static_cast<double>(sel_x) <= 1e-9;
                per.push_back({{"j", b.j},
                               {"lhs", fmt_full(b.lhs)},
                               {"rhs", fmt_full(b.rhs)},
                               {"T1", fmt_full(b.t1)},
                               {"T2", fmt_full(b.t2)},
                               {"T3", fmt_full(b.t3)},
                               {"T4", fmt_full(b.t4)},
                               {"residual", fmt_full(b.residual)}});
            }
            if (!ok) exit_status = 1;
            j["data"] = {{"x", sel_x}, {"classes", per}, {"ok", ok}};
            std::cout << j.dump(2) << "\n";
        } else if (*sel_explicit) {
            const ConstantSet s = compute_constant_set(30);
            const ExplicitBoundReport r = explicit_bound_check(
                sel_xmax, static_cast<double>(s.c_b1.value), static_cast<double>(s.c_b3.value));
            if (!(r.ok1 && r.ok3)) exit_status = 1;
            json j = report_shell("selberg explicit");
            j["data"] = {{"x_max", r.x_max},
                         {"band1_ok", r.ok1},
                         {"band3_ok", r.ok3},
                         {"max_norm1", fmt_full(r.max_norm1)},
                         {"at1", r.at1},
                         {"max_norm3", fmt_full(r.max_norm3)},
                         {"at3", r.at3}};
            std::cout << j.dump(2) << "\n";
        } else if (*crossover_cmd) {
            const ConstantSet s = compute_constant_set(30);
            const CrossoverResult r = crossover(static_cast<double>(s.c_b1.value),
                                                static_cast<double>(s.c_b3.value));
            json j = report_shell("crossover");
            j["data"] = {{"crosses", r.crosses}, {"log10_x", fmt_full(r.log10_x)}};
            std::cout << j.dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        json j = report_shell("error");
        j["error"] = e.what();
        std::cout << j.dump(2) << "\n";
        return 2;
    }
    return exit_status;
}
