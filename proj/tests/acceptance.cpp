// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criterion 2 scans to 10^9 by default; REPRCOUNT_ACCEPT_XMAX overrides the
// scan bound (e.g. for the optional long-run mode at 1.5e11).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "reprcount/bounds.hpp"
#include "reprcount/chebyshev.hpp"
#include "reprcount/constants.hpp"
#include "reprcount/kahan.hpp"
#include "reprcount/repr.hpp"
#include "reprcount/selberg.hpp"
#include "reprcount/verify.hpp"

using namespace reprcount;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool prefix_match(const BigReal& v, const std::string& digits_str, int digits) {
    PrecisionGuard pg(digits + 25);
    const big expect(digits_str);
    return abs(v.value - expect) <= pow(big(10), -(digits - 1)) * abs(expect);
}

constexpr std::pair<u64, u64> kTable1[26] = {
    {2, 1},           {3, 3},           {5, 4},            {9, 8},
    {16, 14},         {29, 25},         {54, 45},          {97, 82},
    {180, 151},       {337, 282},       {633, 531},        {1197, 1003},
    {2280, 1907},     {4357, 3645},     {8363, 6993},      {16096, 13456},
    {31064, 25978},   {60108, 50248},   {116555, 97446},   {226419, 189291},
    {440616, 368338}, {858696, 717804}, {1675603, 1400699},
    {3273643, 2736534}, {6402706, 5352182}, {12534812, 10478044}};

}  // namespace

int main() {
    // ---- 1: Table 1 exactness at x = 2^26 ------------------------------
    {
        const auto t0 = std::chrono::steady_clock::now();
        VerifyOptions o;
        o.x_max = 1ull << 26;
        const VerificationReport r = verify_conjectures(o);
        bool ok = r.completed && r.table_rows.size() == 26;
        for (int k = 0; ok && k < 26; ++k)
            ok = r.table_rows[k].b1 == kTable1[k].first && r.table_rows[k].b3 == kTable1[k].second;
        const double secs = elapsed_since(t0);
        ok = ok && secs <= 120.0;
        report(1, "Table 1 rows exact at 2^1..2^26 within 2 minutes", ok,
               "B1(2^26)=" + std::to_string(r.table_rows.back().b1) +
                   ", B3(2^26)=" + std::to_string(r.table_rows.back().b3) + ", " +
                   std::to_string(secs) + "s");
    }

    // ---- 2: conjecture scan -------------------------------------------
    {
        const auto t0 = std::chrono::steady_clock::now();
        VerifyOptions o;
        o.x_max = 1'000'000'000ull;
        if (const char* env = std::getenv("REPRCOUNT_ACCEPT_XMAX"))
            o.x_max = std::strtoull(env, nullptr, 10);
        const VerificationReport r = verify_conjectures(o);
        const double secs = elapsed_since(t0);
        const bool sub8 = r.sub8_lambda_exceptions == std::vector<u64>{3, 4, 7};
        const bool ok = r.completed && r.conjecture1_ok && r.conjecture2_ok && r.conjecture3_ok &&
                        sub8 && secs <= 1800.0;
        report(2,
               "conjectures 1 and 3 for x <= " + std::to_string(o.x_max) +
                   ", conjecture 2 for 8 <= x, sub-8 exceptions {3,4,7}",
               ok, std::to_string(secs) + "s");
        if (o.x_max >= 150'000'000'000ull) {
            // optional long-run row check at 10^11
            bool row_ok = false;
            for (const SampleRow& row : r.table_rows)
                if (row.x == 100'000'000'000ull)
                    row_ok = row.b1 == 15570512744ull &&
                             std::abs(row.lam1 - 378458908590.818) <= 0.5;
            report(2, "long-run row x = 10^11", row_ok);
        }
    }

    // ---- 3: constants ---------------------------------------------------
    {
        const auto t0 = std::chrono::steady_clock::now();
        const ConstantSet s = compute_constant_set(30);
        const double secs = elapsed_since(t0);
        const bool c_ok = prefix_match(s.c_b1, "0.76422365358922066299", 20) &&
                          prefix_match(s.c_b3, "0.63890940544534388225", 20);
        const bool b_ok = prefix_match(s.b_b1, "0.163897318634581595", 18) &&
                          prefix_match(s.b_b3, "0.153552244994995827", 18);
        bool c2_ok;
        {
            PrecisionGuard pg(40);
            c2_ok = prefix_match(s.c2_b1, "0.581948659317290797928", 21) &&
                    prefix_match(s.c2_b3, "0.576776122497497913622", 21) &&
                    abs(s.c2_b1.value - (1 + s.b_b1.value) / 2) < pow(big(10), -25) &&
                    abs(s.c2_b3.value - (1 + s.b_b3.value) / 2) < pow(big(10), -25);
        }
        bool ratio_ok;
        {
            PrecisionGuard pg(40);
            ratio_ok = abs(s.ratio.value - big("1.1961377420")) < big(1e-10);
        }
        const bool ok = c_ok && b_ok && c2_ok && ratio_ok && secs <= 60.0;
        report(3, "C, B, C(2) constants match the reference digits; ratio 1.1961377420", ok,
               std::to_string(secs) + "s");
    }

    // ---- 4: H extrema and threshold scans ------------------------------
    {
        const HExtremum h1 = h_extrema(form_b1(), 1'000'000);
        const HExtremum h3 = h_extrema(form_b3(), 1'000'000);
        const bool ok = h1.location == 461 && std::abs(h1.value - 0.1701069880305239) <= 1e-12 &&
                        h3.location == 3739 && std::abs(h3.value - 0.1554480047272349) <= 1e-12;
        report(4, "H maxima at 461 and 3739 to 1e-12 over bound 10^6", ok,
               "H1=" + std::to_string(h1.value) + ", H3=" + std::to_string(h3.value));
        // past the scan bound the Mertens-type tail keeps H above both
        // levels, so scanning to 10^5 settles the thresholds
        const bool thr_ok = h_threshold_scan(form_b3(), 0.0, 100'000) == 25 &&
                            h_threshold_scan(form_b1(), 0.065, 100'000) == 97;
        report(4, "threshold scans return 25 (H3 >= 0) and 97 (H1 >= 0.065)", thr_ok);
    }

    // ---- 5: envelopes ----------------------------------------------------
    {
        const EnvelopeReport r = check_envelopes(10'000'000);
        const bool ok = r.upper_ok && r.linear_lower_ok && r.linear_upper_ok &&
                        r.upper_min_slack > 0 && r.lower_min_slack > 0 && r.linear_min_slack > 0;
        report(5, "psi_b3 <= S_b3 on [2,10^7]; linear bounds on [37,10^7], [3793,10^7]", ok,
               "min slacks " + std::to_string(r.upper_min_slack) + " @" +
                   std::to_string(r.upper_min_at) + ", " + std::to_string(r.lower_min_slack) +
                   " @" + std::to_string(r.lower_min_at) + ", " +
                   std::to_string(r.linear_min_slack) + " @" + std::to_string(r.linear_min_at));
    }

    // ---- 6: iteration trace ----------------------------------------------
    {
        const IterationTrace w = tilde_iteration(form_b3(), 1e9, 8);
        const bool ok = !w.frozen && std::abs(w.values[0] - (-0.09586)) <= 5e-5 &&
                        std::abs(w.values[1] - (-0.06890)) <= 5e-5 &&
                        std::abs(w.values[3] - (-0.0672)) <= 5e-4;
        report(6, "D- trace at 10^9 passes -0.09586, -0.06890 and settles at -0.0672 by i=4", ok,
               std::to_string(w.values[0]) + ", " + std::to_string(w.values[1]) + ", " +
                   std::to_string(w.values[3]));
    }

    // ---- 7: theorem-7 chain ----------------------------------------------
    {
        const ChainReport rep = theorem7_chain(1.5e11, 8);
        bool ok = rep.all_hold;
        bool envelope_link = false, key_link = false;
        for (const ChainLink& l : rep.links) {
            if (l.name.find("0.0224") != std::string::npos) envelope_link = l.holds && l.margin > 0;
            if (l.name.find("1.08") != std::string::npos && l.name.find("0.9848") != std::string::npos)
                key_link = l.holds && l.margin > 0;
        }
        ok = ok && envelope_link && key_link;
        report(7, "final chain holds at x0 = 1.5e11 with positive margins", ok,
               "envelope sum " + std::to_string(rep.envelope_sum_paper6) + " <= " +
                   std::to_string(rep.envelope_budget));
    }

    // ---- 8: oscillation suprema -------------------------------------------
    {
        const OscSup f = osc_sup(Osc::f);
        const OscSup g = osc_sup(Osc::g);
        const bool ok = std::abs(f.value - 0.55346270119438) <= 1e-11 &&
                        std::abs(g.value - 0.70084312094794) <= 1e-11;
        report(8, "sup|f| = 0.55346270119438, sup|g| = 0.70084312094794", ok);
    }

    // ---- 9: exact identity property suite ----------------------------------
    {
        SelbergTables tables(10'000);
        bool func_ok = true;
        u64 worst_x = 0;
        double worst = 0;
        for (int i = 0; i < 50; ++i) {
            const u64 x = std::max<u64>(
                2, static_cast<u64>(std::pow(10.0, 4.0 * (i + 1) / 50.0)));
            for (const FormClass& c : {form_b1(), form_b3()}) {
                const FunctionalBreakdown b = functional_residual(x, c, tables);
                const double rel = b.residual / static_cast<double>(x);
                if (rel > worst) {
                    worst = rel;
                    worst_x = x;
                }
                func_ok = func_ok && rel <= 1e-9;
            }
        }
        report(9, "functional equation residual/x <= 1e-9 at 50 log-spaced x, both classes",
               func_ok, "worst " + std::to_string(worst) + " at x=" + std::to_string(worst_x));

        report(9, "h(k) = b1(k) for all k <= 10^5", h_convolution_check(100'000));

        {
            SelbergTables t(10'000);
            bool recon = true;
            for (u64 x : {100ull, 1000ull, 10'000ull}) {
                u64 total = 0;
                for (u64 twoj = 1; twoj <= x; twoj *= 2) {
                    for (u64 m = 1; twoj * m * m <= x; ++m)
                        if (t.in(Semigroup::inert_mod4, m))
                            total += t.count(Semigroup::split_mod4, x / (twoj * m * m));
                    if (twoj > x / 2) break;
                }
                recon = recon && total == t.b_count(1, x);
            }
            report(9, "B1 reconstruction from the split-class counter exact at 10^2..10^4", recon);
        }

        {
            bool conv_ok = true;
            for (const FormClass& c : {form_b1(), form_b3()}) {
                for (u64 n = 1; n <= 10'000 && conv_ok; ++n) {
                    double rhs = 0;
                    for (u64 d = 1; d * d <= n; ++d) {
                        if (n % d) continue;
                        const u64 e = n / d;
                        rhs += (is_representable(d, c) ? 1.0 : 0.0) * mangoldt_f(e, c);
                        if (d != e) rhs += (is_representable(e, c) ? 1.0 : 0.0) * mangoldt_f(d, c);
                    }
                    const double lhs =
                        (is_representable(n, c) ? 1.0 : 0.0) * std::log(static_cast<double>(n));
                    conv_ok = conv_ok && std::abs(lhs - rhs) < 1e-12;
                }
            }
            report(9, "convolution identity f log = f * Lambda_f to 10^4 (tol 1e-12)", conv_ok);
        }

        {
            // lambda from the ordered scan equals the b-weighted psi sums
            bool ok = true;
            for (u64 x : {1000ull, 10'000ull, 100'000ull}) {
                const Segment seg = sieve_segment(1, x);
                std::vector<double> psi1(x + 1, 0), psi3(x + 1, 0);
                for (int j : {1, 3}) {
                    Kahan s;
                    PrimePowerStream st(j == 1 ? form_b1() : form_b3(), x);
                    auto e = st.next();
                    auto& psi = j == 1 ? psi1 : psi3;
                    for (u64 n = 1; n <= x; ++n) {
                        while (e && e->n == n) {
                            s.add(e->weight);
                            e = st.next();
                        }
                        psi[n] = s.value();
                    }
                }
                Kahan lam1, lam3, conv1, conv3;
                for (u64 n = 1; n <= x; ++n) {
                    if (seg.test1(n)) {
                        lam1.add(std::log(static_cast<double>(n)));
                        conv1.add(psi1[x / n]);
                    }
                    if (seg.test3(n)) {
                        lam3.add(std::log(static_cast<double>(n)));
                        conv3.add(psi3[x / n]);
                    }
                }
                ok = ok && std::abs(conv1.value() - lam1.value()) <= 1e-8 * lam1.value() &&
                     std::abs(conv3.value() - lam3.value()) <= 1e-8 * lam3.value();
            }
            report(9, "lambda-psi convolution identity at 10^3..10^5 (rel 1e-8)", ok);
        }

        {
            bool mob = true;
            for (u64 k = 1; k <= 10'000 && mob; ++k) {
                int lhs = 0;
                for (u64 m = 1; m * m <= k; ++m)
                    if (k % (m * m) == 0) lhs += moebius_u64(k / (m * m));
                mob = lhs == moebius_u64(sigma0(k));
            }
            report(9, "Moebius-sigma0 identity exhaustive to 10^4", mob);
        }

        {
            bool theta_ok = true;
            for (u64 n : {1ull, 10ull, 1'000'000ull}) {
                const double th = em_harmonic_theta(n);
                theta_ok = theta_ok && th >= 0.0 && th <= 1.0;
            }
            report(9, "Euler-Maclaurin harmonic remainder theta in [0,1]", theta_ok);
        }
    }

    // ---- 10: explicit bands and the crossover ------------------------------
    {
        const auto t0 = std::chrono::steady_clock::now();
        const ConstantSet s = compute_constant_set(30);
        const double c1 = static_cast<double>(s.c_b1.value);
        const double c3 = static_cast<double>(s.c_b3.value);
        u64 xmax = 100'000'000ull;
        if (const char* env = std::getenv("REPRCOUNT_ACCEPT_BAND_XMAX"))
            xmax = std::strtoull(env, nullptr, 10);
        const ExplicitBoundReport r = explicit_bound_check(xmax, c1, c3);
        report(10,
               "9.62 and 8.53 bands hold for 2 <= x <= " + std::to_string(xmax), r.ok1 && r.ok3,
               "max " + std::to_string(r.max_norm1) + " @" + std::to_string(r.at1) + ", " +
                   std::to_string(r.max_norm3) + " @" + std::to_string(r.at3) + ", " +
                   std::to_string(elapsed_since(t0)) + "s");
        const CrossoverResult c = crossover(c1, c3);
        report(10, "crossover exponent 9111 +- 1", c.crosses && std::abs(c.log10_x - 9111) <= 1.0,
               std::to_string(c.log10_x));
    }

    // ---- 11: lemma-5 roots ---------------------------------------------------
    {
        const Lemma5Roots roots = lemma5_roots();
        const bool ok = std::abs(roots.delta_star - 5.44694735) <= 1e-8 &&
                        std::abs(roots.y_star - 0.00999445028) <= 1e-10;
        report(11, "root isolation recovers 5.44694735 and 0.00999445028", ok,
               std::to_string(roots.delta_star) + ", " + std::to_string(roots.y_star));
    }

    if (g_failures) {
        std::printf("%d criterion check(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria PASS\n");
    return 0;
}
