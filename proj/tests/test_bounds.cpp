#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "reprcount/bounds.hpp"
#include "reprcount/verify.hpp"

using namespace reprcount;

namespace {
constexpr double kLogSqrt2 = 0.34657359027997265470861606072909;
constexpr double kLogSqrt3 = 0.54930614433405484569762261846126;
}  // namespace

TEST_CASE("L and U at hand-evaluated points") {
    const BoundParams p{0.5, 0.0, 1.0};
    const double x = std::exp(2.0);
    CHECK(L_func(x, p) == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(U_func(x, p) == Catch::Approx(std::pow(2.0, 1.5)).epsilon(1e-12));

    // degenerate sandwich D- = D+
    const BoundParams d{0.5, 0.3, 0.3};
    CHECK(L_func(100, d) == Catch::Approx(std::pow(std::log(100.0) - 0.3, 0.5)));
    CHECK(L_func(100, d) == Catch::Approx(U_func(100, d)));

    CHECK_THROWS(L_func(1.1, BoundParams{0.5, 0.0, 2.0}));
}

TEST_CASE("L <= U on random parameters, ratio -> 1 at huge x") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dm(-1.0, 0.3), gap(0.0, 1.0), taus(0.1, 2.0);
    for (int i = 0; i < 2000; ++i) {
        BoundParams p;
        p.d_minus = dm(rng);
        p.d_plus = p.d_minus + gap(rng);
        p.tau = taus(rng);
        const double x = std::exp(p.d_plus + 0.1 + 10 * gap(rng));
        CHECK(L_func(x, p) <= U_func(x, p) * (1 + 1e-12));
    }
    const BoundParams p{0.5, -0.5, 0.3};
    const double x = 1e100;
    CHECK(L_func(x, p) / U_func(x, p) == Catch::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("lemma3 propagation criterion") {
    // the final-chain instance: L-side class 1 at x/37, U-side class 3 at x/3
    const BoundParams p1{0.5, 0.0077, 0.2663};
    const BoundParams p3{0.5, -0.0556, 0.276};
    const double c1 = 0.76422365358922066299, c3 = 0.63890940544534388225;
    const double c2 = 1.08 * c3 / (0.9848 * c1);
    CHECK(lemma3_check(37, 3, c2, p1, p3, 1.5e11) == Lemma3Result::holds_for_all_x_ge_x1);
    // absurd factor defeats it
    CHECK(lemma3_check(37, 3, 1e6, p1, p3, 1.5e11) == Lemma3Result::inconclusive);
    // r = s with identical parameters and c2 = 1: L < U strictly when D- < D+
    const BoundParams q{0.5, -0.5, 0.3};
    CHECK(lemma3_check(5, 5, 1.0, q, q, 1e6) == Lemma3Result::inconclusive);
}

TEST_CASE("lemma4 threshold and monotone decrease") {
    const double thr = lemma4_threshold(-kLogSqrt3, 0.276, 3, 25);
    CHECK(thr == Catch::Approx(25 * std::exp(1.01 * 0.276 + 0.01 * kLogSqrt3)).epsilon(1e-12));
    const BoundParams p{0.5, -kLogSqrt3, 0.276};
    CHECK(lemma4_grid_check(p, 3, 25, thr));
    // s = r: the difference still decreases past the threshold
    CHECK(lemma4_grid_check(p, 25, 25, lemma4_threshold(-kLogSqrt3, 0.276, 25, 25)));
    CHECK_THROWS(lemma4_threshold(0.3, 0.2, 1, 2));
}

TEST_CASE("lemma5 inequality and roots") {
    CHECK(lemma5_inequality(1.0, 1.0));
    CHECK_FALSE(lemma5_inequality(0.0099944, 5.44694));
    // the two stated sufficient regions
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ys(0.0, 50.0), ds(0.0, 2.0);
    for (int i = 0; i < 5000; ++i) {
        CHECK(lemma5_inequality(ys(rng), ds(rng)));           // delta <= 2
        CHECK(lemma5_inequality(0.0099945 + ys(rng), 2.0 + ys(rng)));  // y >= y*
    }
    const Lemma5Roots roots = lemma5_roots();
    CHECK(std::abs(roots.delta_star - 5.44694735) < 1e-8);
    CHECK(std::abs(roots.y_star - 0.00999445028) < 1e-10);
}

TEST_CASE("tilde iteration traces") {
    const IterationTrace w = tilde_iteration(form_b3(), 1e9, 8);
    REQUIRE(w.values.size() == 8);
    CHECK_FALSE(w.frozen);
    CHECK(std::abs(w.values[0] - (-0.09586)) < 5e-5);
    CHECK(std::abs(w.values[1] - (-0.06890)) < 5e-5);
    CHECK(w.values[3] >= -0.0672);
    CHECK(std::abs(w.values[3] - (-0.0672)) < 5e-4);
    // nondecreasing after the first improving step, bounded above by 0
    for (size_t i = 1; i < w.values.size(); ++i) CHECK(w.values[i] >= w.values[i - 1] - 1e-15);
    CHECK(w.values.back() <= 0.0);

    const IterationTrace v = tilde_iteration(form_b1(), 1e9, 8);
    CHECK_FALSE(v.frozen);
    CHECK(std::abs(v.values[0] - (-0.012525)) < 5e-5);
    for (size_t i = 1; i < v.values.size(); ++i) CHECK(v.values[i] >= v.values[i - 1] - 1e-15);
    CHECK(v.values.back() <= 0.0 + 0.1);  // v-trace converges to a small positive D-

    CHECK_THROWS(tilde_iteration(form_b3(), 1e4, 4));
}

TEST_CASE("mu sandwich contains the exact values") {
    VerifyOptions o;
    o.x_max = 1'000'000;
    o.samples = {100'000, 1'000'000};
    const VerificationReport r = verify_conjectures(o);
    REQUIRE(r.table_rows.size() == 2);
    const double c1 = 0.76422365358922066299, c3 = 0.63890940544534388225;
    const BoundParams p1{0.5, -kLogSqrt2, 0.2663};
    const BoundParams p3{0.5, -kLogSqrt3, 0.276};
    for (const SampleRow& row : r.table_rows) {
        const double x = static_cast<double>(row.x);
        const auto [lo1, hi1] = mu_sandwich(x, p1, c1);
        CHECK(lo1 <= row.mu1);
        CHECK(row.mu1 <= hi1);
        const auto [lo3, hi3] = mu_sandwich(x, p3, c3);
        CHECK(lo3 <= row.mu3);
        CHECK(row.mu3 <= hi3);
        // iterated parameters (valid from their x0 onward) also contain mu
        const IterationTrace w = tilde_iteration(form_b3(), 1e5, 4);
        if (row.x >= 100'000) {
            const auto [ilo, ihi] = mu_sandwich(x, {0.5, w.values.back(), 0.276}, c3);
            CHECK(ilo <= row.mu3);
            CHECK(row.mu3 <= ihi);
        }
    }
    // the sandwich tightens with x
    const auto [lo_a, hi_a] = mu_sandwich(1e6, p1, c1);
    const auto [lo_b, hi_b] = mu_sandwich(1e8, p1, c1);
    CHECK((hi_b - lo_b) / lo_b < (hi_a - lo_a) / lo_a);
}

TEST_CASE("theorem 7 chain holds at the stated point and beyond") {
    const ChainReport rep = theorem7_chain(1.5e11, 8);
    CHECK(rep.all_hold);
    for (const ChainLink& l : rep.links) CHECK(l.holds);
    // frozen supporting values
    CHECK(std::abs(rep.w8_x0_over_3 - (-0.0555965388)) < 1e-8);
    CHECK(std::abs(rep.v8_x0_over_37 - 0.0077003563) < 1e-8);
    CHECK(std::abs(rep.envelope_sum_paper6 - 0.112704646) < 1e-7);
    CHECK(std::abs(rep.envelope_sum_all7 - 0.113213982) < 1e-7);
    CHECK(std::abs(rep.envelope_budget - 0.112820601) < 1e-7);
    // the informational 7-interval sum overshoots the 0.0224 budget; the
    // rigorous 7-interval link is carried separately and holds
    CHECK(rep.envelope_sum_all7 > rep.envelope_budget);

    const ChainReport wider = theorem7_chain(1e12, 8);
    CHECK(wider.all_hold);
    auto key_margin = [](const ChainReport& r) {
        for (const ChainLink& l : r.links)
            if (l.name.find("1.08") != std::string::npos) return l.margin;
        return -1.0;
    };
    CHECK(key_margin(wider) > key_margin(rep));
    CHECK_THROWS(theorem7_chain(1e8, 8));
}

TEST_CASE("conjecture 3 threshold") {
    const u64 x_star = conjecture3_threshold();
    CHECK(x_star <= 27500);
    CHECK(x_star >= 20000);
    // exact scan below the threshold: mu_1 >= mu_3 everywhere there too
    VerifyOptions o;
    o.x_max = 27500;
    const VerificationReport r = verify_conjectures(o);
    CHECK(r.conjecture3_ok);
    CHECK(r.margin_mu.slack == 0.0);  // equality at x = 1
    CHECK(r.margin_mu.x == 1);
}
