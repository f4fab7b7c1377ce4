#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "reprcount/selberg.hpp"

using namespace reprcount;

namespace {
constexpr double kGamma = 0.57721566490153286060651209008240243104;
}

TEST_CASE("sigma0 basics") {
    CHECK(sigma0(12) == 3);
    CHECK(sigma0(36) == 1);
    CHECK(sigma0(8) == 2);
    CHECK(sigma0(1) == 1);
    CHECK(sigma0(360) == 10);  // 2^3 3^2 5 -> 2*5
}

TEST_CASE("moebius-sigma0 identity, exhaustive to 10^4") {
    SelbergTables t(10'000);
    for (u64 k = 1; k <= 10'000; ++k) {
        int lhs = 0;
        for (u64 m = 1; m * m <= k; ++m)
            if (k % (m * m) == 0) lhs += moebius_u64(k / (m * m));
        CHECK(lhs == moebius_u64(sigma0(k)));
        CHECK(lhs == t.mu_sigma0(k));
    }
}

TEST_CASE("semigroup counters") {
    CHECK(semigroup_count(10, Semigroup::inert_mod4) == 4);   // 1, 3, 7, 9
    CHECK(semigroup_count(10, Semigroup::inert_mod3) == 6);   // 1, 2, 4, 5, 8, 10
    CHECK(semigroup_count(1, Semigroup::inert_mod4) == 1);
    CHECK(semigroup_count(10, Semigroup::split_mod4) == 2);   // 1, 5
    CHECK(semigroup_count(100, Semigroup::split_mod4) == 15);
    CHECK(semigroup_count(10, Semigroup::inert_mod4_or_2) == 8);  // adds 2, 4, 6, 8
    // membership is multiplicative
    SelbergTables t(10'000);
    for (u64 m = 2; m <= 100; ++m)
        for (u64 n = 2; n <= 100; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(t.in(Semigroup::inert_mod4, m * n) ==
                  (t.in(Semigroup::inert_mod4, m) && t.in(Semigroup::inert_mod4, n)));
        }
}

TEST_CASE("oscillation functions and their suprema") {
    const double supf = 1.5 * (std::log(6.0) + kGamma) - 3;
    const double supg = 8.0 / 3 * std::log(4 * std::sqrt(3.0) * std::exp(kGamma)) - 6;
    CHECK(std::abs(supf - 0.55346270119438) < 1e-11);
    CHECK(std::abs(supg - 0.70084312094794) < 1e-11);

    const OscSup f = osc_sup(Osc::f);
    CHECK(f.location == 3.0);
    CHECK(f.left_limit);
    CHECK(std::abs(f.value - supf) < 1e-12);

    const OscSup g = osc_sup(Osc::g);
    CHECK(g.location == 4.0);
    CHECK(g.left_limit);
    CHECK(std::abs(g.value - supg) < 1e-12);

    CHECK(osc_eval(1.0, Osc::f) ==
          Catch::Approx(1 - (std::log(2.0) + kGamma) / 2).epsilon(1e-13));

    // the interior reduction: nothing on [1, 11] beats |f(3^-)|
    for (double z = 1.0; z <= 11.0; z += 1.0 / 128) {
        CHECK(std::abs(osc_eval(z, Osc::f)) <= supf + 1e-9);
    }
}

TEST_CASE("Euler-Maclaurin harmonic remainder stays in [0, 1]") {
    for (u64 n : {1ull, 2ull, 10ull, 1000ull, 1'000'000ull}) {
        const double theta = em_harmonic_theta(n);
        CHECK(theta >= 0.0);
        CHECK(theta <= 1.0);
    }
}

TEST_CASE("h convolution reproduces b1") {
    CHECK(h_convolution_check(10'000));
    // spot checks straight from the divisor sum
    SelbergTables t(32);
    auto h = [&](u64 k) {
        int s = 0;
        for (u64 d = 1; d <= k; ++d) {
            if (k % d) continue;
            if ((k / d) % 2 == 0) continue;
            if (!t.in(Semigroup::inert_mod4_or_2, d)) continue;
            u64 dp = d;
            while (dp % 2 == 0) dp /= 2;
            s += moebius_u64(sigma0(dp));
        }
        return s;
    };
    CHECK(h(9) == 1);
    CHECK(t.representable(1, 9));
    CHECK(h(3) == 0);
    CHECK_FALSE(t.representable(1, 3));
}

TEST_CASE("functional equation residuals") {
    SelbergTables t(10'000);
    const FunctionalBreakdown tiny = functional_residual(2, form_b1(), t);
    CHECK(tiny.residual <= 1e-10);
    const FunctionalBreakdown mid = functional_residual(1000, form_b1(), t);
    CHECK(mid.residual / 1000 <= 1e-10);
    const FunctionalBreakdown hex = functional_residual(10'000, form_b3(), t);
    CHECK(hex.residual / 10'000 <= 1e-10);
    // I1(2) = 0: no inert prime square is <= 2
    CHECK(tiny.t1 == 0.0);
}

TEST_CASE("B1 reconstruction from the split-class counter") {
    SelbergTables t(10'000);
    for (u64 x : {100ull, 1000ull, 10'000ull}) {
        u64 total = 0;
        for (u64 twoj = 1; twoj <= x; twoj *= 2) {
            for (u64 m = 1; twoj * m * m <= x; ++m) {
                if (!t.in(Semigroup::inert_mod4, m)) continue;
                total += t.count(Semigroup::split_mod4, x / (twoj * m * m));
            }
            if (twoj > x / 2) break;
        }
        CHECK(total == t.b_count(1, x));
    }
    // the mod-3 analogue
    for (u64 x : {100ull, 1000ull, 10'000ull}) {
        u64 total = 0;
        for (u64 threej = 1; threej <= x; threej *= 3) {
            for (u64 m = 1; threej * m * m <= x; ++m) {
                if (!t.in(Semigroup::inert_mod3, m)) continue;
                total += t.count(Semigroup::split_mod3, x / (threej * m * m));
            }
            if (threej > x / 3) break;
        }
        CHECK(total == t.b_count(3, x));
    }
}

TEST_CASE("term bounds at the sampled points") {
    const TermBoundReport rep = term_bound_check(10'000);
    CHECK(rep.all_hold);
    CHECK(rep.failures.empty());
    CHECK(rep.max_i1 < 0.23);
    CHECK(rep.max_i2 < 2.7);
    CHECK(rep.max_i3 < 2.68);
    CHECK(rep.max_i4 <= 0.277);
    CHECK(rep.max_j1 < 0.36);
    CHECK(rep.max_j2 < 2.7);
    CHECK(rep.max_j3 < 2.06);
    CHECK(rep.max_j4 <= 0.36);
}

TEST_CASE("sharper split-mod4 counter bound") {
    SelbergTables t(1000);
    CHECK(t.count(Semigroup::split_mod4, 100) == 15);
    for (u64 x = 1; x <= 1000; ++x)
        CHECK(t.count(Semigroup::split_mod4, x) <= (x + 11) / 12 + (x + 7) / 12);
}

TEST_CASE("almost periodicity of f and g") {
    SelbergTables t(100'008);
    auto dev_f = [&](double N) {
        double worst = 0;
        for (double z = N; z <= N + 6; z += 1.0 / 64) {
            const double limit = 0.5 - (z - 1) / 2 + std::floor((z - 1) / 2);
            worst = std::max(worst, std::abs(t.f_osc(z) - limit));
        }
        return worst;
    };
    auto dev_g = [&](double N) {
        double worst = 0;
        for (double z = N; z <= N + 6; z += 1.0 / 64) {
            const double frac1 = (z - 1) / 3 - std::floor((z - 1) / 3);
            const double frac2 = (z + 1) / 3 - std::floor((z + 1) / 3);
            const double limit = 1 - frac1 - frac2;
            worst = std::max(worst, std::abs(t.g_osc(z) - limit));
        }
        return worst;
    };
    CHECK(dev_f(100'000.0) < dev_f(100.0));
    CHECK(dev_g(100'000.0) < dev_g(100.0));
    CHECK(dev_f(100'000.0) < 1e-4);
    CHECK(dev_g(100'000.0) < 1e-4);
}

TEST_CASE("explicit bands at 10^6") {
    const double c1 = 0.76422365358922066299, c3 = 0.63890940544534388225;
    const ExplicitBoundReport rep = explicit_bound_check(1'000'000, c1, c3);
    CHECK(rep.ok1);
    CHECK(rep.ok3);
    // observed maxima sit far inside the 9.62 / 8.53 bands, attained at
    // small x
    CHECK(rep.max_norm1 < 0.6);
    CHECK(rep.max_norm3 < 0.5);
    CHECK(rep.max_norm1 > 0.3);
    CHECK(rep.max_norm3 > 0.3);
    CHECK(rep.at1 < 100);
    CHECK(rep.at3 < 100);
}

TEST_CASE("crossover exponent") {
    const double c1 = 0.76422365358922066299, c3 = 0.63890940544534388225;
    const CrossoverResult r = crossover(c1, c3);
    CHECK(r.crosses);
    CHECK(std::abs(r.log10_x - 9111) <= 1.0);
    // halving both band widths quarters the exponent
    const CrossoverResult h = crossover(c1, c3, 9.62 / 2, 8.53 / 2);
    CHECK(h.log10_x == Catch::Approx(r.log10_x / 4).epsilon(1e-12));
    // equal constants never cross
    CHECK_FALSE(crossover(c3, c3).crosses);
    CHECK(std::isinf(crossover(c3, c3).log10_x));
}
