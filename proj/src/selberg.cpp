#include "reprcount/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "reprcount/bigreal.hpp"
#include "reprcount/factor.hpp"
#include "reprcount/kahan.hpp"
#include "reprcount/segment.hpp"

namespace reprcount {

namespace {

constexpr double kGamma = 0.57721566490153286060651209008240243104;
const double kC2 = 2 * std::exp(kGamma);
const double kC3 = std::sqrt(3.0) * std::exp(kGamma);

bool prime_allowed(u64 p, Semigroup s) {
    switch (s) {
        case Semigroup::inert_mod4: return p % 4 == 3;
        case Semigroup::inert_mod3: return p % 3 == 2;
        case Semigroup::inert_mod4_or_2: return p % 4 == 3 || p == 2;
        case Semigroup::inert_mod3_or_3: return p % 3 == 2 || p == 3;
        case Semigroup::split_mod4: return p % 4 == 1;
        case Semigroup::split_mod3: return p % 3 == 1;
    }
    return false;
}

using u32 = std::uint32_t;

// smallest-prime-factor sieve
std::vector<u32> spf_table(u64 n) {
    std::vector<u32> spf(n + 1, 0);
    for (u64 i = 2; i <= n; ++i) {
        if (spf[i] == 0)
            for (u64 j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = static_cast<u32>(i);
    }
    return spf;
}

u64 odd_part(u64 d) {
    while (d % 2 == 0) d /= 2;
    return d;
}
u64 coprime3_part(u64 d) {
    while (d % 3 == 0) d /= 3;
    return d;
}

u64 count_congruent(double y, u64 a, u64 q) {
    // #{1 <= k <= y : k = a (mod q)}, a in [1, q]
    if (y < static_cast<double>(a)) return 0;
    return (static_cast<u64>(std::floor(y)) - a) / q + 1;
}

}  // namespace

u64 sigma0(u64 k) {
    if (k == 0) throw std::invalid_argument("sigma0: k must be positive");
    u64 r = 1;
    for (auto [p, e] : factorize(k).pairs)
        if (e % 2 == 1) r *= p;
    return r;
}

int moebius_u64(u64 n) {
    const Factorization f = factorize(n);
    for (auto [p, e] : f.pairs)
        if (e > 1) return 0;
    return f.pairs.size() % 2 == 0 ? 1 : -1;
}

struct SelbergTables::Impl {
    u64 xmax;
    std::vector<u32> spf;
    // memberships
    std::vector<char> in_p3, in_p2, in_p3p, in_p2p, in_q4, in_q3;
    std::vector<char> b1, b3;
    // prefix counts
    std::vector<u64> cnt_q4, cnt_q3, cnt_p3, cnt_p2, cnt_p3p, cnt_p2p, cnt_b1, cnt_b3;
    std::vector<signed char> musig;  // mu(sigma0(n))
    std::vector<double> harm_odd, harm_no3;

    explicit Impl(u64 n) : xmax(n) {
        spf = spf_table(n);
        auto member = [&](Semigroup s) {
            std::vector<char> v(n + 1, 0);
            v[1] = 1;
            for (u64 i = 2; i <= n; ++i) {
                const u64 p = spf[i];
                v[i] = prime_allowed(p, s) && v[i / p];
            }
            return v;
        };
        in_p3 = member(Semigroup::inert_mod4);
        in_p2 = member(Semigroup::inert_mod3);
        in_p3p = member(Semigroup::inert_mod4_or_2);
        in_p2p = member(Semigroup::inert_mod3_or_3);
        in_q4 = member(Semigroup::split_mod4);
        in_q3 = member(Semigroup::split_mod3);

        // representability and mu(sigma0) via exponent parities along spf
        b1.assign(n + 1, 0);
        b3.assign(n + 1, 0);
        musig.assign(n + 1, 0);
        b1[1] = b3[1] = 1;
        musig[1] = 1;
        std::vector<u32> rest(n + 1, 1);   // i with all spf factors removed
        std::vector<char> odd_exp(n + 1, 0);  // parity of the spf exponent
        for (u64 i = 2; i <= n; ++i) {
            const u64 p = spf[i];
            const u64 q = i / p;
            if (q % p == 0 && spf[q] == p) {
                odd_exp[i] = !odd_exp[q];
                rest[i] = rest[q];
            } else {
                odd_exp[i] = 1;
                rest[i] = static_cast<u32>(q);
            }
            const u64 r = rest[i];  // i = p^e * r with p not | r
            b1[i] = b1[r] && (p % 4 != 3 || !odd_exp[i]);
            b3[i] = b3[r] && (p % 3 != 2 || !odd_exp[i]);
            musig[i] = static_cast<signed char>(odd_exp[i] ? -musig[r] : musig[r]);
        }

        auto prefix = [&](const std::vector<char>& v) {
            std::vector<u64> c(n + 1, 0);
            for (u64 i = 1; i <= n; ++i) c[i] = c[i - 1] + (v[i] ? 1 : 0);
            return c;
        };
        cnt_q4 = prefix(in_q4);
        cnt_q3 = prefix(in_q3);
        cnt_p3 = prefix(in_p3);
        cnt_p2 = prefix(in_p2);
        cnt_p3p = prefix(in_p3p);
        cnt_p2p = prefix(in_p2p);
        cnt_b1 = prefix(b1);
        cnt_b3 = prefix(b3);

        harm_odd.assign(n + 1, 0);
        harm_no3.assign(n + 1, 0);
        Kahan ho, h3;
        for (u64 i = 1; i <= n; ++i) {
            if (i % 2 == 1) ho.add(1.0 / static_cast<double>(i));
            if (i % 3 != 0) h3.add(1.0 / static_cast<double>(i));
            harm_odd[i] = ho.value();
            harm_no3[i] = h3.value();
        }
    }

    const std::vector<char>& membership(Semigroup s) const {
        switch (s) {
            case Semigroup::inert_mod4: return in_p3;
            case Semigroup::inert_mod3: return in_p2;
            case Semigroup::inert_mod4_or_2: return in_p3p;
            case Semigroup::inert_mod3_or_3: return in_p2p;
            case Semigroup::split_mod4: return in_q4;
            case Semigroup::split_mod3: return in_q3;
        }
        throw std::logic_error("membership");
    }
    const std::vector<u64>& counts(Semigroup s) const {
        switch (s) {
            case Semigroup::inert_mod4: return cnt_p3;
            case Semigroup::inert_mod3: return cnt_p2;
            case Semigroup::inert_mod4_or_2: return cnt_p3p;
            case Semigroup::inert_mod3_or_3: return cnt_p2p;
            case Semigroup::split_mod4: return cnt_q4;
            case Semigroup::split_mod3: return cnt_q3;
        }
        throw std::logic_error("counts");
    }
};

SelbergTables::SelbergTables(u64 x_max) : impl_(std::make_unique<Impl>(x_max)) {
    if (x_max < 1) throw std::invalid_argument("SelbergTables: x_max >= 1");
}
SelbergTables::~SelbergTables() = default;

u64 SelbergTables::x_max() const { return impl_->xmax; }
bool SelbergTables::in(Semigroup s, u64 n) const { return impl_->membership(s)[n]; }
u64 SelbergTables::count(Semigroup s, u64 x) const {
    return impl_->counts(s)[std::min(x, impl_->xmax)];
}
u64 SelbergTables::b_count(int j, u64 x) const {
    const auto& c = j == 1 ? impl_->cnt_b1 : impl_->cnt_b3;
    return c[std::min(x, impl_->xmax)];
}
bool SelbergTables::representable(int j, u64 n) const {
    return (j == 1 ? impl_->b1 : impl_->b3)[n];
}
int SelbergTables::mu_sigma0(u64 n) const { return impl_->musig[n]; }
double SelbergTables::harmonic_odd(double z) const {
    if (z < 1) return 0;
    return impl_->harm_odd[std::min<u64>(static_cast<u64>(std::floor(z)), impl_->xmax)];
}
double SelbergTables::harmonic_no3(double z) const {
    if (z < 1) return 0;
    return impl_->harm_no3[std::min<u64>(static_cast<u64>(std::floor(z)), impl_->xmax)];
}
double SelbergTables::f_osc(double z) const {
    return z * harmonic_odd(z) - z / 2 * std::log(kC2 * z);
}
double SelbergTables::g_osc(double z) const {
    return z * harmonic_no3(z) - 2 * z / 3 * std::log(kC3 * z);
}

u64 semigroup_count(u64 x, Semigroup s) {
    if (x < 1) throw std::invalid_argument("semigroup_count: x >= 1");
    SelbergTables t(x);
    return t.count(s, x);
}

double osc_eval(double z, Osc which) {
    if (z < 1) throw std::domain_error("osc_eval: z >= 1");
    Kahan sum;
    const u64 zi = static_cast<u64>(std::floor(z));
    for (u64 n = 1; n <= zi; ++n) {
        if (which == Osc::f ? (n % 2 == 1) : (n % 3 != 0)) sum.add(1.0 / static_cast<double>(n));
    }
    return which == Osc::f ? z * sum.value() - z / 2 * std::log(kC2 * z)
                           : z * sum.value() - 2 * z / 3 * std::log(kC3 * z);
}

OscSup osc_sup(Osc which) {
    constexpr u64 cutoff = 50;
    OscSup best{1.0, false, 0.0};
    Kahan sum;  // running harmonic sum over admitted n
    auto consider = [&](double z, bool left, double value) {
        if (std::abs(value) > best.value) best = {z, left, std::abs(value)};
    };
    auto weight = [&](double z, double s) {
        return which == Osc::f ? z * s - z / 2 * std::log(kC2 * z)
                               : z * s - 2 * z / 3 * std::log(kC3 * z);
    };
    double prev_s = 0;
    for (u64 n = 1; n <= cutoff; ++n) {
        const bool admitted = which == Osc::f ? (n % 2 == 1) : (n % 3 != 0);
        if (admitted && n > 1) consider(static_cast<double>(n), true, weight(n, prev_s));
        if (admitted) sum.add(1.0 / static_cast<double>(n));
        const double s = sum.value();
        consider(static_cast<double>(n), false, weight(n, s));
        // interior critical point of the smooth piece on (n, n+1):
        // d/dz [z s - (z/w) log(c z)] = s - (log(c z) + 1)/w_inv
        double zc;
        if (which == Osc::f)
            zc = std::exp(2 * s - 1) / kC2;
        else
            zc = std::exp(1.5 * s - 1) / kC3;
        if (zc > n && zc < n + 1) consider(zc, false, weight(zc, s));
        prev_s = s;
    }
    return best;
}

double em_harmonic_theta(u64 n) {
    if (n == 0) throw std::invalid_argument("em_harmonic_theta: n >= 1");
    PrecisionGuard pg(45);
    big h = 0;
    for (u64 m = 1; m <= n; ++m) h += big(1) / m;
    const big nn(n);
    const big resid = h - log(nn) - mp_euler() - 1 / (2 * nn) + 1 / (12 * nn * nn);
    return static_cast<double>(resid * 60 * nn * nn * nn * nn);
}

bool h_convolution_check(u64 k_max) {
    SelbergTables t(k_max);
    std::vector<int> h(k_max + 1, 0);
    for (u64 d = 1; d <= k_max; ++d) {
        if (!t.in(Semigroup::inert_mod4_or_2, d)) continue;
        const int w = t.mu_sigma0(odd_part(d));
        for (u64 n = 1; d * n <= k_max; n += 2) h[d * n] += w;
    }
    for (u64 k = 1; k <= k_max; ++k)
        if (h[k] != (t.representable(1, k) ? 1 : 0)) return false;
    return true;
}

FunctionalBreakdown functional_residual(u64 x, const FormClass& c, const SelbergTables& t) {
    if (x < 2 || x > t.x_max()) throw std::invalid_argument("functional_residual: 2 <= x <= tables");
    FunctionalBreakdown out;
    out.x = x;
    out.j = c.j;
    const bool j1 = c.j == 1;
    const double cc = j1 ? kC2 : kC3;
    const u64 base = j1 ? 2 : 3;     // the power-of prime in the m-decomposition
    const u64 modq = j1 ? 4 : 3;
    const Semigroup inert = j1 ? Semigroup::inert_mod4 : Semigroup::inert_mod3;
    const Semigroup inertp = j1 ? Semigroup::inert_mod4_or_2 : Semigroup::inert_mod3_or_3;
    const Semigroup split = j1 ? Semigroup::split_mod4 : Semigroup::split_mod3;
    const double xd = static_cast<double>(x);

    // T1 = sum over inert primes p, r >= 1 of log p * B_j(x / p^(2r))
    {
        Kahan t1;
        for (u64 p : small_primes()) {
            if (p * p > x) break;
            if (!prime_allowed(p, inert)) continue;
            const double lp = std::log(static_cast<double>(p));
            for (u64 q = p * p; q <= x; q *= p * p) {
                t1.add(lp * static_cast<double>(t.b_count(c.j, x / q)));
                if (q > x / (p * p)) break;
            }
        }
        out.t1 = t1.value();
    }

    // T2 = sum over (j, m in inert) of log(base^j m^2) count_split(x / (base^j m^2))
    {
        Kahan t2;
        for (u64 bj = 1; bj <= x; bj *= base) {
            for (u64 m = 1; bj * m * m <= x; ++m) {
                if (!t.in(inert, m)) continue;
                const u64 q = bj * m * m;
                t2.add(std::log(static_cast<double>(q)) *
                       static_cast<double>(t.count(split, x / q)));
            }
            if (bj > x / base) break;
        }
        out.t2 = t2.value();
    }

    // T3 and T4 over d in the primed semigroup
    {
        Kahan t3, t4;
        for (u64 d = 1; d <= x; ++d) {
            if (!t.in(inertp, d)) continue;
            const u64 dp = j1 ? odd_part(d) : coprime3_part(d);
            const int w = t.mu_sigma0(dp);
            const double y = xd / static_cast<double>(d);
            const double lg = std::log(cc * y);
            const double cnt =
                static_cast<double>(count_congruent(y, dp % modq, modq));
            t3.add(w * lg * (cnt - y / static_cast<double>(modq)));
            t4.add(w * (j1 ? t.f_osc(y) : t.g_osc(y)));
        }
        out.t3 = t3.value();
        out.t4 = -0.5 * t4.value();
    }

    // lhs = B(x) log(c x) - (x/2) int_1^x B(t)/t^2 dt (exact step integral)
    {
        Kahan integral;
        for (u64 n = 1; n < x; ++n) {
            const double bn = static_cast<double>(t.b_count(c.j, n));
            integral.add(bn * (1.0 / static_cast<double>(n) - 1.0 / static_cast<double>(n + 1)));
        }
        const double bx = static_cast<double>(t.b_count(c.j, x));
        out.lhs = bx * std::log(cc * xd) - xd / 2 * integral.value();
        out.rhs = -out.t1 + out.t2 + out.t3 + out.t4 + bx / 2;
        out.residual = std::abs(out.lhs - out.rhs);
    }
    return out;
}

FunctionalBreakdown functional_residual(u64 x, const FormClass& c) {
    SelbergTables t(x);
    return functional_residual(x, c, t);
}

TermBoundReport term_bound_check(u64 x_max) {
    if (x_max > 200000) throw std::invalid_argument("term_bound_check: x_max budget is 1e5");
    TermBoundReport rep;
    rep.all_hold = true;
    SelbergTables t(x_max);

    auto fail = [&](u64 x, const std::string& what) {
        rep.all_hold = false;
        if (rep.failures.size() < 32) rep.failures.push_back(what + " at x=" + std::to_string(x));
    };

    // (sharper): count_split_mod4(x) <= floor((x+11)/12) + floor((x+7)/12), every x
    for (u64 x = 1; x <= x_max; ++x) {
        if (t.count(Semigroup::split_mod4, x) > (x + 11) / 12 + (x + 7) / 12) {
            fail(x, "psi4 sharper bound");
            break;
        }
    }

    std::vector<u64> xs;
    for (double v = 16; v <= static_cast<double>(x_max); v *= 1.5)
        xs.push_back(static_cast<u64>(v));
    if (xs.empty() || xs.back() != x_max) xs.push_back(x_max);

    for (u64 x : xs) {
        const double xd = static_cast<double>(x);
        const FunctionalBreakdown a = functional_residual(x, form_b1(), t);
        const FunctionalBreakdown b = functional_residual(x, form_b3(), t);
        rep.max_i1 = std::max(rep.max_i1, a.t1 / xd);
        rep.max_i2 = std::max(rep.max_i2, a.t2 / xd);
        rep.max_i3 = std::max(rep.max_i3, std::abs(a.t3) / xd);
        rep.max_i4 = std::max(rep.max_i4, std::abs(a.t4) / xd);
        rep.max_j1 = std::max(rep.max_j1, b.t1 / xd);
        rep.max_j2 = std::max(rep.max_j2, b.t2 / xd);
        rep.max_j3 = std::max(rep.max_j3, std::abs(b.t3) / xd);
        rep.max_j4 = std::max(rep.max_j4, std::abs(b.t4) / xd);
        if (!(a.t1 >= 0 && a.t1 < 0.23 * xd)) fail(x, "I1 bound");
        if (!(a.t2 >= 0 && a.t2 < 2.7 * xd)) fail(x, "I2 bound");
        if (!(std::abs(a.t3) < 2.68 * xd)) fail(x, "I3 bound");
        if (!(std::abs(a.t4) <= 0.277 * xd)) fail(x, "I4 bound");
        if (!(b.t1 >= 0 && b.t1 < 0.36 * xd)) fail(x, "J1 bound");
        if (!(b.t2 >= 0 && b.t2 < 2.7 * xd)) fail(x, "J2 bound");
        if (!(std::abs(b.t3) < 2.06 * xd)) fail(x, "J3 bound");
        if (!(std::abs(b.t4) <= 0.36 * xd)) fail(x, "J4 bound");
    }
    return rep;
}

ExplicitBoundReport explicit_bound_check(u64 x_max, double c_b1, double c_b3) {
    ExplicitBoundReport rep;
    rep.x_max = x_max;
    rep.ok1 = rep.ok3 = true;
    u64 b1 = 0, b3 = 0;
    const u64 seg_len = 1u << 20;
    for (u64 lo = 1; lo <= x_max; lo += seg_len) {
        const u64 hi = std::min(x_max, lo + seg_len - 1);
        const Segment seg = sieve_segment(lo, hi);
        for (u64 n = lo; n <= hi; ++n) {
            if (seg.test1(n)) ++b1;
            if (seg.test3(n)) ++b3;
            if (n < 2) continue;
            const double xd = static_cast<double>(n);
            const double lg = std::log(xd);
            const double main = xd / std::sqrt(lg);
            const double norm1 = std::abs(static_cast<double>(b1) - c_b1 * main) * lg / xd;
            const double norm3 = std::abs(static_cast<double>(b3) - c_b3 * main) * lg / xd;
            if (norm1 > rep.max_norm1) {
                rep.max_norm1 = norm1;
                rep.at1 = n;
            }
            if (norm3 > rep.max_norm3) {
                rep.max_norm3 = norm3;
                rep.at3 = n;
            }
        }
    }
    rep.ok1 = rep.max_norm1 <= 9.62;
    rep.ok3 = rep.max_norm3 <= 8.53;
    return rep;
}

CrossoverResult crossover(double c_b1, double c_b3, double e1, double e3) {
    CrossoverResult r;
    if (!(c_b1 > c_b3)) {
        r.crosses = false;
        r.log10_x = std::numeric_limits<double>::infinity();
        return r;
    }
    const double root = (e1 + e3) / (c_b1 - c_b3);
    r.crosses = true;
    r.log10_x = root * root / std::log(10.0);
    return r;
}

}  // namespace reprcount
