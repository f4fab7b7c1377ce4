#include "reprcount/constants.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "reprcount/factor.hpp"

namespace reprcount {

namespace {

int guard(int digits) { return digits + 15; }

CharacterSpec character_for(const FormClass& c) {
    return c.j == 1 ? chi_minus4() : chi_minus3();
}

int moebius(u64 n) {
    const Factorization f = factorize(n);
    for (auto [p, e] : f.pairs)
        if (e > 1) return 0;
    return f.pairs.size() % 2 == 0 ? 1 : -1;
}

// Cached zeta / L evaluations at integer arguments (the recursion and the
// prime-zeta series hit the same handful of points repeatedly).
struct EvalCache {
    int digits;
    CharacterSpec chi3 = chi_minus3();
    std::map<long, BigReal> zeta, lchi3;

    const BigReal& zeta_at(long s) {
        auto it = zeta.find(s);
        if (it == zeta.end()) it = zeta.emplace(s, zeta_em(big(s), digits)).first;
        return it->second;
    }
    const BigReal& l3_at(long s) {
        auto it = lchi3.find(s);
        if (it == lchi3.end()) it = lchi3.emplace(s, l_chi(big(s), chi3, digits)).first;
        return it->second;
    }
};

}  // namespace

BigReal landau_ramanujan(const FormClass& c, int digits, int min_terms) {
    if (min_terms < 1) throw std::invalid_argument("landau_ramanujan: min_terms >= 1");
    const int wd = guard(digits);
    PrecisionGuard pg(wd);
    const CharacterSpec chi = character_for(c);
    const int q = c.special_prime;
    // tail of log C beyond level m is below 3 * qtail^(-2^(m+1)), where the
    // innermost surviving prime is 3 for j=1 and 2 for j=3
    const double qtail = c.j == 1 ? 3.0 : 2.0;
    int m = min_terms;
    while (std::pow(2.0, m + 1) * std::log(qtail) / std::log(10.0) < digits + 11) ++m;

    big value = 1 / sqrt(big(2));
    if (c.j == 3) value /= pow(big(3), big(1) / 4);
    big rel_err = 0;
    for (int n = 1; n <= m; ++n) {
        const long s = 1L << n;
        const BigReal z = zeta_em(big(s), wd);
        const BigReal l = l_chi(big(s), chi, wd);
        const big bracket = (1 - pow(big(q), -big(s))) * z.value / l.value;
        const big expo = 1 / pow(big(2), n + 1);
        value *= pow(bracket, expo);
        rel_err += expo * (z.error / z.value + l.error / abs(l.value)) * 2;
    }
    const big tail = 3 * pow(big(qtail), -big(1L << (m + 1)));
    const big error = abs(value) * (rel_err + tail) + pow(big(10), -(digits + 8)) * abs(value);
    return {value, error};
}

SecondOrderResult second_order(const FormClass& c, int digits, int levels) {
    if (levels < 1) throw std::invalid_argument("second_order: levels >= 1");
    const int wd = guard(digits);
    PrecisionGuard pg(wd);
    const CharacterSpec chi = character_for(c);
    const int q = c.special_prime;

    // prime sum S = sum_{p inert} log p / (p^2 - 1) by the doubling identity
    big S = 0, S_err = 0;
    for (int n = 1; n <= levels; ++n) {
        const big s(1L << n);
        const BigReal z = zeta_em(s, wd);
        const BigReal zp = zeta_prime_em(s, wd);
        const BigReal l = l_chi(s, chi, wd);
        const BigReal lp = l_chi_prime(s, chi, wd);
        S += (lp.value / l.value - zp.value / z.value - log(big(q)) / (pow(big(q), s) - 1)) / 2;
        S_err += (lp.error + abs(lp.value / l.value) * l.error) / abs(l.value) +
                 (zp.error + abs(zp.value / z.value) * z.error) / z.value;
    }
    // remaining tail: primes in the inert class at exponent 2^(levels+1),
    // summed directly (it collapses to a handful of terms)
    const long N = 1L << (levels + 1);
    for (u64 p : small_primes()) {
        if (p > 300) break;
        if (classify_prime(p, c) != PrimeKind::inert) continue;
        S += log(big(p)) / (pow(big(p), N) - 1);
    }
    S_err += pow(big(300), -(N - 4));  // integral bound on primes > 300

    const BigReal lp1 = l_chi_prime(big(1), chi, wd);
    const BigReal l1 = l_chi(big(1), chi, wd);
    const big log_special = c.j == 1 ? log(big(2)) : big(log(big(3)) / 2);
    const big ratio = lp1.value / l1.value;
    const big ratio_err = (lp1.error + abs(ratio) * l1.error) / abs(l1.value);

    BigReal b;
    b.value = (-mp_euler() - ratio + log_special) / 2 + S;
    b.error = ratio_err / 2 + S_err + pow(big(10), -(digits + 8));
    BigReal c2{(1 + b.value) / 2, b.error / 2 + pow(big(10), -(digits + 10))};
    return {b, c2};
}

BigReal prime_zeta_1mod3(long s, int digits) {
    // P_1(s) = (P(s) - 3^{-s} + P_chi(s)) / 2 with
    //   P(s)     = sum_k mu(k)/k log zeta(ks)
    //   P_chi(s) = sum_k mu(k)/k log L(ks, chi^k), chi^k principal for even k
    const int wd = guard(digits);
    PrecisionGuard pg(wd);
    static thread_local EvalCache cache{0};
    if (cache.digits != wd) {
        cache = EvalCache{wd};
    }
    const big tol = pow(big(10), -(digits + 8));
    big total = 0, err = 0;
    for (long k = 1;; ++k) {
        const big bound = 2 * pow(big(2), -big(k * s)) / k;
        if (bound < tol) {
            err += 4 * bound;
            break;
        }
        const int mu = moebius(static_cast<u64>(k));
        if (mu == 0) continue;
        big term;
        if (k % 2 == 1) {
            const BigReal l = cache.l3_at(k * s);
            term = mu * log(l.value) / k;
            err += l.error / abs(l.value);
        } else {
            const BigReal z = cache.zeta_at(k * s);
            term = mu * log(z.value * (1 - pow(big(3), -big(k * s)))) / k;
            err += z.error / z.value;
        }
        total += term;
        if (k > 400) throw std::runtime_error("precision budget exceeded");
    }
    // P(s) over all primes:
    big ptot = 0, perr = 0;
    for (long k = 1;; ++k) {
        const big bound = 2 * pow(big(2), -big(k * s)) / k;
        if (bound < tol) {
            perr += 4 * bound;
            break;
        }
        const int mu = moebius(static_cast<u64>(k));
        if (mu == 0) continue;
        const BigReal z = cache.zeta_at(k * s);
        ptot += mu * log(z.value) / k;
        perr += z.error / z.value;
        if (k > 400) throw std::runtime_error("precision budget exceeded");
    }
    const big value = (ptot - pow(big(3), -big(s)) + total) / 2;
    return {value, (err + perr) / 2 + tol};
}

RamanujanTauResult ramanujan_tau(int digits) {
    const int wd = guard(digits);
    PrecisionGuard pg(wd);

    // B_T = B_{b_3} - sum_{p=1 (3)} (2p+1) log p / ((p^2+p+1)(p+1)) - log sqrt(3)
    const SecondOrderResult b3 = second_order(form_b3(), digits);
    constexpr u64 cutoff = 2'000'000;
    big prime_sum = 0;
    for_primes_in(2, cutoff, [&](u64 p) {
        if (p % 3 != 1) return;
        const big bp(p);
        prime_sum += (2 * bp + 1) * log(bp) / ((bp * bp + bp + 1) * (bp + 1));
    });
    // tail: (2p+1)/((p^2+p+1)(p+1)) <= 2/p^2, and sum_{p>P} log p / p^2 is
    // below (log P + 1)/P + log P/P^2 by comparison with the integer sum
    const big logP = log(big(cutoff));
    const big tail = 2 * ((logP + 1) / cutoff + logP / (big(cutoff) * cutoff));

    RamanujanTauResult out;
    out.b_t.value = b3.b.value - prime_sum - log(big(3)) / 2;
    out.b_t.error = b3.b.error + tail;
    out.coeff = {(1 + out.b_t.value) / 2, out.b_t.error / 2};

    // C = 2 C_{b_3} prod_{p=1 (3)} (1 - p^-2)/(1 - p^-3), the product taken
    // through prime-zeta rearrangement: log prod = sum_k (P1(3k) - P1(2k))/k
    const BigReal cb3 = landau_ramanujan(form_b3(), digits);
    const big tol = pow(big(10), -(digits + 6));
    big corr = 0, corr_err = 0;
    for (long k = 1;; ++k) {
        const big bound = 4 * pow(big(7), -big(2 * k)) / k;
        if (bound < tol) {
            corr_err += 2 * bound;
            break;
        }
        const BigReal p3 = prime_zeta_1mod3(3 * k, digits);
        const BigReal p2 = prime_zeta_1mod3(2 * k, digits);
        corr += (p3.value - p2.value) / k;
        corr_err += (p3.error + p2.error) / k;
        if (k > 300) throw std::runtime_error("precision budget exceeded");
    }
    out.c.value = 2 * cb3.value * exp(corr);
    out.c.error = abs(out.c.value) * (cb3.error / cb3.value + corr_err + tol);
    return out;
}

ConstantSet compute_constant_set(int digits) {
    PrecisionGuard pg(guard(digits));
    ConstantSet s;
    s.c_b1 = landau_ramanujan(form_b1(), digits);
    s.c_b3 = landau_ramanujan(form_b3(), digits);
    const SecondOrderResult r1 = second_order(form_b1(), digits);
    const SecondOrderResult r3 = second_order(form_b3(), digits);
    s.b_b1 = r1.b;
    s.b_b3 = r3.b;
    s.c2_b1 = r1.c2;
    s.c2_b3 = r3.c2;
    s.ratio.value = s.c_b1.value / s.c_b3.value;
    s.ratio.error = (s.c_b1.error + abs(s.ratio.value) * s.c_b3.error) / s.c_b3.value;
    const RamanujanTauResult t = ramanujan_tau(digits);
    s.ramanujan_c = t.c;
    s.b_t = t.b_t;
    s.second_coeff_t = t.coeff;
    return s;
}

}  // namespace reprcount
