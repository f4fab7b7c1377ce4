#include "reprcount/dirichlet.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace reprcount {

namespace {

using rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

// Exact Bernoulli numbers via the defining recurrence
//   sum_{j=0}^{m} C(m+1, j) B_j = 0,  B_0 = 1.
rational bernoulli_rational(int index) {
    static std::vector<rational> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<size_t>(index) >= cache.size()) {
        if (cache.empty()) cache.push_back(1);
        for (size_t m = cache.size(); m <= static_cast<size_t>(index); ++m) {
            rational acc = 0;
            rational binom = 1;  // C(m+1, j), built incrementally over j
            for (size_t j = 0; j < m; ++j) {
                acc += binom * cache[j];
                binom *= static_cast<long>(m + 1 - j);
                binom /= static_cast<long>(j + 1);
            }
            cache.push_back(-acc / static_cast<long>(m + 1));
        }
    }
    return cache[index];
}

big to_big(const rational& r) {
    return big(bmp::numerator(r).str()) / big(bmp::denominator(r).str());
}

big target_tol(int digits) {
    if (digits < 1 || digits > 400) throw std::runtime_error("precision budget exceeded");
    return pow(big(10), -(digits + 5));
}

big rounding_slack(const big& value, int digits) {
    return pow(big(10), -(digits + 8)) * (1 + abs(value));
}

struct Piece {
    big value;
    big err;
};

// Euler-Maclaurin pieces of zeta(s, a) or d/ds zeta(s, a), real s > 1,
// 0 < a <= 1.  Returns nullopt when the correction series starts diverging
// before the target is met (caller then doubles N).
std::optional<Piece> hurwitz_piece(const big& s, const big& a, unsigned long N, const big& tol,
                                   bool deriv) {
    const big Na = N + a;
    const big logNa = log(Na);
    big value = 0;
    for (unsigned long n = 0; n < N; ++n) {
        const big base = n + a;
        const big t = pow(base, -s);
        value += deriv ? big(-log(base) * t) : t;
    }
    const big Na_ms = pow(Na, -s);
    if (!deriv) {
        value += pow(Na, 1 - s) / (s - 1) + Na_ms / 2;
    } else {
        value += pow(Na, 1 - s) * (-logNa / (s - 1) - 1 / ((s - 1) * (s - 1))) - logNa * Na_ms / 2;
    }

    big poch = s;           // (s)_{2j-1}
    big poch_hsum = 1 / s;  // sum_{i<2j-1} 1/(s+i)
    big fact = 2;           // (2j)!
    big power = Na_ms / Na; // (N+a)^{-s-2j+1}
    const big inv_Na2 = 1 / (Na * Na);
    big prev_mag = 0;
    for (int j = 1; j <= 240; ++j) {
        const big coeff = to_big(bernoulli_rational(2 * j)) / fact;
        const big term = deriv ? big(coeff * poch * (poch_hsum - logNa) * power)
                               : big(coeff * poch * power);
        const big mag = abs(term);
        if (4 * mag <= tol) return Piece{value, 4 * mag};
        if (j > 1 && mag >= prev_mag) return std::nullopt;  // asymptotic tail reached
        value += term;
        prev_mag = mag;
        poch_hsum += 1 / (s + 2 * j - 1) + 1 / (s + 2 * j);
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
        power *= inv_Na2;
    }
    return std::nullopt;
}

// Combined-form pieces at s = 1 for offset b = a/k: the chi-weighted sum of
// these equals sum_a chi(a) zeta(s, a/k) resp. its derivative at s -> 1,
// after the 1/(s-1) (resp. -1/(s-1)^2) poles cancel.
std::optional<Piece> at1_piece(const big& b, unsigned long N, const big& tol, bool deriv) {
    const big Nb = N + b;
    const big logNb = log(Nb);
    big value = 0;
    for (unsigned long n = 0; n < N; ++n) {
        const big base = n + b;
        value += deriv ? big(-log(base) / base) : big(1 / base);
    }
    if (!deriv) {
        value += -logNb + 1 / (2 * Nb);
    } else {
        value += logNb * logNb / 2 - logNb / (2 * Nb);
    }

    // T_j = B_{2j}/(2j) (N+b)^{-2j};  T'_j = B_{2j}/(2j) (H_{2j-1} - log(N+b)) (N+b)^{-2j}
    const big inv_Nb2 = 1 / (Nb * Nb);
    big power = inv_Nb2;
    big harmonic = 1;  // H_{2j-1}
    big prev_mag = 0;
    for (int j = 1; j <= 240; ++j) {
        const big coeff = to_big(bernoulli_rational(2 * j)) / (2 * j);
        const big term = deriv ? big(coeff * (harmonic - logNb) * power) : big(coeff * power);
        const big mag = abs(term);
        if (4 * mag <= tol) return Piece{value, 4 * mag};
        if (j > 1 && mag >= prev_mag) return std::nullopt;
        value += term;
        prev_mag = mag;
        harmonic += big(1) / (2 * j) + big(1) / (2 * j + 1);
        power *= inv_Nb2;
    }
    return std::nullopt;
}

template <typename Fn>
Piece with_growing_N(int digits, Fn&& attempt) {
    const big tol = target_tol(digits);
    for (unsigned long N = std::max(16, digits); N <= (1ul << 16); N *= 2) {
        if (auto piece = attempt(N, tol)) return *piece;
    }
    throw std::runtime_error("precision budget exceeded");
}

}  // namespace

CharacterSpec chi_minus4() { return {-4, 4, {0, 1, 0, -1}}; }
CharacterSpec chi_minus3() { return {-3, 3, {0, 1, -1}}; }

big bernoulli_2k(int k) { return to_big(bernoulli_rational(2 * k)); }

BigReal zeta_em(const big& s, int digits) {
    if (s <= 1) throw std::invalid_argument("zeta_em: need s > 1");
    Piece p = with_growing_N(digits,
                             [&](unsigned long N, const big& tol) { return hurwitz_piece(s, 1, N, tol, false); });
    return {p.value, p.err + rounding_slack(p.value, digits)};
}

BigReal zeta_prime_em(const big& s, int digits) {
    if (s <= 1) throw std::invalid_argument("zeta_prime_em: need s > 1");
    Piece p = with_growing_N(digits,
                             [&](unsigned long N, const big& tol) { return hurwitz_piece(s, 1, N, tol, true); });
    return {p.value, p.err + rounding_slack(p.value, digits)};
}

BigReal hurwitz_em(const big& s, const big& a, int digits) {
    if (s <= 1 || a <= 0 || a > 1) throw std::invalid_argument("hurwitz_em: bad arguments");
    Piece p = with_growing_N(digits,
                             [&](unsigned long N, const big& tol) { return hurwitz_piece(s, a, N, tol, false); });
    return {p.value, p.err + rounding_slack(p.value, digits)};
}

BigReal hurwitz_prime_em(const big& s, const big& a, int digits) {
    if (s <= 1 || a <= 0 || a > 1) throw std::invalid_argument("hurwitz_prime_em: bad arguments");
    Piece p = with_growing_N(digits,
                             [&](unsigned long N, const big& tol) { return hurwitz_piece(s, a, N, tol, true); });
    return {p.value, p.err + rounding_slack(p.value, digits)};
}

namespace {

// chi-combined sum at s = 1: G(deriv) = sum_a chi(a) * piece(a/k).
Piece combined_at1(const CharacterSpec& chi, int digits, bool deriv) {
    return with_growing_N(digits, [&](unsigned long N, const big& tol) -> std::optional<Piece> {
        big value = 0, err = 0;
        for (int a = 1; a < chi.modulus; ++a) {
            if (chi.values[a] == 0) continue;
            auto piece = at1_piece(big(a) / chi.modulus, N, tol, deriv);
            if (!piece) return std::nullopt;
            value += chi.values[a] * piece->value;
            err += piece->err;
        }
        return Piece{value, err};
    });
}

}  // namespace

BigReal l_chi(const big& s, const CharacterSpec& chi, int digits) {
    if (s < 1) throw std::invalid_argument("l_chi: need s >= 1");
    if (s == 1) {
        Piece g = combined_at1(chi, digits, false);
        const big value = g.value / chi.modulus;
        return {value, g.err / chi.modulus + rounding_slack(value, digits)};
    }
    big value = 0, err = 0;
    for (int a = 1; a < chi.modulus; ++a) {
        if (chi.values[a] == 0) continue;
        const BigReal z = hurwitz_em(s, big(a) / chi.modulus, digits);
        value += chi.values[a] * z.value;
        err += z.error;
    }
    const big scale = pow(big(chi.modulus), -s);
    value *= scale;
    err *= scale;
    return {value, err + rounding_slack(value, digits)};
}

BigReal l_chi_prime(const big& s, const CharacterSpec& chi, int digits) {
    if (s < 1) throw std::invalid_argument("l_chi_prime: need s >= 1");
    const big logk = log(big(chi.modulus));
    if (s == 1) {
        Piece g = combined_at1(chi, digits, false);
        Piece gp = combined_at1(chi, digits, true);
        const big value = (gp.value - logk * g.value) / chi.modulus;
        const big err = (gp.err + logk * g.err) / chi.modulus;
        return {value, err + rounding_slack(value, digits)};
    }
    big sum = 0, sum_err = 0, dsum = 0, dsum_err = 0;
    for (int a = 1; a < chi.modulus; ++a) {
        if (chi.values[a] == 0) continue;
        const BigReal z = hurwitz_em(s, big(a) / chi.modulus, digits);
        const BigReal zp = hurwitz_prime_em(s, big(a) / chi.modulus, digits);
        sum += chi.values[a] * z.value;
        sum_err += z.error;
        dsum += chi.values[a] * zp.value;
        dsum_err += zp.error;
    }
    const big scale = pow(big(chi.modulus), -s);
    const big value = scale * (dsum - logk * sum);
    const big err = scale * (dsum_err + logk * sum_err);
    return {value, err + rounding_slack(value, digits)};
}

}  // namespace reprcount
