#pragma once

#include <vector>

#include "reprcount/bigreal.hpp"

namespace reprcount {

// Real odd primitive character attached to a fundamental discriminant
// (-4 or -3).  chi(-1) = -1 and the values sum to zero over a period.
struct CharacterSpec {
    int discriminant;  // -4 or -3
    int modulus;       // 4 or 3
    std::vector<int> values;  // chi(0), ..., chi(modulus-1)

    int chi(unsigned long long n) const { return values[n % modulus]; }
};

CharacterSpec chi_minus4();
CharacterSpec chi_minus3();

// Exact Bernoulli number B_{2k} as a correctly rounded big at the current
// working precision.
big bernoulli_2k(int k);

// Euler-Maclaurin evaluations with certified absolute error bounds.
// All of them throw std::runtime_error if the requested target cannot be
// met within the internal term budget.

// zeta(s) and zeta'(s) for real s > 1.
BigReal zeta_em(const big& s, int digits);
BigReal zeta_prime_em(const big& s, int digits);

// Hurwitz zeta(s, a) for real s > 1, 0 < a <= 1, and its s-derivative.
BigReal hurwitz_em(const big& s, const big& a, int digits);
BigReal hurwitz_prime_em(const big& s, const big& a, int digits);

// L(s, chi) and L'(s, chi) for real s >= 1 via the character-combined
// Hurwitz expansion k^{-s} sum_a chi(a) zeta(s, a/k); at s = 1 the pole
// terms cancel (sum chi(a) = 0) and the expansion is evaluated in its
// analytically combined form.
BigReal l_chi(const big& s, const CharacterSpec& chi, int digits);
BigReal l_chi_prime(const big& s, const CharacterSpec& chi, int digits);

}  // namespace reprcount
