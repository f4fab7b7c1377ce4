#pragma once

#include "reprcount/dirichlet.hpp"
#include "reprcount/form.hpp"

namespace reprcount {

// Leading constant of B_j(x) ~ C * x / sqrt(log x), evaluated through the
// quadratically convergent product over zeta(2^n)/L(2^n, chi); `min_terms`
// is a floor on the number of product levels (more are added automatically
// when the requested precision demands it).
BigReal landau_ramanujan(const FormClass& c, int digits, int min_terms = 6);

struct SecondOrderResult {
    BigReal b;   // B_f = lim (sum Lambda_f(n)/n - log(x)/2)
    BigReal c2;  // second-order constant (1 + B_f)/2
};

// Evaluates the class prime sum by `levels` applications of the doubling
// identity (each level consumes zeta'/zeta and L'/L at 2^n), with the
// remaining tail summed directly over small primes at exponent 2^(levels+1).
SecondOrderResult second_order(const FormClass& c, int digits, int levels = 5);

struct RamanujanTauResult {
    BigReal c;      // leading constant in Ramanujan's claim for sum T_k
    BigReal b_t;    // B_T, negative
    BigReal coeff;  // (1 + B_T)/2, the 0.23... second-order coefficient
};

RamanujanTauResult ramanujan_tau(int digits);

struct ConstantSet {
    BigReal c_b1, c_b3;
    BigReal b_b1, b_b3;
    BigReal c2_b1, c2_b3;
    BigReal ratio;  // c_b1 / c_b3
    BigReal ramanujan_c, b_t, second_coeff_t;
};

ConstantSet compute_constant_set(int digits);

// Prime zeta restricted to a residue class: sum over p = a (mod 3) of p^-s,
// via Moebius inversion of log zeta / log L.  Used by the tau constant and
// exposed for cross-checks.
BigReal prime_zeta_1mod3(long s, int digits);

}  // namespace reprcount
