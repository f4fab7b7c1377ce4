#pragma once

#include <memory>
#include <string>
#include <vector>

#include "reprcount/form.hpp"
#include "reprcount/primes.hpp"

namespace reprcount {

// Multiplicative sets cut out by a condition on the allowed prime divisors.
enum class Semigroup {
    inert_mod4,        // (P3):  all prime factors = 3 (mod 4)
    inert_mod3,        // (P2):  all prime factors = 2 (mod 3)
    inert_mod4_or_2,   // (P3'): (P3) plus the prime 2
    inert_mod3_or_3,   // (P2'): (P2) plus the prime 3
    split_mod4,        // all prime factors = 1 (mod 4)
    split_mod3,        // all prime factors = 1 (mod 3)
};

// #{1 <= n <= x : n in the semigroup}; sieve over [1, x].
u64 semigroup_count(u64 x, Semigroup s);

// Product of the primes occurring to an odd power in k (1 for squares).
u64 sigma0(u64 k);

// Moebius function (small arguments, via factorization).
int moebius_u64(u64 n);

enum class Osc { f, g };

// f(z) = z sum_{n<=z, 2 not| n} 1/n - (z/2) log(c2 z),  c2 = 2 e^gamma;
// g(z) = z sum_{n<=z, 3 not| n} 1/n - (2z/3) log(c3 z), c3 = sqrt(3) e^gamma.
double osc_eval(double z, Osc which);

struct OscSup {
    double location;  // the z of the supremum (a jump point for the left limit)
    bool left_limit;
    double value;  // sup |f| resp. |g|
};
// Scans integer jump values, their left limits and interior critical points
// up to the analytic cutoff (50 covers the reduction to [1, 11]).
OscSup osc_sup(Osc which);

// Solves sum_{m<=n} 1/m = log n + gamma + 1/(2n) - 1/(12 n^2) + theta/(60 n^4)
// for theta (evaluated in extended precision; theta must land in [0, 1]).
double em_harmonic_theta(u64 n);

// Shared sieve tables for the identity machinery on [1, x_max].
class SelbergTables {
  public:
    explicit SelbergTables(u64 x_max);
    ~SelbergTables();

    u64 x_max() const;
    bool in(Semigroup s, u64 n) const;
    u64 count(Semigroup s, u64 x) const;     // prefix count
    u64 b_count(int j, u64 x) const;         // B_1 / B_3 prefix
    bool representable(int j, u64 n) const;
    int mu_sigma0(u64 n) const;              // mu(sigma0(n)), always +-1
    double harmonic_odd(double z) const;     // sum_{n<=z, 2 not| n} 1/n
    double harmonic_no3(double z) const;     // sum_{n<=z, 3 not| n} 1/n
    double f_osc(double z) const;
    double g_osc(double z) const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Verifies h(k) = b_1(k) for all k <= k_max, where h is the Dirichlet-style
// sum over factorizations k = d n with d in (P3') and n odd.
bool h_convolution_check(u64 k_max);

struct FunctionalBreakdown {
    u64 x = 0;
    int j = 0;
    double lhs = 0;  // B(x) log(c x) - (x/2) int_1^x B(t)/t^2 dt
    double rhs = 0;  // -T1 + T2 + T3 + T4 + B(x)/2
    double t1 = 0, t2 = 0, t3 = 0, t4 = 0;
    double residual = 0;  // |lhs - rhs|
};

// Exact two-sided evaluation of the approximate functional equation for
// B_1 (j=1, I-terms) or B_3 (j=3, J-terms).
FunctionalBreakdown functional_residual(u64 x, const FormClass& c, const SelbergTables& tables);
FunctionalBreakdown functional_residual(u64 x, const FormClass& c);

struct TermBoundReport {
    bool all_hold = false;
    std::vector<std::string> failures;
    // worst observed ratios term/x over the sampled points
    double max_i1 = 0, max_i2 = 0, max_i3 = 0, max_i4 = 0;
    double max_j1 = 0, max_j2 = 0, max_j3 = 0, max_j4 = 0;
};

// Checks 0 <= I1 < 0.23x, 0 <= I2 < 2.7x, |I3| < 2.68x, |I4| <= 0.277x,
// J1 < 0.36x, J2 < 2.7x, |J3| < 2.06x, |J4| <= 0.36x on log-spaced points,
// plus psi_4(x) <= floor((x+11)/12) + floor((x+7)/12) for every x <= x_max.
TermBoundReport term_bound_check(u64 x_max);

struct ExplicitBoundReport {
    bool ok1 = false, ok3 = false;
    double max_norm1 = 0, max_norm3 = 0;  // max |B - C x/sqrt(log x)| log x / x
    u64 at1 = 0, at3 = 0;
    u64 x_max = 0;
};

// Scans every integer x in [2, x_max] against the explicit 9.62 / 8.53
// bands, using exact sieve counts.
ExplicitBoundReport explicit_bound_check(u64 x_max, double c_b1, double c_b3);

struct CrossoverResult {
    bool crosses = false;
    double log10_x = 0;  // base-10 exponent of the guaranteed crossover
};

// Solves C_b1 x/sqrt(log x) - e1 x/log x >= C_b3 x/sqrt(log x) + e3 x/log x.
CrossoverResult crossover(double c_b1, double c_b3, double e1 = 9.62, double e3 = 8.53);

}  // namespace reprcount
