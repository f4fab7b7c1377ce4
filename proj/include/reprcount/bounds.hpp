#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reprcount/constants.hpp"
#include "reprcount/form.hpp"
#include "reprcount/primes.hpp"

namespace reprcount {

struct BoundParams {
    double tau = 0.5;
    double d_minus = 0;
    double d_plus = 0;
};

// L(x, tau, D-, D+) = (log x - D+)^(tau+1) / (log x - D-), and U with the
// roles of D- and D+ swapped.  Domain: log x > D+ (and so > D-).
double L_func(double x, const BoundParams& p);
double U_func(double x, const BoundParams& p);

enum class Lemma3Result { holds_for_all_x_ge_x1, inconclusive };

// Propagation criterion for L(x/r, p) >= c2 U(x/s, pp) from x1 onwards.
Lemma3Result lemma3_check(double r, double s, double c2, const BoundParams& p,
                          const BoundParams& pp, double x1);

// x-threshold past which U(x/r) - L(x/s) is monotonically decreasing
// (requires d_plus > d_minus, s >= r >= 1).
double lemma4_threshold(double d_minus, double d_plus, double r, double s);

// Companion numeric check on a log-spaced grid over [threshold, span*threshold].
bool lemma4_grid_check(const BoundParams& p, double r, double s, double threshold,
                       int points = 200, double span = 1e3);

// sqrt(y+1+d)(y+d-2)(y+1)^2 <= sqrt(y)(y+3)(y+d)^2 for y, d >= 0.
bool lemma5_inequality(double y, double delta);

struct Lemma5Roots {
    double y_star;      // ~0.00999445028
    double delta_star;  // ~5.44694735
};
// Bisection on the two discriminant factor polynomials; throws if an
// isolation interval fails to bracket.
Lemma5Roots lemma5_roots();

struct IterationTrace {
    int j = 0;
    double x0 = 0;
    std::vector<double> values;
    bool frozen = false;     // first step did not improve; sequence pinned at start
    bool converged = false;  // last two iterates agree to 1e-12
    double start = 0;
};

// The D- improvement recurrences: for j=3 the (factor 25, D+ = 0.276,
// scale log(3)/2) recurrence starting from -log sqrt(3); for j=1 the
// (factor 97, D+ = 0.2663, scale log(sqrt 2)+0.065, offset +0.065)
// recurrence starting from -log sqrt(2).
IterationTrace tilde_iteration(const FormClass& c, double x0, int iters);

// (C_f/tau) * {L, U}(x, p); c_f is injected from the constants engine.
std::pair<double, double> mu_sandwich(double x, const BoundParams& p, double c_f);

struct ChainLink {
    std::string name;
    double lhs = 0;   // smaller side
    double rhs = 0;   // larger side
    double margin = 0;  // rhs - lhs (or as documented per link)
    bool holds = false;
};

struct ChainReport {
    double x0 = 0;
    int iters = 0;
    std::vector<ChainLink> links;
    bool all_hold = false;
    // supporting values
    double w8_x0_over_3 = 0, v8_x0_over_37 = 0;
    double u3_x0_over_3 = 0, l1_x0_over_37 = 0;
    double envelope_sum_paper6 = 0;   // the six intervals the final chain uses
    double envelope_sum_all7 = 0;     // informational: with the 7th interval
    double envelope_budget = 0;       // 0.0224 * U3(x0/3)
};

ChainReport theorem7_chain(double x0, int iters = 8);

// Smallest integer x* from which the Theorem-3-parameter sandwich gives
// mu_b1 >= mu_b3 for all x >= x* (propagated by the lemma3 criterion).
u64 conjecture3_threshold();

}  // namespace reprcount
