#pragma once

#include <string>
#include <vector>

#include "reprcount/events.hpp"

namespace reprcount {

// psi_f(x) = sum of event weights at n <= x.
double psi_f(u64 x, const FormClass& c);

struct HExtremum {
    u64 location = 0;       // event n where H attains its maximum
    double value = 0;       // H(location)
    u64 min_location = 0;   // event with the smallest left limit
    double min_left = 0;    // that left limit (C- evidence)
    u64 search_bound = 0;
    int j = 0;
};

// H(x) = sum_{n<=x} Lambda/n - log(sqrt x).  Between events H decreases,
// so the maximum over [1, bound] is attained at an event and the running
// infimum at event left limits; both are scanned here with compensated
// summation of the Lambda/n terms.
HExtremum h_extrema(const FormClass& c, u64 bound);

// Smallest event point x0 such that H(x) >= level for all x0 <= x <= x_max
// (checking left limits at events plus the tail stretch to x_max).
// Returns the first event when the bound holds everywhere.  Throws if the
// level is not attained from anywhere below x_max.
u64 h_threshold_scan(const FormClass& c, double level, u64 x_max);

// Piecewise-linear envelope: slope(y) * y, where slope comes from the
// matching half-open interval or the default.
struct EnvelopeSpec {
    struct Interval {
        u64 lo, hi;
        double slope;
    };
    std::vector<Interval> intervals;
    double default_slope = 0.5176;

    double slope_at(u64 y) const;
    double eval(u64 y) const { return slope_at(y) * static_cast<double>(y); }
};

// The S_{b_3} envelope: seven exceptional intervals, default slope 0.5176.
EnvelopeSpec s_b3_envelope();

struct EnvelopeReport {
    bool upper_ok = false;        // psi_b3(y) <= S(y) on [2, x_max]
    bool linear_lower_ok = false; // psi_b1(x) >= 0.4924 x on [37, x_max]
    bool linear_upper_ok = false; // psi_b3(x) <= 0.5176 x on [3793, x_max]
    double upper_min_slack = 0;
    u64 upper_min_at = 0;
    double lower_min_slack = 0;
    u64 lower_min_at = 0;
    double linear_min_slack = 0;
    u64 linear_min_at = 0;
    u64 x_max = 0;
    std::vector<std::pair<u64, std::string>> failures;
};

EnvelopeReport check_envelopes(u64 x_max);

// One CSV row of the plotting dump: event n, Lambda, psi(n), H(n).
struct CurveRow {
    u64 n;
    double lambda;
    double psi;
    double h;
};
std::vector<CurveRow> curve_rows(const FormClass& c, u64 bound);

}  // namespace reprcount
