#include "reprcount/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

#include "reprcount/kahan.hpp"

namespace reprcount {

double psi_f(u64 x, const FormClass& c) {
    if (x < 2) return 0.0;
    Kahan s;
    PrimePowerStream stream(c, x);
    while (auto e = stream.next()) s.add(e->weight);
    return s.value();
}

HExtremum h_extrema(const FormClass& c, u64 bound) {
    if (bound < 2) throw std::invalid_argument("h_extrema: bound must be >= 2");
    HExtremum out;
    out.search_bound = bound;
    out.j = c.j;
    Kahan sum;  // sum of Lambda/n over events so far
    bool first = true;
    PrimePowerStream stream(c, bound);
    while (auto e = stream.next()) {
        const double half_log = 0.5 * std::log(static_cast<double>(e->n));
        const double left = sum.value() - half_log;  // lim_{x -> n^-} H(x)
        sum.add(e->weight / static_cast<double>(e->n));
        const double val = sum.value() - half_log;
        if (first || val > out.value) {
            out.value = val;
            out.location = e->n;
        }
        if (first || left < out.min_left) {
            out.min_left = left;
            out.min_location = e->n;
        }
        first = false;
    }
    return out;
}

u64 h_threshold_scan(const FormClass& c, double level, u64 x_max) {
    if (x_max < 2) throw std::invalid_argument("h_threshold_scan: x_max must be >= 2");
    Kahan sum;
    u64 first_event = 0;
    u64 last_violation = 0;  // event whose left limit dips below level
    double h_at_x_max = 0;
    PrimePowerStream stream(c, x_max);
    while (auto e = stream.next()) {
        const double half_log = 0.5 * std::log(static_cast<double>(e->n));
        const double left = sum.value() - half_log;
        if (first_event == 0)
            first_event = e->n;
        else if (left < level)
            last_violation = e->n;
        sum.add(e->weight / static_cast<double>(e->n));
        h_at_x_max = sum.value() - half_log;
    }
    if (first_event == 0) throw std::runtime_error("h_threshold_scan: no events below x_max");
    // tail stretch [last event, x_max]
    if (sum.value() - 0.5 * std::log(static_cast<double>(x_max)) < level)
        throw std::runtime_error("h_threshold_scan: level not attained below x_max");
    (void)h_at_x_max;
    const u64 x0 = last_violation ? last_violation : first_event;
    // H(x0) itself must clear the level, otherwise x0 is no valid start
    Kahan upto;
    PrimePowerStream s2(c, x0);
    while (auto e = s2.next()) upto.add(e->weight / static_cast<double>(e->n));
    if (upto.value() - 0.5 * std::log(static_cast<double>(x0)) < level)
        throw std::runtime_error("h_threshold_scan: level not attained below x_max");
    return x0;
}

double EnvelopeSpec::slope_at(u64 y) const {
    for (const Interval& iv : intervals)
        if (iv.lo <= y && y < iv.hi) return iv.slope;
    return default_slope;
}

EnvelopeSpec s_b3_envelope() {
    EnvelopeSpec s;
    s.default_slope = 0.5176;
    s.intervals = {{3, 49, 0.653954},     {49, 181, 0.605778},  {181, 487, 0.557372},
                   {487, 1369, 0.534528}, {1699, 1933, 0.526579}, {2287, 2437, 0.521825},
                   {3733, 3793, 0.51996}};
    return s;
}

EnvelopeReport check_envelopes(u64 x_max) {
    if (x_max < 3793) throw std::invalid_argument("check_envelopes: x_max must be >= 3793");
    EnvelopeReport rep;
    rep.x_max = x_max;
    const EnvelopeSpec env = s_b3_envelope();

    // --- psi_b3 <= S_b3 on [2, x_max], and psi_b3 <= 0.5176 x on [3793, x_max].
    // psi is constant between events and S increases within an interval, so
    // it suffices to check at events and at envelope breakpoints (where S
    // can jump downward).
    {
        std::vector<u64> breaks;
        for (const auto& iv : env.intervals) {
            breaks.push_back(iv.lo);
            breaks.push_back(iv.hi);
        }
        Kahan psi;
        size_t bp = 0;
        bool first = true;
        PrimePowerStream stream(form_b3(), x_max);
        rep.upper_ok = true;
        rep.linear_upper_ok = true;
        auto check_upper = [&](u64 y, double psi_val) {
            const double slack = env.eval(y) - psi_val;
            if (first || slack < rep.upper_min_slack) {
                rep.upper_min_slack = slack;
                rep.upper_min_at = y;
                first = false;
            }
            if (slack < 0) {
                rep.upper_ok = false;
                if (rep.failures.size() < 32) rep.failures.push_back({y, "psi_b3 > S_b3"});
            }
            if (y >= 3793) {
                const double lslack = 0.5176 * static_cast<double>(y) - psi_val;
                if (rep.linear_min_at == 0 || lslack < rep.linear_min_slack) {
                    rep.linear_min_slack = lslack;
                    rep.linear_min_at = y;
                }
                if (lslack < 0) {
                    rep.linear_upper_ok = false;
                    if (rep.failures.size() < 32) rep.failures.push_back({y, "psi_b3 > 0.5176x"});
                }
            }
        };
        while (auto e = stream.next()) {
            while (bp < breaks.size() && breaks[bp] < e->n) {
                check_upper(breaks[bp], psi.value());
                ++bp;
            }
            psi.add(e->weight);
            check_upper(e->n, psi.value());
            if (bp < breaks.size() && breaks[bp] == e->n) ++bp;
        }
        while (bp < breaks.size() && breaks[bp] <= x_max) {
            check_upper(breaks[bp], psi.value());
            ++bp;
        }
    }

    // --- psi_b1 >= 0.4924 x on [37, x_max]: psi is constant between events
    // while the right side grows, so the binding points are event left
    // limits (and the stretch end at x_max).
    {
        Kahan psi;
        bool first = true;
        rep.linear_lower_ok = true;
        auto check_lower = [&](double xval, double psi_val) {
            const double slack = psi_val - 0.4924 * xval;
            if (first || slack < rep.lower_min_slack) {
                rep.lower_min_slack = slack;
                rep.lower_min_at = static_cast<u64>(xval);
                first = false;
            }
            if (slack < 0) {
                rep.linear_lower_ok = false;
                if (rep.failures.size() < 32)
                    rep.failures.push_back({static_cast<u64>(xval), "psi_b1 < 0.4924x"});
            }
        };
        PrimePowerStream stream(form_b1(), x_max);
        while (auto e = stream.next()) {
            if (e->n > 37) check_lower(static_cast<double>(e->n), psi.value());
            psi.add(e->weight);
            if (e->n == 37) check_lower(37.0, psi.value());
        }
        check_lower(static_cast<double>(x_max), psi.value());
    }

    return rep;
}

std::vector<CurveRow> curve_rows(const FormClass& c, u64 bound) {
    std::vector<CurveRow> rows;
    Kahan psi, over_n;
    PrimePowerStream stream(c, bound);
    while (auto e = stream.next()) {
        psi.add(e->weight);
        over_n.add(e->weight / static_cast<double>(e->n));
        rows.push_back({e->n, e->weight, psi.value(),
                        over_n.value() - 0.5 * std::log(static_cast<double>(e->n))});
    }
    return rows;
}

}  // namespace reprcount
