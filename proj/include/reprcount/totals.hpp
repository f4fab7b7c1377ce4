#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "reprcount/kahan.hpp"
#include "reprcount/segment.hpp"

namespace reprcount {

// One sampled prefix row (the CSV row format of the long tables).
struct SampleRow {
    u64 x = 0;
    u64 b1 = 0;
    u64 b3 = 0;
    double lam1 = 0, lam3 = 0;
    double mu1 = 0, mu3 = 0;
};

struct Violation {
    u64 x = 0;
    int which = 0;  // 1, 2 or 3 = conjecture index
};

// Minimum observed slack of an inequality and where it first occurred.
struct Margin {
    double slack = 0;
    u64 x = 0;
    bool seen = false;

    void update(double s, u64 where) {
        if (!seen || s < slack) {
            slack = s;
            x = where;
            seen = true;
        }
    }
};

// Prefix state carried across segments.  Accumulation is strictly
// sequential in x; the compensated sums make the state deterministic
// for a given segment order.
struct RunningTotals {
    u64 x = 0;
    u64 count1 = 0;
    u64 count3 = 0;
    Kahan lam1, lam3;
    Kahan mu1, mu3;

    Margin margin_count;   // B1 - B3, all x
    Margin margin_lambda;  // lambda1 - lambda3, x >= 8
    Margin margin_mu;      // mu1 - mu3, all x

    std::vector<u64> sub8_lambda_exceptions;  // x in [2,7] with lambda1 < lambda3
    std::vector<Violation> violations;        // capped at 64 entries
};

// Advances the totals over one segment (seg.lo must equal t.x + 1),
// applying the per-integer inequality checks.  For every x in `samples`
// falling inside the segment (ascending, consumed from sample_pos) a row
// snapshot is appended to `rows`.
void accumulate(const Segment& seg, RunningTotals& t);
void accumulate(const Segment& seg, RunningTotals& t,
                const std::vector<u64>& samples, size_t& sample_pos,
                std::vector<SampleRow>& rows);

SampleRow snapshot(const RunningTotals& t);

}  // namespace reprcount
