#include "reprcount/totals.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace reprcount {

namespace {

constexpr size_t kMaxViolations = 64;

// Handles one integer n with its two representability bits.
inline void step(RunningTotals& t, u64 n, bool m1, bool m3) {
    if (m1) {
        t.count1 += 1;
        t.lam1.add(std::log(static_cast<double>(n)));
        t.mu1.add(1.0 / static_cast<double>(n));
    }
    if (m3) {
        t.count3 += 1;
        t.lam3.add(std::log(static_cast<double>(n)));
        t.mu3.add(1.0 / static_cast<double>(n));
    }
    // The inequalities can only tighten at integers where either side
    // moved, so checking at marked integers is exhaustive.
    const i64 dcount = static_cast<i64>(t.count1) - static_cast<i64>(t.count3);
    t.margin_count.update(static_cast<double>(dcount), n);
    if (dcount < 0 && t.violations.size() < kMaxViolations) t.violations.push_back({n, 1});

    const double dlam = t.lam1.value() - t.lam3.value();
    if (n >= 8) {
        t.margin_lambda.update(dlam, n);
        if (dlam < 0 && t.violations.size() < kMaxViolations) t.violations.push_back({n, 2});
    } else if (n >= 2 && dlam < 0) {
        if (t.sub8_lambda_exceptions.empty() || t.sub8_lambda_exceptions.back() != n)
            t.sub8_lambda_exceptions.push_back(n);
    }

    const double dmu = t.mu1.value() - t.mu3.value();
    t.margin_mu.update(dmu, n);
    if (dmu < 0 && t.violations.size() < kMaxViolations) t.violations.push_back({n, 3});
}

}  // namespace

SampleRow snapshot(const RunningTotals& t) {
    return {t.x,           t.count1,        t.count3,      t.lam1.value(),
            t.lam3.value(), t.mu1.value(),  t.mu3.value()};
}

void accumulate(const Segment& seg, RunningTotals& t,
                const std::vector<u64>& samples, size_t& sample_pos,
                std::vector<SampleRow>& rows) {
    if (seg.lo != t.x + 1) throw std::logic_error("accumulate: segment out of order");

    const size_t words = seg.bits1.size();
    for (size_t w = 0; w < words; ++w) {
        const u64 w1 = seg.bits1[w];
        const u64 w3 = seg.bits3[w];
        const u64 base = seg.lo + 64 * static_cast<u64>(w);
        const u64 word_hi = std::min(seg.hi, base + 63);

        const bool sample_here = sample_pos < samples.size() && samples[sample_pos] <= word_hi;
        u64 both = w1 | w3;
        if (!sample_here) {
            while (both) {
                const int b = std::countr_zero(both);
                both &= both - 1;
                const u64 n = base + static_cast<u64>(b);
                if (n > seg.hi) break;
                step(t, n, (w1 >> b) & 1, (w3 >> b) & 1);
            }
            t.x = word_hi;
        } else {
            // rare path: walk the word integer by integer so the sampled
            // prefix lands exactly at x = samples[sample_pos]
            for (u64 n = base; n <= word_hi; ++n) {
                const int b = static_cast<int>(n - base);
                if ((both >> b) & 1) step(t, n, (w1 >> b) & 1, (w3 >> b) & 1);
                t.x = n;
                while (sample_pos < samples.size() && samples[sample_pos] == n) {
                    rows.push_back(snapshot(t));
                    ++sample_pos;
                }
            }
        }
    }
    t.x = seg.hi;
}

void accumulate(const Segment& seg, RunningTotals& t) {
    std::vector<u64> none;
    size_t pos = 0;
    std::vector<SampleRow> rows;
    accumulate(seg, t, none, pos, rows);
}

}  // namespace reprcount
