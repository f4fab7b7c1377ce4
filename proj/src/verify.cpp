#include "reprcount/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <future>
#include <stdexcept>
#include <thread>

namespace reprcount {

std::vector<u64> powers_of_two_up_to(u64 x_max) {
    std::vector<u64> v;
    for (u64 p = 2; p <= x_max && p != 0; p <<= 1) v.push_back(p);
    return v;
}

VerificationReport verify_conjectures(const VerifyOptions& opts) {
    // conjecture 2 is checked from 8 on; smaller scans are allowed and
    // simply leave it vacuous
    if (opts.x_max < 1) throw std::invalid_argument("verify_conjectures: x_max must be >= 1");
    if (opts.segment_len < 64) throw std::invalid_argument("verify_conjectures: segment_len too small");

    const auto t0 = std::chrono::steady_clock::now();

    std::vector<u64> samples = opts.samples.empty() ? powers_of_two_up_to(opts.x_max) : opts.samples;
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

    RunningTotals totals;
    std::vector<SampleRow> rows;
    std::optional<CheckpointWriter> ckpt;

    if (opts.resume) {
        if (opts.checkpoint_path.empty())
            throw std::runtime_error("resume requested without a checkpoint path");
        CheckpointState st = load_checkpoint(opts.checkpoint_path, opts.checkpoint_format);
        if (st.segment_len != opts.segment_len)
            throw std::runtime_error("checkpoint: segment length does not match this run");
        if (st.totals.x % opts.segment_len != 0)
            throw std::runtime_error("checkpoint: state not at a segment boundary");
        if (st.totals.x > opts.x_max)
            throw std::runtime_error("checkpoint: state beyond requested x_max");
        totals = st.totals;
        rows = st.rows;
        ckpt.emplace(opts.checkpoint_path, opts.checkpoint_format, st.checksum, 0);
    } else if (!opts.checkpoint_path.empty()) {
        ckpt.emplace(opts.checkpoint_path, opts.checkpoint_format, opts.segment_len);
    }

    size_t sample_pos = 0;
    while (sample_pos < samples.size() && samples[sample_pos] <= totals.x) ++sample_pos;

    const unsigned workers =
        opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());

    u64 next_lo = totals.x + 1;
    std::deque<std::future<Segment>> window;
    auto top_up = [&] {
        while (window.size() < 2 * static_cast<size_t>(workers) && next_lo <= opts.x_max) {
            const u64 lo = next_lo;
            const u64 hi = std::min(opts.x_max, lo + opts.segment_len - 1);
            next_lo = hi + 1;
            window.push_back(std::async(std::launch::async, [lo, hi] { return sieve_segment(lo, hi); }));
        }
    };

    bool stopped = false;
    u64 last_progress_x = totals.x;
    auto last_progress_t = t0;
    while (true) {
        top_up();
        if (window.empty()) break;
        Segment seg = window.front().get();
        window.pop_front();

        const size_t rows_before = rows.size();
        accumulate(seg, totals, samples, sample_pos, rows);
        if (ckpt) {
            for (size_t i = rows_before; i < rows.size(); ++i) ckpt->row(rows[i]);
            ckpt->boundary(totals);
        }
        if (opts.progress) {
            const auto now = std::chrono::steady_clock::now();
            const double dt = std::chrono::duration<double>(now - last_progress_t).count();
            if (dt > 0.5) {
                opts.progress(totals.x, static_cast<double>(totals.x - last_progress_x) / dt);
                last_progress_x = totals.x;
                last_progress_t = now;
            }
        }
        if (opts.interrupted && opts.interrupted()) {
            stopped = true;
            break;
        }
    }

    VerificationReport rep;
    rep.x_max = opts.x_max;
    rep.completed = !stopped && totals.x == opts.x_max;
    rep.counterexamples = totals.violations;
    rep.sub8_lambda_exceptions = totals.sub8_lambda_exceptions;
    rep.table_rows = rows;
    rep.margin_count = totals.margin_count;
    rep.margin_lambda = totals.margin_lambda;
    rep.margin_mu = totals.margin_mu;
    rep.conjecture1_ok = true;
    rep.conjecture2_ok = true;
    rep.conjecture3_ok = true;
    for (const Violation& v : totals.violations) {
        if (v.which == 1) rep.conjecture1_ok = false;
        if (v.which == 2) rep.conjecture2_ok = false;
        if (v.which == 3) rep.conjecture3_ok = false;
    }
    rep.final_totals = totals;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace reprcount
