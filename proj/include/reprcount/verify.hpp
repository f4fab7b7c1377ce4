#pragma once

#include <functional>
#include <optional>
#include <string>

#include "reprcount/checkpoint.hpp"
#include "reprcount/totals.hpp"

namespace reprcount {

struct VerifyOptions {
    u64 x_max = 1u << 26;
    u64 segment_len = 1u << 20;
    unsigned workers = 0;  // 0 = hardware concurrency
    std::vector<u64> samples;  // defaults to powers of two <= x_max
    std::string checkpoint_path;  // empty = no checkpointing
    CheckpointFormat checkpoint_format = CheckpointFormat::json;
    bool resume = false;
    // Called at segment boundaries with (x, integers/second); may be null.
    std::function<void(u64, double)> progress;
    // Cooperative interrupt: when it returns true the scan stops after the
    // current segment (a checkpoint record is already on disk).
    std::function<bool()> interrupted;
};

struct VerificationReport {
    u64 x_max = 0;
    bool conjecture1_ok = false;
    bool conjecture2_ok = false;  // for integer x >= 8
    bool conjecture3_ok = false;
    bool completed = false;  // false when interrupted mid-scan
    std::vector<Violation> counterexamples;
    std::vector<u64> sub8_lambda_exceptions;
    std::vector<SampleRow> table_rows;
    Margin margin_count, margin_lambda, margin_mu;
    RunningTotals final_totals;
    double elapsed_seconds = 0;
};

// Full ordered scan of [1, x_max] (or [checkpoint+1, x_max] on resume).
// Segments are sieved by a worker pool; accumulation is sequential in
// segment order, so the report is deterministic regardless of workers.
VerificationReport verify_conjectures(const VerifyOptions& opts);

std::vector<u64> powers_of_two_up_to(u64 x_max);

}  // namespace reprcount
