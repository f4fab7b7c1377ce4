#pragma once

#include <optional>
#include <string>

#include "reprcount/totals.hpp"

namespace reprcount {

enum class CheckpointFormat { binary, json };

// Append-only checkpoint stream.  One state record is written per segment
// boundary; sampled rows are interleaved as their own records.  Every
// record extends a rolling FNV-1a checksum over its packed little-endian
// payload, and doubles are stored as IEEE-754 bit patterns so a resumed
// run restores the accumulators exactly.
class CheckpointWriter {
  public:
    CheckpointWriter(std::string path, CheckpointFormat fmt, u64 segment_len);
    // Reopens an existing checkpoint for appending, continuing its chain.
    CheckpointWriter(std::string path, CheckpointFormat fmt, u64 resume_checksum, int);
    void row(const SampleRow& r);
    void boundary(const RunningTotals& t);
    u64 checksum() const { return checksum_; }

  private:
    std::string path_;
    CheckpointFormat fmt_;
    u64 checksum_;
};

struct CheckpointState {
    RunningTotals totals;
    std::vector<SampleRow> rows;
    u64 segment_len = 0;
    u64 checksum = 0;
};

// Loads and validates a checkpoint; throws std::runtime_error on a corrupt
// or inconsistent file (bad magic, version, checksum chain, field order).
CheckpointState load_checkpoint(const std::string& path, CheckpointFormat fmt);

}  // namespace reprcount
