#pragma once

#include <optional>
#include <vector>

#include "reprcount/form.hpp"
#include "reprcount/primes.hpp"

namespace reprcount {

// A jump point of psi_f: n with Lambda_f(n) > 0, together with its weight.
struct PrimePowerEvent {
    u64 n;
    double weight;
};

// Streams the events of one form class in strictly increasing n up to
// `bound`.  Split-class and special primes are sieved block-wise; the
// (finitely many) higher prime powers are precomputed from primes up to
// sqrt(bound) and merged on the fly, so memory stays O(block + sqrt(bound)).
class PrimePowerStream {
  public:
    PrimePowerStream(FormClass c, u64 bound, u64 block_len = u64(1) << 22);

    std::optional<PrimePowerEvent> next();

  private:
    void refill();

    FormClass class_;
    u64 bound_;
    u64 block_len_;
    u64 next_lo_;
    std::vector<PrimePowerEvent> higher_;  // powers p^k, k >= 2, sorted
    size_t higher_pos_ = 0;
    std::vector<PrimePowerEvent> block_;  // merged events of current block
    size_t block_pos_ = 0;
};

// Convenience: all events up to bound (bound must be modest).
std::vector<PrimePowerEvent> all_events(const FormClass& c, u64 bound);

}  // namespace reprcount
