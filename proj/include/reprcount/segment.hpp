#pragma once

#include <cstdint>
#include <vector>

#include "reprcount/primes.hpp"

namespace reprcount {

// Closed interval [lo, hi] with one representability bitmap per form.
// Bit k of bits_j corresponds to lo + k.
struct Segment {
    u64 lo = 0;
    u64 hi = 0;
    std::vector<u64> bits1;
    std::vector<u64> bits3;

    u64 length() const { return hi - lo + 1; }
    bool test1(u64 n) const { return (bits1[(n - lo) >> 6] >> ((n - lo) & 63)) & 1; }
    bool test3(u64 n) const { return (bits3[(n - lo) >> 6] >> ((n - lo) & 63)) & 1; }
};

// Marks every n in [lo, hi] expressible as x^2 + y^2 (bits1, enumerating
// 0 <= x <= y) resp. x^2 + 3y^2 (bits3, x, y >= 0): per x, the reachable
// y-range is computed and all sums marked.  Requires 1 <= lo <= hi <= 2^62.
Segment sieve_segment(u64 lo, u64 hi);

}  // namespace reprcount
