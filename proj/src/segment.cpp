#include "reprcount/segment.hpp"

#include <stdexcept>

namespace reprcount {

namespace {

inline void set_bit(std::vector<u64>& bits, u64 idx) {
    bits[idx >> 6] |= u64(1) << (idx & 63);
}

}  // namespace

Segment sieve_segment(u64 lo, u64 hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("sieve_segment: need 1 <= lo <= hi");
    if (hi > (u64(1) << 62)) throw std::overflow_error("sieve_segment: hi exceeds 2^62");

    Segment seg;
    seg.lo = lo;
    seg.hi = hi;
    const u64 words = (seg.length() + 63) / 64;
    seg.bits1.assign(words, 0);
    seg.bits3.assign(words, 0);

    // x^2 + y^2 with 0 <= x <= y
    {
        const u64 xmax = isqrt(hi / 2);
        for (u64 x = 0; x <= xmax; ++x) {
            const u64 x2 = x * x;
            u64 y = x;
            if (lo > x2) {
                const u64 ymin = isqrt_ceil(lo - x2);
                if (ymin > y) y = ymin;
            }
            const u64 ymax = isqrt(hi - x2);
            u64 n = x2 + y * y;
            for (; y <= ymax; ++y, n += 2 * y - 1) set_bit(seg.bits1, n - lo);
        }
    }

    // x^2 + 3y^2 with x, y >= 0
    {
        const u64 xmax = isqrt(hi);
        for (u64 x = 0; x <= xmax; ++x) {
            const u64 x2 = x * x;
            u64 y = 0;
            if (lo > x2) {
                y = isqrt_ceil((lo - x2 + 2) / 3);
                while (x2 + 3 * y * y < lo) ++y;
            }
            const u64 rem = hi - x2;
            const u64 ymax = isqrt(rem / 3);
            if (y > ymax) continue;
            u64 n = x2 + 3 * y * y;
            for (; y <= ymax; ++y, n += 6 * y - 3) set_bit(seg.bits3, n - lo);
        }
    }

    return seg;
}

}  // namespace reprcount
