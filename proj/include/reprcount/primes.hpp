#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace reprcount {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Exact integer square root.
u64 isqrt(u64 n);

// Smallest y with y*y >= n (0 for n = 0).
u64 isqrt_ceil(u64 n);

// All primes <= 10^6, built once, read-only afterwards.
const std::vector<u64>& small_primes();

// Primes up to `limit` (simple sieve; limit expected <= ~10^8).
std::vector<u64> primes_up_to(u64 limit);

// Calls fn(p) for every prime p in [lo, hi], in increasing order.
// Sieves block-wise so memory stays O(block + sqrt(hi)).
void for_primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn);

}  // namespace reprcount
