#include "reprcount/primes.hpp"

#include <algorithm>
#include <cmath>

namespace reprcount {

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

u64 isqrt_ceil(u64 n) {
    if (n == 0) return 0;
    u64 r = isqrt(n);
    return r * r == n ? r : r + 1;
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<char> composite(limit + 1, 0);
    for (u64 i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
    out.reserve(static_cast<size_t>(limit / std::max(1.0, std::log(static_cast<double>(limit)) - 1.2)));
    for (u64 i = 2; i <= limit; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

const std::vector<u64>& small_primes() {
    static const std::vector<u64> table = primes_up_to(1'000'000);
    return table;
}

void for_primes_in(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
    if (hi < 2 || hi < lo) return;
    lo = std::max<u64>(lo, 2);
    const u64 root = isqrt(hi);
    const std::vector<u64> base = primes_up_to(root);
    const u64 block = 1u << 20;
    std::vector<char> composite;
    for (u64 a = lo; a <= hi; a += block) {
        const u64 b = std::min(hi, a + block - 1);
        composite.assign(static_cast<size_t>(b - a + 1), 0);
        for (u64 p : base) {
            u64 start = std::max(p * p, (a + p - 1) / p * p);
            if (start > b) continue;
            for (u64 m = start; m <= b; m += p) composite[static_cast<size_t>(m - a)] = 1;
        }
        for (u64 n = a; n <= b; ++n)
            if (!composite[static_cast<size_t>(n - a)]) fn(n);
    }
}

}  // namespace reprcount
