#include "reprcount/factor.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace reprcount {

namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Brent's cycle-finding variant of Pollard rho; n must be odd composite
// with no small prime factors.
u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = (mulmod(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                const u64 ys = y;
                const int m = std::min(128, lam - k);
                for (int i = 0; i < m; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += m;
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    u64 z = ys;
                    do {
                        z = (mulmod(z, z, n) + c) % n;
                        d = std::gcd(x > z ? x - z : z - x, n);
                    } while (d == 1);
                    break;
                }
            }
            lam *= 2;
        }
        if (d != n) return d;
        ++c;  // rare: retry with a different polynomial
    }
}

void factor_rec(u64 n, std::vector<u64>& primes_out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes_out.push_back(n);
        return;
    }
    const u64 d = pollard_brent(n);
    factor_rec(d, primes_out);
    factor_rec(n / d, primes_out);
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    const int s = std::countr_zero(n - 1);
    const u64 d = (n - 1) >> s;
    // deterministic witness set for n < 2^64
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    if (n == 1) return f;
    for (u64 p : small_primes()) {
        if (p * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.pairs.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (n <= 1'000'000'000'000ull && is_prime_u64(n)) {
            // cofactor after trial division to 10^6 below 10^12 is prime
            f.pairs.emplace_back(n, 1);
        } else {
            std::vector<u64> rest;
            factor_rec(n, rest);
            std::sort(rest.begin(), rest.end());
            for (size_t i = 0; i < rest.size();) {
                size_t k = i;
                while (k < rest.size() && rest[k] == rest[i]) ++k;
                f.pairs.emplace_back(rest[i], static_cast<int>(k - i));
                i = k;
            }
        }
    }
    return f;
}

}  // namespace reprcount
