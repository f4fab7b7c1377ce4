#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "reprcount/primes.hpp"

namespace reprcount {

// Canonical factorization: primes strictly increasing, exponents >= 1.
// The empty list is the factorization of 1.
struct Factorization {
    std::vector<std::pair<u64, int>> pairs;

    u64 value() const {
        u64 v = 1;
        for (auto [p, e] : pairs)
            for (int i = 0; i < e; ++i) v *= p;
        return v;
    }
};

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n);

// Trial division by the small-prime table, then Miller-Rabin plus
// Pollard's rho (Brent variant) for the remaining <= 64-bit cofactor.
Factorization factorize(u64 n);

}  // namespace reprcount
