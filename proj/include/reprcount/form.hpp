#pragma once

#include <cstdint>

namespace reprcount {

// The two quadratic forms under study: X^2 + j*Y^2 with j = 1 (square
// lattice) or j = 3 (hexagonal lattice).  Primes fall into three classes
// modulo `modulus`: the special prime (2 resp. 3), the split residue class
// (1 mod 4 resp. 1 mod 3) and the inert residue class (3 mod 4 resp.
// 2 mod 3).  Representability of n depends only on the parity of the
// exponents of inert primes in n.
struct FormClass {
    int j;              // 1 or 3
    int special_prime;  // 2 for j=1, 3 for j=3
    int split_residue;  // 1 in both cases
    int inert_residue;  // 3 mod 4 for j=1, 2 mod 3 for j=3
    int modulus;        // 4 for j=1, 3 for j=3
};

constexpr FormClass form_b1() { return {1, 2, 1, 3, 4}; }
constexpr FormClass form_b3() { return {3, 3, 1, 2, 3}; }

enum class PrimeKind { special, split, inert };

constexpr PrimeKind classify_prime(std::uint64_t p, const FormClass& c) {
    if (p == static_cast<std::uint64_t>(c.special_prime)) return PrimeKind::special;
    return static_cast<int>(p % c.modulus) == c.split_residue ? PrimeKind::split
                                                              : PrimeKind::inert;
}

}  // namespace reprcount
