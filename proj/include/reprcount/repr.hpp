#pragma once

#include "reprcount/factor.hpp"
#include "reprcount/form.hpp"

namespace reprcount {

// n is representable by X^2 + jY^2 iff every inert prime factor of n
// occurs to an even power.
bool is_representable(u64 n, const FormClass& c);
bool is_representable(const Factorization& f, const FormClass& c);

// Von Mangoldt analogue for the representable semigroup:
//   2 log p  if n = p^(2r), p inert,
//   log p    if n = p^r, p split or p special,
//   0        otherwise.
double mangoldt_f(u64 n, const FormClass& c);

// Weight of the event at p^r (r >= 1); 0 if p^r carries no event.
double mangoldt_prime_power(u64 p, int r, const FormClass& c);

// T_n = 0 if 3 | n*sigma1(n), else 1 (Ramanujan tau parity mod 3).
int tau_char(u64 n);

// sigma1(n) mod 3, multiplicative helper behind tau_char.
int sigma1_mod3(const Factorization& f);

}  // namespace reprcount
