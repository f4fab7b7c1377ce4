#include "reprcount/repr.hpp"

#include <cmath>
#include <stdexcept>

namespace reprcount {

bool is_representable(const Factorization& f, const FormClass& c) {
    for (auto [p, e] : f.pairs)
        if (classify_prime(p, c) == PrimeKind::inert && (e & 1)) return false;
    return true;
}

bool is_representable(u64 n, const FormClass& c) {
    if (n == 0) throw std::invalid_argument("is_representable: n must be positive");
    return is_representable(factorize(n), c);
}

double mangoldt_prime_power(u64 p, int r, const FormClass& c) {
    switch (classify_prime(p, c)) {
        case PrimeKind::inert:
            return (r % 2 == 0) ? 2.0 * std::log(static_cast<double>(p)) : 0.0;
        case PrimeKind::split:
        case PrimeKind::special:
            return std::log(static_cast<double>(p));
    }
    return 0.0;
}

double mangoldt_f(u64 n, const FormClass& c) {
    if (n == 0) throw std::invalid_argument("mangoldt_f: n must be positive");
    if (n == 1) return 0.0;
    const Factorization f = factorize(n);
    if (f.pairs.size() != 1) return 0.0;
    return mangoldt_prime_power(f.pairs[0].first, f.pairs[0].second, c);
}

int sigma1_mod3(const Factorization& f) {
    int s = 1;
    for (auto [p, e] : f.pairs) {
        // 1 + p + ... + p^e mod 3
        const int pm = static_cast<int>(p % 3);
        int t;
        if (pm == 0) {
            t = 1;
        } else if (pm == 1) {
            t = (e + 1) % 3;
        } else {  // pm == 2: partial sums alternate 1,0,1,0,...
            t = (e % 2 == 0) ? 1 : 0;
        }
        s = (s * t) % 3;
    }
    return s;
}

int tau_char(u64 n) {
    if (n == 0) throw std::invalid_argument("tau_char: n must be positive");
    if (n % 3 == 0) return 0;
    return sigma1_mod3(factorize(n)) % 3 == 0 ? 0 : 1;
}

}  // namespace reprcount
