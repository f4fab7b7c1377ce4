#include "reprcount/events.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reprcount {

PrimePowerStream::PrimePowerStream(FormClass c, u64 bound, u64 block_len)
    : class_(c), bound_(bound), block_len_(std::max<u64>(block_len, 1024)), next_lo_(2) {
    if (bound < 2) throw std::invalid_argument("PrimePowerStream: bound must be >= 2");
    // Precompute events at p^k with k >= 2.  Inert primes contribute even
    // powers with weight 2 log p, split/special primes every power with
    // weight log p.
    const u64 root = isqrt(bound);
    for_primes_in(2, root, [&](u64 p) {
        const double lp = std::log(static_cast<double>(p));
        switch (classify_prime(p, class_)) {
            case PrimeKind::inert:
                for (u64 q = p * p; q <= bound_; q *= p * p) {
                    higher_.push_back({q, 2 * lp});
                    if (q > bound_ / (p * p)) break;
                }
                break;
            case PrimeKind::split:
            case PrimeKind::special:
                for (u64 q = p * p; q <= bound_; q *= p) {
                    higher_.push_back({q, lp});
                    if (q > bound_ / p) break;
                }
                break;
        }
    });
    std::sort(higher_.begin(), higher_.end(),
              [](const PrimePowerEvent& a, const PrimePowerEvent& b) { return a.n < b.n; });
}

void PrimePowerStream::refill() {
    block_.clear();
    block_pos_ = 0;
    while (block_.empty() && next_lo_ <= bound_) {
        const u64 lo = next_lo_;
        const u64 hi = std::min(bound_, lo + block_len_ - 1);
        next_lo_ = hi + 1;

        std::vector<PrimePowerEvent> primes_here;
        for_primes_in(lo, hi, [&](u64 p) {
            const PrimeKind k = classify_prime(p, class_);
            if (k == PrimeKind::split || k == PrimeKind::special)
                primes_here.push_back({p, std::log(static_cast<double>(p))});
        });

        // merge with the precomputed higher powers falling in [lo, hi]
        size_t hp = higher_pos_;
        size_t pp = 0;
        while (hp < higher_.size() && higher_[hp].n <= hi) {
            while (pp < primes_here.size() && primes_here[pp].n < higher_[hp].n)
                block_.push_back(primes_here[pp++]);
            block_.push_back(higher_[hp++]);
        }
        while (pp < primes_here.size()) block_.push_back(primes_here[pp++]);
        higher_pos_ = hp;
    }
}

std::optional<PrimePowerEvent> PrimePowerStream::next() {
    if (block_pos_ >= block_.size()) {
        refill();
        if (block_.empty()) return std::nullopt;
    }
    return block_[block_pos_++];
}

std::vector<PrimePowerEvent> all_events(const FormClass& c, u64 bound) {
    PrimePowerStream s(c, bound);
    std::vector<PrimePowerEvent> out;
    while (auto e = s.next()) out.push_back(*e);
    return out;
}

}  // namespace reprcount
