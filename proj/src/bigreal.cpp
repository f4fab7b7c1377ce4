#include "reprcount/bigreal.hpp"

#include <algorithm>
#include <cmath>

namespace reprcount {

int BigReal::certified_decimals() const {
    if (value == 0) return 0;
    if (error <= 0) return 1000;
    const big rel = error / abs(value);
    if (rel >= 1) return 0;
    const long d = -static_cast<long>(std::floor(static_cast<double>(log10(rel))));
    return static_cast<int>(std::max(0L, d - 1));
}

std::string BigReal::str(int max_digits) const {
    const int digits = std::max(1, std::min(max_digits, certified_decimals()));
    return value.str(digits);
}

PrecisionGuard::PrecisionGuard(unsigned digits) : previous_(big::default_precision()) {
    big::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { big::default_precision(previous_); }

big mp_pi() {
    big x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

big mp_euler() {
    big x;
    mpfr_const_euler(x.backend().data(), MPFR_RNDN);
    return x;
}

big pow10_big(long e) { return pow(big(10), e); }

double lo_double(const big& x) { return mpfr_get_d(x.backend().data(), MPFR_RNDD); }
double hi_double(const big& x) { return mpfr_get_d(x.backend().data(), MPFR_RNDU); }

}  // namespace reprcount
