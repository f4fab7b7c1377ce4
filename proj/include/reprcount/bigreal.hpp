#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace reprcount {

namespace bmp = boost::multiprecision;
using big = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

// Value with a conservative absolute error bound: |truth - value| <= error.
// Printing never exposes more digits than the bound certifies.
struct BigReal {
    big value;
    big error;

    int certified_decimals() const;
    // Decimal string with at most max_digits significant digits, clamped to
    // the certified count.
    std::string str(int max_digits) const;
};

// Sets the working precision (decimal digits) for subsequently constructed
// big values; restores the previous precision on destruction.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();

  private:
    unsigned previous_;
};

big mp_pi();
big mp_euler();
big pow10_big(long e);  // 10^e at current precision

// Directed conversions for inequality chains: lo(x) <= x <= hi(x) exactly.
double lo_double(const big& x);
double hi_double(const big& x);

}  // namespace reprcount
