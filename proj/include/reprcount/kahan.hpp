#pragma once

#include <cmath>

namespace reprcount {

// Neumaier compensated accumulator.  At x ~ 10^11 the log-weighted sums
// reach ~4e12 while single terms are ~25, so naive summation would lose
// the printed decimals; compensation keeps the relative error near eps.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace reprcount
