#pragma once

#include <cmath>

namespace jumpkit {

// Neumaier compensated accumulator.
struct CompensatedSum {
    double sum = 0;
    double comp = 0;

    void add(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    void add(const CompensatedSum& o) {
        add(o.sum);
        add(o.comp);
    }
    double value() const { return sum + comp; }
};

}  // namespace jumpkit
