#pragma once

#include <cmath>

namespace ewwp {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double value)
    {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            compensation_ += (sum_ - t) + value;
        } else {
            compensation_ += (value - t) + sum_;
        }
        sum_ = t;
    }

    CompensatedSum& operator+=(double value)
    {
        add(value);
        return *this;
    }

    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace ewwp
