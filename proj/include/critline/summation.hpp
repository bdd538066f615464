// Compensated (Neumaier) accumulators for the long oscillatory sums that
// appear in the main-sum evaluations and in the quadrature reductions.
#ifndef CRITLINE_SUMMATION_HPP
#define CRITLINE_SUMMATION_HPP

#include <cmath>
#include <complex>

namespace critline {

// Kahan-Neumaier running sum.  add() costs 4 flops; the compensation keeps
// the error at ~2 ulp independent of the number of terms.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }
    void reset() { sum_ = 0.0; comp_ = 0.0; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Componentwise compensated sum for complex series.
class CompensatedComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }
    void reset() { re_.reset(); im_.reset(); }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

} // namespace critline

#endif
