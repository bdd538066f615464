// Riemann-Siegel evaluation of Z(t) on the critical line: the length-N main
// sum plus correction terms C_0..C_5, giving a truncation error that decays
// like (t/2pi)^{-13/4}.  This is the O(sqrt t) fast path; the
// Euler-Maclaurin route stays available everywhere as the precision path.
#ifndef CRITLINE_RS_FORMULA_HPP
#define CRITLINE_RS_FORMULA_HPP

namespace critline {

struct RsEvaluation {
    double z = 0.0;
    double z_prime = 0.0;
    double err_est = 0.0;
};

// Requires t >= 50.  When with_derivative is false z_prime is left at 0.
RsEvaluation rs_z(double t, bool with_derivative = true);

// Empirical error envelope of rs_z (calibrated against a high-precision
// reference; conservative by roughly an order of magnitude).
double rs_err_estimate(double t);

namespace rs_detail {
extern const double* kCheb[6];
extern const int kChebLen[6];
} // namespace rs_detail

} // namespace critline

#endif
