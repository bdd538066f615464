// Evaluation of zeta(s) and its derivatives, the functional-equation factor
// chi(s), the continuous phase theta(t), and the real functions Z(t), Z'(t),
// Z^(l)(t) and Z_1(s) on and near the critical line.
//
// Backends
//   - Euler-Maclaurin with adaptive truncation: works on and off the line,
//     O(t) per point, ~1e-12 accuracy at desk-scale heights.
//   - Riemann-Siegel main sum + corrections (rs_formula): O(sqrt t) per
//     point on the line, used for Z when t exceeds cfg.rs_threshold.
//
// All functions are pure; safe to call from many threads concurrently.
#ifndef CRITLINE_EVALUATOR_HPP
#define CRITLINE_EVALUATOR_HPP

#include <complex>
#include <limits>

namespace critline {

using cplx = std::complex<double>;

// s = sigma + i t
struct ComplexPoint {
    double sigma = 0.0;
    double t = 0.0;

    cplx value() const { return {sigma, t}; }
    static ComplexPoint critical(double t) { return {0.5, t}; }
    static ComplexPoint from(cplx s) { return {s.real(), s.imag()}; }
};

struct PrecisionConfig {
    double rel_tol = 1e-12;       // relative target accuracy, must be < 1e-4
    double abs_floor = 1e-11;     // absolute accuracy floor, > 0
    long max_terms = 8'000'000;   // cap on Euler-Maclaurin series length
    double epsilon_slack = 0.125; // exponent slack recorded beside trend fits
    // Z switches to the Riemann-Siegel path above this height.  Set to
    // infinity for the Euler-Maclaurin-only precision profile.
    double rs_threshold = 200.0;

    void validate() const; // throws std::invalid_argument on bad fields

    static PrecisionConfig fast() { return {}; }
    static PrecisionConfig precise() {
        PrecisionConfig c;
        c.rs_threshold = std::numeric_limits<double>::infinity();
        return c;
    }
};

struct ZEvaluation {
    double t = 0.0;
    double z = 0.0;          // Z(t)
    double z_prime = 0.0;    // Z'(t)
    double theta = 0.0;      // continuous phase at t
    double err_est = 0.0;    // estimated absolute error of z
    double im_residue = 0.0; // |Im| discarded when projecting to the real axis
};

// zeta(s) by adaptive Euler-Maclaurin.  Throws near the pole (|s-1| < 1e-8)
// and above the supported height (|t| > 1e6).
cplx zeta(ComplexPoint s, const PrecisionConfig& cfg);

// l-th derivative, l <= 4.  l <= 2 uses termwise-differentiated
// Euler-Maclaurin; l >= 3 uses Cauchy-circle quadrature of radius
// 0.25/log(|t|+2) around s.  l = 0 is exactly zeta().
cplx zeta_deriv(ComplexPoint s, int ell, const PrecisionConfig& cfg);

// chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s), via logs.
cplx chi(ComplexPoint s);

// chi'/chi(s) = log(2 pi) + (pi/2) cot(pi s/2) - psi(1-s).
// Domain: -1 <= sigma <= 2, |t| >= 1.
cplx chi_logderiv(ComplexPoint s);

// Continuous phase with e^{i theta(t)} = chi(1/2 - i t)^{1/2}, real-analytic
// branch anchored at theta(0) = 0, and its first three derivatives.
double theta(double t);
double theta_deriv(double t);
double theta_deriv2(double t);
double theta_deriv3(double t);

// Z(t) = e^{i theta(t)} zeta(1/2 + i t), with Z'(t) filled as well.
ZEvaluation Z(double t, const PrecisionConfig& cfg);

// Value-only Z, the cheap entry point for sign scans.
double Z_value(double t, const PrecisionConfig& cfg);

double Z_prime(double t, const PrecisionConfig& cfg);

// Z_1(s) = zeta'(s) - (1/2)(chi'/chi)(s) zeta(s);  |Z_1(1/2+it)| = |Z'(t)|.
cplx Z1(ComplexPoint s, const PrecisionConfig& cfg);

// l-th t-derivative of Z via the Leibniz expansion in zeta^(m) and
// derivatives of the phase factor; l <= 3.
double Z_higher_deriv(double t, int ell, const PrecisionConfig& cfg);

// | |chi(sigma+it)| (t/2pi)^(sigma-1/2) - 1 |, the Stirling magnitude check.
double chi_magnitude_check(double sigma, double t);

} // namespace critline

#endif
