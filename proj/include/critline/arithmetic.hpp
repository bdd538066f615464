// Divisor-function sieves d_k, the log convolution d~_k, partial-sum
// asymptotics with C_k extraction, and Dirichlet-polynomial evaluation with
// the Montgomery-Vaughan mean-value check.
#ifndef CRITLINE_ARITHMETIC_HPP
#define CRITLINE_ARITHMETIC_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "critline/evaluator.hpp"

namespace critline {

struct DivisorTable {
    int k = 0;
    std::int64_t xi = 0;
    std::vector<std::int64_t> dk; // 1-based; dk[n] = d_k(n), exact
    std::vector<double> dk_tilde; // 1-based; d~_k(n) = sum_{d|n} d_{k-1}(d) log(n/d)

    bool has_tilde() const { return !dk_tilde.empty(); }
};

// Exact integer d_k by k-1 successive Dirichlet convolutions with 1.
// 1 <= k <= 6, 2 <= xi <= 1e7 (values stay well inside 64 bits there).
DivisorTable sieve_dk(int k, std::int64_t xi);

// Fills dk_tilde; sieves d_{k-1} internally.
void compute_dk_tilde(DivisorTable& table);

// sum_{n<=xi} d_k(n)^2 / n and sum_{n<=xi} d_k(n)^2, compensated.
double partial_sum_dk2_over_n(const DivisorTable& table, std::int64_t xi);
double partial_sum_dk2(const DivisorTable& table, std::int64_t xi);

struct PartialSumFit {
    int k = 0;
    std::vector<std::int64_t> xi_grid;
    std::vector<double> sums;     // S(xi) = sum d_k^2/n
    double fitted_exponent = 0.0; // slope of log S vs log log xi (target k^2)
    double fitted_c = 0.0;        // exp(intercept) of the free fit
    double c_at_target = 0.0;     // S(xi_max) / (log xi_max)^{k^2}
};

// Least-squares fit of log S against log log xi over a geometric grid of at
// least three cutoffs.  The free intercept converges very slowly, so the
// constrained estimate at the largest cutoff is reported alongside it.
PartialSumFit fit_Ck(int k, const std::vector<std::int64_t>& xi_grid);

struct DirichletPoly {
    int k = 0;
    std::int64_t xi = 0;
    double theta_exponent = 0.0;  // theta with xi = T^theta, 0 when unset
    std::vector<double> coef;     // 1-based; d_k(n)/sqrt(n)
    std::vector<double> logn;     // 1-based; log n

    double coef_abs_sum() const;  // sum of coefficients = |A(0)|
};

DirichletPoly build_poly(int k, std::int64_t xi);
// xi = floor(T^theta); the proof's parameterization uses theta = 1/4.
DirichletPoly build_poly_for_height(int k, double T, double theta = 0.25);

// A(t) = sum_{n<=xi} d_k(n) n^{-1/2} e^{-i t log n}, compensated summation.
cplx eval_A(double t, const DirichletPoly& poly);

struct MeanValueReport {
    double integral = 0.0;       // numeric int_0^T |A(t)|^2 dt
    double quad_err = 0.0;
    double main_term = 0.0;      // T * sum d_k(n)^2 / n
    double deviation = 0.0;      // |integral - main_term|
    double relative_deviation = 0.0;
    double c_slack = 0.0;        // deviation / sum d_k(n)^2  (the measured MV constant)
    bool converged = true;
};

// Adaptive quadrature of |A|^2 over [0, T] against the diagonal main term;
// requires T >= 10 xi so the O(n) correction stays small.
MeanValueReport mv_meanvalue_check(const DirichletPoly& poly, double T,
                                   const PrecisionConfig& cfg);

// CSV dump of a divisor table, one `n,dk,dk_tilde` row per n (dk_tilde
// column empty when it has not been computed).
void dump_table_csv(const DivisorTable& table, const std::string& path);

// Shared least-squares helper (also used by trend fits and their tests).
struct LinFit {
    double slope = 0.0;
    double intercept = 0.0;
};
LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

} // namespace critline

#endif
