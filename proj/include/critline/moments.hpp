// Discrete and continuous moment computations: the exact per-gap identity,
// gap-aligned adaptive quadrature for the continuous moments, the Gaussian-
// windowed moments, the Holder/Cauchy-Schwarz inequality suites, the
// Cauchy-circle derivative inequality, and trend fits over height grids.
#ifndef CRITLINE_MOMENTS_HPP
#define CRITLINE_MOMENTS_HPP

#include <functional>
#include <string>
#include <vector>

#include "critline/arithmetic.hpp"
#include "critline/evaluator.hpp"
#include "critline/parallel.hpp"
#include "critline/zerofinder.hpp"

namespace critline {

enum class MomentKind {
    discrete_max,        // (1/N(T)) sum of Z(lambda)^{2k}
    continuous_Z,        // int Z^{2k}
    continuous_Zderiv,   // int (Z^(l))^{2k}
    continuous_zeta_deriv, // int |zeta^(l)(1/2+it)|^{2k}
    mixed_square,        // int Z'^2 Z^{2k-2}
    mixed_abs,           // int |Z' Z^{2k-1}|
    windowed,            // J_k(sigma), Gaussian window
};

const char* moment_kind_name(MomentKind kind);

struct MomentSpec {
    MomentKind kind = MomentKind::continuous_Z;
    int k = 1;
    int ell = 0;        // derivative order for the *deriv kinds
    double t_min = 1.0; // continuous moments start at 1 by design
    double t_max = 0.0;
    double sigma = 0.5; // windowed kind only, in [1/2, 3/4]
};

struct MomentResult {
    MomentSpec spec;
    double value = 0.0;
    double err_est = 0.0;
    double normalized = 0.0; // value / (T (log T)^p), discrete: value/(log T)^p
    double p = 0.0;          // normalization exponent from the predicted power
    bool converged = true;
};

struct GapContribution {
    ZeroGap gap;
    int k = 1;
    double integral = 0.0;          // int_gamma^{gamma+} |Z' Z^{2k-1}|
    double err_est = 0.0;
    double identity_residual = 0.0; // |k integral - Z(lambda)^{2k}| / Z(lambda)^{2k}
};

// Adaptive Gauss-Legendre on [gamma, lambda] and [lambda, gamma+] (the
// integrand is smooth on each side of the extremum).
GapContribution gap_integral(const ZeroGap& gap, int k, const PrecisionConfig& cfg);

// (1/N(T)) sum over gaps with gamma <= T of Z(lambda)^{2k}.
MomentResult discrete_moment(int k, double T, const ZeroCache& cache,
                             const PrecisionConfig& cfg);

// The two critical points of Z below gamma_1 and their Z^{2k} values, the
// explicitly enumerated O_k(1) term of the discrete-sum reduction.
struct LowPointContribution {
    std::vector<double> lambda;
    std::vector<double> z2k;
    double total = 0.0;
};
LowPointContribution low_points_contribution(int k, const PrecisionConfig& cfg);

// Gap-aligned adaptive quadrature of the requested integrand over
// [spec.t_min, spec.t_max]; absolute-value integrands split at each lambda.
// tol_scale < 1 tightens the per-panel tolerance (used by the convergence
// diagnostics).
MomentResult continuous_moment(const MomentSpec& spec, const PrecisionConfig& cfg,
                               const ZeroCache& cache,
                               const ParallelMap& pool = ParallelMap(1),
                               double tol_scale = 1.0);

// w_k(t) = sqrt(pi/8k) [erf(sqrt(2k)(2T-t)) - erf(sqrt(2k)(T-t))].
double gaussian_window(double t, double k, double T);

// J_k(sigma): the windowed moment of |zeta(sigma+it)|^{2k}; sigma in
// [1/2, 3/4], truncated where the window is below 1e-16 of its peak.
MomentResult windowed_moment(double k, double sigma, double T,
                             const PrecisionConfig& cfg,
                             const ParallelMap& pool = ParallelMap(1));

struct ConvexityDiagnostic {
    double T = 0.0;
    double j_sigma = 0.0;
    double j_half = 0.0;
    double ratio = 0.0; // J(sigma) / (T^{sigma-1/2} J(1/2)^{3/2-sigma})
};
ConvexityDiagnostic window_convexity(double k, double sigma, double T,
                                     const PrecisionConfig& cfg,
                                     const ParallelMap& pool = ParallelMap(1));

// One named inequality with its computed sides; slack = rhs/lhs, so any
// value >= 1 - quadrature noise certifies the inequality numerically.
struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
};

struct HolderReport {
    std::vector<InequalityCheck> chains;
    bool all_above(double threshold) const;
};

// The Holder chains on |Z' Z^{2k-1}| and Z'^2 Z^{2k-2} plus (when a
// Dirichlet polynomial is supplied) the Cauchy-Schwarz check against A(t).
// All component integrals come from one shared vector sweep.
HolderReport holder_suite(int k, double T, const ZeroCache& cache,
                          const DirichletPoly* poly, const PrecisionConfig& cfg,
                          const ParallelMap& pool = ParallelMap(1));

// Same chains evaluated on caller-supplied stand-ins for (Z, Z'); the
// constant-function equality case of Holder is checked through this hook.
HolderReport holder_suite_on(const std::function<void(double, double&, double&)>& zpair,
                             int k, double t_min, double t_max,
                             const PrecisionConfig& cfg,
                             const ParallelMap& pool = ParallelMap(1));

// int_0^T |zeta^(l)|^{2k} vs (l!/R^l)^{2k} max over a 25-point disk sample
// (center, 8 at radius R/2, 16 at radius R) of int_0^T |zeta(1/2+a+it)|^{2k}.
struct CauchyLemmaReport {
    double lhs = 0.0;
    double rhs = 0.0;   // prefactor * sampled max
    double slack = 0.0; // rhs (1+1e-3) / lhs
    double alpha_re = 0.0, alpha_im = 0.0; // arg max sample
};
CauchyLemmaReport cauchy_lemma_check(int k, int ell, double R, double T,
                                     const PrecisionConfig& cfg,
                                     const ParallelMap& pool = ParallelMap(1));

// Discrete-sum vs k int |Z' Z^{2k-1}|, both ending at the last ordinate
// below T; the sub-gamma_1 points are reported, not hidden.
struct SumIntegralComparison {
    int k = 1;
    double t_end = 0.0;       // last gamma <= T
    double integral = 0.0;    // k * int_1^{t_end} |Z' Z^{2k-1}|
    double discrete_sum = 0.0;
    double low_points = 0.0;
    double relative_gap = 0.0;
};
SumIntegralComparison compare_sum_integral(int k, double T, const ZeroCache& cache,
                                           const PrecisionConfig& cfg,
                                           const ParallelMap& pool = ParallelMap(1));

// Values of a moment across a height grid, the normalized ratios, and a
// log-log fitted exponent.  Asserting only bounded variation is deliberate:
// the implied constants of the bounds are ineffective.
struct TrendFit {
    MomentKind kind = MomentKind::discrete_max;
    int k = 1;
    std::vector<double> heights;
    std::vector<double> values;
    std::vector<double> ratios; // value / target normalization
    double fitted_exponent = 0.0;
    double linear_slope = 0.0;  // discrete only: fit of value against log T
    double max_min_ratio = 0.0;
};
TrendFit trend_fit(MomentKind kind, int k, const std::vector<double>& heights,
                   const ZeroCache& cache, const PrecisionConfig& cfg,
                   const ParallelMap& pool = ParallelMap(1));

} // namespace critline

#endif
