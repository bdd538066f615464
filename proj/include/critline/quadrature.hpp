// Adaptive Gauss-Legendre quadrature on 15-point panels with recursive
// bisection.  A panel is accepted when the two-half refinement agrees with
// the single-panel value; the refinement is what gets accumulated, so the
// reported error estimate is conservative.
//
// Vector integrands share one sweep: all components are evaluated at the
// same nodes and the panel splits until every component passes.  The moment
// suites rely on this to keep a dozen integrals mutually consistent.
#ifndef CRITLINE_QUADRATURE_HPP
#define CRITLINE_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace critline {

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    std::size_t evals = 0;
    bool converged = true;
};

struct VecQuadResult {
    std::vector<double> value;
    std::vector<double> err_est;
    std::size_t evals = 0;
    bool converged = true;
};

// f(t) -> scalar integrand.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol, int max_depth = 32);

// f(t, out) fills ncomp components; all are integrated over [a, b] together.
VecQuadResult integrate_vec(const std::function<void(double, std::span<double>)>& f,
                            int ncomp, double a, double b, double rel_tol,
                            double abs_tol, int max_depth = 32);

// Non-adaptive composite rule (`panels` equal panels of 15 nodes each).
// Used as the independent doubled-node oracle in the tests.
double integrate_fixed(const std::function<double(double)>& f, double a, double b,
                       int panels);

} // namespace critline

#endif
