// Independent oracles for the test suites.  Everything here deliberately
// avoids the library's evaluation paths: the zeta oracle goes through the
// alternating (eta) series with CVZ convergence acceleration, divisor counts
// are brute-force enumerations, and root/extremum searches are dense-grid
// scans over a caller-supplied functor.
#ifndef CRITLINE_TESTS_ORACLES_HPP
#define CRITLINE_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

using cplx = std::complex<double>;

// Sum of (-1)^k a_k for k >= 0 by the Cohen-Rodriguez Villegas-Zagier
// acceleration; error ~ (3+sqrt(8))^{-n}.
inline cplx cvz_alternating(const std::function<cplx(int)>& a, int n = 36) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    cplx s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

// zeta(s) = eta(s) / (1 - 2^{1-s}) via the accelerated alternating series.
inline cplx eta_zeta(cplx s) {
    cplx eta = cvz_alternating([&](int k) { return std::exp(-s * std::log(k + 1.0)); });
    return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

// zeta'(s) via the differentiated eta series.
inline cplx eta_zeta_deriv(cplx s) {
    cplx etap = cvz_alternating(
        [&](int k) { return -std::log(k + 1.0) * std::exp(-s * std::log(k + 1.0)); });
    cplx two = std::exp((1.0 - s) * std::log(2.0)); // 2^{1-s}
    cplx z = eta_zeta(s);
    return (etap - two * std::log(2.0) * z) / (1.0 - two);
}

// Number of ordered factorizations of n into exactly k positive factors,
// by direct recursive enumeration of divisors.
inline std::uint64_t divisor_count_bruteforce(std::uint64_t n, int k) {
    if (k == 1) return 1;
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) total += divisor_count_bruteforce(n / d, k - 1);
    return total;
}

// All sign changes of f on (t0, t1], located by a dense grid followed by
// plain bisection.
inline std::vector<double> grid_sign_changes(const std::function<double(double)>& f,
                                             double t0, double t1, double step,
                                             double refine_width = 1e-10) {
    std::vector<double> roots;
    double a = t0;
    double fa = f(a);
    while (a < t1) {
        double b = std::min(a + step, t1);
        double fb = f(b);
        if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
            double lo = a, hi = b, flo = fa;
            while (hi - lo > refine_width) {
                double m = 0.5 * (lo + hi);
                double fm = f(m);
                if ((flo < 0.0 && fm > 0.0) || (flo > 0.0 && fm < 0.0))
                    hi = m;
                else {
                    lo = m;
                    flo = fm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return roots;
}

// Golden-section maximizer of f on [a, b] (f unimodal there).
inline double golden_max(const std::function<double(double)>& f, double a, double b,
                         double tol = 1e-10) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Central finite differences.
inline double fd1(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}
inline double fd2(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}
inline cplx fd1c(const std::function<cplx(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace oracles

#endif
