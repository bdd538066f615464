#include "critline/rs_formula.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "critline/evaluator.hpp"
#include "critline/summation.hpp"

namespace critline {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

// Clenshaw evaluation of a Chebyshev series and its derivative in x.
void clenshaw_pair(const double* c, int n, double x, double& f, double& df) {
    double b1 = 0.0, b2 = 0.0;
    double d1 = 0.0, d2 = 0.0;
    for (int k = n - 1; k >= 1; --k) {
        double b0 = 2.0 * x * b1 - b2 + c[k];
        double d0 = 2.0 * x * d1 - d2 + 2.0 * b1;
        b2 = b1;
        b1 = b0;
        d2 = d1;
        d1 = d0;
    }
    f = x * b1 - b2 + c[0];
    df = b1 + x * d1 - d2;
}

} // namespace

double rs_err_estimate(double t) {
    double a = std::sqrt(t / kTwoPi);
    double trunc = 5e-8 * std::pow(3.5 / a, 6.0);
    double phase = 3e-15 * t; // cos-argument rounding at large heights
    return trunc + phase + 1e-14;
}

RsEvaluation rs_z(double t, bool with_derivative) {
    if (t < 50.0)
        throw std::domain_error("rs_z: Riemann-Siegel path requires t >= 50");

    const double a = std::sqrt(t / kTwoPi);
    const long n_sum = static_cast<long>(a);
    const double p = a - static_cast<double>(n_sum);
    const double th = theta(t);
    const double thp = with_derivative ? theta_deriv(t) : 0.0;

    CompensatedSum sum_z;
    CompensatedSum sum_zp;
    for (long n = 1; n <= n_sum; ++n) {
        double ln = std::log(static_cast<double>(n));
        double amp = 1.0 / std::sqrt(static_cast<double>(n));
        double phase = th - t * ln;
        sum_z.add(amp * std::cos(phase));
        if (with_derivative) sum_zp.add(amp * (ln - thp) * std::sin(phase));
    }
    double z = 2.0 * sum_z.value();
    double zp = 2.0 * sum_zp.value();

    // Correction: (-1)^(N-1) a^{-1/2} sum_k C_k(p) a^{-k}
    const double x = 2.0 * p - 1.0;
    const double sign = (n_sum % 2 == 1) ? 1.0 : -1.0;
    const double da_dt = 1.0 / (kTwoPi * 2.0 * a);
    const double ra = 1.0 / a;
    const double pref = sign / std::sqrt(a);

    double ak = 1.0;
    double corr = 0.0, corr_dt = 0.0;
    for (int k = 0; k < 6; ++k) {
        double ck, dck;
        clenshaw_pair(rs_detail::kCheb[k], rs_detail::kChebLen[k], x, ck, dck);
        corr += ck * ak;
        if (with_derivative) {
            // d/dt [C_k(p) a^{-k-1/2}] with dp/dt = da/dt
            corr_dt += ak * (2.0 * dck - (k + 0.5) * ck * ra) * da_dt;
        }
        ak *= ra;
    }
    RsEvaluation out;
    out.z = z + pref * corr;
    if (with_derivative) out.z_prime = zp + pref * corr_dt;
    out.err_est = rs_err_estimate(t);
    return out;
}

} // namespace critline
