#include "critline/evaluator.hpp"

#include <cmath>
#include <stdexcept>

#include "critline/complexmath.hpp"
#include "critline/rs_formula.hpp"
#include "critline/summation.hpp"

namespace critline {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 6.283185307179586476925286766559005768;
constexpr double kLogPi = 1.1447298858494001741434273513530587;
constexpr double kLog2Pi = 1.8378770664093454835606594728112353;
constexpr double kMaxHeight = 1e6;

// B_{2j} for j = 1..10; corrections up to B_20.
constexpr double kBern[10] = {
    1.0 / 6.0,   -1.0 / 30.0,      1.0 / 42.0,       -1.0 / 30.0,      5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,   -3617.0 / 510.0,  43867.0 / 798.0, -174611.0 / 330.0,
};

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

struct EmValues {
    cplx f[3] = {0.0, 0.0, 0.0}; // zeta, zeta', zeta''
    double tail_mag = 0.0;       // size of the last Bernoulli correction
    double mag_sum = 0.0;        // sum of |terms|, the roundoff scale
};

// Euler-Maclaurin with N main-sum terms and Bernoulli corrections up to
// B_20; nder in {0,1,2} selects how many s-derivatives come along.
EmValues em_zeta_fixed(cplx s, long n_main, int nder) {
    CompensatedComplexSum sum[3];
    CompensatedSum mag;
    for (long n = 1; n < n_main; ++n) {
        double ln = std::log(static_cast<double>(n));
        cplx e = std::exp(-s * ln);
        sum[0].add(e);
        mag.add(std::exp(-s.real() * ln));
        if (nder >= 1) sum[1].add(-ln * e);
        if (nder >= 2) sum[2].add(ln * ln * e);
    }

    const double lg = std::log(static_cast<double>(n_main));
    const cplx u = std::exp(-s * lg); // N^{-s}
    const cplx sm1 = s - 1.0;
    const cplx a = static_cast<double>(n_main) * u; // N^{1-s}

    sum[0].add(a / sm1);
    sum[0].add(0.5 * u);
    mag.add(std::abs(a / sm1));
    mag.add(0.5 * std::abs(u));
    if (nder >= 1) {
        sum[1].add(-lg * a / sm1 - a / (sm1 * sm1));
        sum[1].add(-0.5 * lg * u);
    }
    if (nder >= 2) {
        sum[2].add(lg * lg * a / sm1 + 2.0 * lg * a / (sm1 * sm1) +
                   2.0 * a / (sm1 * sm1 * sm1));
        sum[2].add(0.5 * lg * lg * u);
    }

    // Bernoulli tail: sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
    cplx poly = 1.0, dpoly = 0.0, ddpoly = 0.0; // product and s-derivatives
    const double inv_n2 =
        1.0 / (static_cast<double>(n_main) * static_cast<double>(n_main));
    cplx q = u * static_cast<double>(n_main); // N^{1-s}, becomes N^{1-s-2j}
    double tail_mag = 0.0;
    int next_factor = 0;
    for (int j = 1; j <= 10; ++j) {
        // extend the rising product to 2j-1 factors: s(s+1)...(s+2j-2)
        while (next_factor <= 2 * j - 2) {
            cplx f = s + static_cast<double>(next_factor);
            ddpoly = ddpoly * f + 2.0 * dpoly;
            dpoly = dpoly * f + poly;
            poly = poly * f;
            ++next_factor;
        }
        q *= inv_n2; // N^{1-s-2j}
        double cj = kBern[j - 1] / factorial(2 * j);
        cplx term = cj * poly * q;
        sum[0].add(term);
        if (nder >= 1) sum[1].add(cj * (dpoly - poly * lg) * q);
        if (nder >= 2)
            sum[2].add(cj * (ddpoly - 2.0 * dpoly * lg + poly * lg * lg) * q);
        tail_mag = std::abs(term);
        mag.add(tail_mag);
        if (tail_mag < 1e-20 * (1.0 + std::abs(sum[0].value()))) break;
    }

    EmValues out;
    out.f[0] = sum[0].value();
    out.f[1] = sum[1].value();
    out.f[2] = sum[2].value();
    out.tail_mag = tail_mag * (1.0 + lg) * (1.0 + lg);
    out.mag_sum = mag.value();
    return out;
}

long em_start_length(double t) {
    double at = std::abs(t);
    return 2 * static_cast<long>(std::ceil(at)) + 16;
}

// Adaptive truncation: double N until two successive evaluations agree to
// the target, or down to the compensated-summation roundoff floor (which
// dominates off the line where the terms grow), whichever is coarser.
EmValues em_zeta_adaptive(cplx s, const PrecisionConfig& cfg, int nder,
                          double* err_out) {
    const long n0 = em_start_length(s.imag());
    long n = n0;
    EmValues prev = em_zeta_fixed(s, n, nder);
    for (;;) {
        long n2 = 2 * n;
        EmValues cur = em_zeta_fixed(s, n2, nder);
        double delta = std::abs(cur.f[0] - prev.f[0]);
        // summation noise plus the (coherent, worst-case) rounding of the
        // oscillatory phases t*log n
        double round_floor = 4e-16 * cur.mag_sum +
                             3e-16 * std::abs(s.imag()) *
                                 std::log(static_cast<double>(n2)) * cur.mag_sum;
        double accept = std::max({cfg.rel_tol * (1.0 + std::abs(cur.f[0])),
                                  6.0 * round_floor, 0.25 * cfg.abs_floor});
        bool capped = 2 * n2 > cfg.max_terms || n2 > 32 * n0;
        if (delta <= accept || capped) {
            if (err_out)
                *err_out = delta + cur.tail_mag + round_floor +
                           8e-16 * (1.0 + std::abs(cur.f[0]));
            return cur;
        }
        prev = cur;
        n = n2;
    }
}

void check_height(double t) {
    if (std::abs(t) > kMaxHeight)
        throw std::domain_error("evaluator: |t| above supported height 1e6");
}

void check_pole(cplx s) {
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-8)
        throw std::domain_error("evaluator: s within guard radius of the pole at 1");
}

double theta_error(double th) { return 1e-15 * (1.0 + std::abs(th)); }

// Derivatives of the phase factor e^{i theta(t)} divided by e^{i theta}.
// E1/E0 = i th', E2/E0 = i th'' - th'^2, E3/E0 = i th''' - 3 th' th'' - i th'^3.
cplx phase_ratio(int j, double tp, double tpp, double tppp) {
    switch (j) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, tp};
        case 2: return {-tp * tp, tpp};
        default: return {-3.0 * tp * tpp, tppp - tp * tp * tp};
    }
}

} // namespace

void PrecisionConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1e-4))
        throw std::invalid_argument("PrecisionConfig: rel_tol must be in (0, 1e-4)");
    if (!(abs_floor > 0.0))
        throw std::invalid_argument("PrecisionConfig: abs_floor must be positive");
    if (!(epsilon_slack > 0.0 && epsilon_slack < 1.0))
        throw std::invalid_argument("PrecisionConfig: epsilon_slack must be in (0,1)");
    if (max_terms < 64)
        throw std::invalid_argument("PrecisionConfig: max_terms too small");
}

cplx zeta(ComplexPoint s, const PrecisionConfig& cfg) {
    check_height(s.t);
    check_pole(s.value());
    return em_zeta_adaptive(s.value(), cfg, 0, nullptr).f[0];
}

cplx zeta_deriv(ComplexPoint s, int ell, const PrecisionConfig& cfg) {
    if (ell < 0 || ell > 4)
        throw std::domain_error("zeta_deriv: ell must be in 0..4");
    check_height(s.t);
    check_pole(s.value());
    if (ell <= 2) return em_zeta_adaptive(s.value(), cfg, ell, nullptr).f[ell];

    // Cauchy-circle quadrature, radius shrinking with height.
    double r = 0.25 / std::log(std::abs(s.t) + 2.0);
    double pole_gap = std::abs(s.value() - cplx(1.0, 0.0));
    if (pole_gap < 4.0 * r) r = 0.25 * pole_gap;
    const int m = 48;
    // share one truncation length across the circle
    long n_len = em_start_length(s.t) * 2;
    CompensatedComplexSum acc;
    for (int j = 0; j < m; ++j) {
        double phi = kTwoPi * j / m;
        cplx w = s.value() + r * cplx(std::cos(phi), std::sin(phi));
        cplx val = em_zeta_fixed(w, n_len, 0).f[0];
        acc.add(val * cplx(std::cos(ell * phi), -std::sin(ell * phi)));
    }
    double scale = factorial(ell) / (m * std::pow(r, ell));
    return acc.value() * scale;
}

cplx chi(ComplexPoint s) {
    cplx sv = s.value();
    cplx log_chi = sv * std::log(2.0) + (sv - 1.0) * kLogPi +
                   log_sin_pi(sv * 0.5) + log_gamma(1.0 - sv);
    if (std::abs(log_chi.real()) > 700.0)
        throw std::domain_error("chi: |log chi| too large (sigma far outside [-5, 6])");
    return std::exp(log_chi);
}

// Symmetric form log pi - psi((1-s)/2)/2 - psi(s/2)/2; equal to the
// log-derivative of the asymmetric factor (check it via the duplication and
// reflection formulas) but regular at s = 2, which the strip form is not.
cplx chi_logderiv(ComplexPoint s) {
    if (s.sigma < -1.0 || s.sigma > 2.0)
        throw std::domain_error("chi_logderiv: need -1 <= sigma <= 2");
    cplx sv = s.value();
    if (std::abs(s.t) < 1.0) {
        // extension below the |t| >= 1 strip: keep clear of the real poles
        if (std::abs(sv) < 0.1 || std::abs(sv - 1.0) < 0.1)
            throw std::domain_error("chi_logderiv: too close to a pole of chi'/chi");
    }
    return kLogPi - 0.5 * digamma(0.5 * (1.0 - sv)) - 0.5 * digamma(0.5 * sv);
}

// theta via log Gamma below the asymptotic switch, series above.  The two
// agree to ~1e-13 at the seam (checked in the tests).
double theta(double t) {
    if (t < 0.0) throw std::domain_error("theta: t must be >= 0");
    if (t < 32.0) {
        cplx lg = log_gamma(cplx(0.25, 0.5 * t));
        return lg.imag() - 0.5 * t * kLogPi;
    }
    double lt = std::log(t / kTwoPi);
    double t2 = t * t;
    return 0.5 * t * lt - 0.5 * t - kPi / 8.0 +
           (1.0 / 48.0) / t + (7.0 / 5760.0) / (t * t2) +
           (31.0 / 80640.0) / (t2 * t2 * t) + (127.0 / 430080.0) / (t2 * t2 * t2 * t);
}

double theta_deriv(double t) {
    if (t < 0.0) throw std::domain_error("theta_deriv: t must be >= 0");
    if (t < 32.0) {
        return 0.5 * digamma(cplx(0.25, 0.5 * t)).real() - 0.5 * kLogPi;
    }
    double t2 = t * t;
    return 0.5 * std::log(t / kTwoPi) - (1.0 / 48.0) / t2 -
           (7.0 / 1920.0) / (t2 * t2) - (31.0 / 16128.0) / (t2 * t2 * t2);
}

double theta_deriv2(double t) {
    if (t < 32.0) return -0.25 * trigamma(cplx(0.25, 0.5 * t)).imag();
    double t2 = t * t;
    return 0.5 / t + (1.0 / 24.0) / (t * t2) + (7.0 / 480.0) / (t2 * t2 * t);
}

double theta_deriv3(double t) {
    if (t < 32.0) return -0.125 * tetragamma(cplx(0.25, 0.5 * t)).real();
    double t2 = t * t;
    return -0.5 / t2 - 0.125 / (t2 * t2) - (7.0 / 96.0) / (t2 * t2 * t2);
}

ZEvaluation Z(double t, const PrecisionConfig& cfg) {
    if (t < 0.0) throw std::domain_error("Z: t must be >= 0");
    check_height(t);
    ZEvaluation out;
    out.t = t;
    out.theta = theta(t);

    if (t > cfg.rs_threshold && t >= 50.0) {
        RsEvaluation rs = rs_z(t, true);
        out.z = rs.z;
        out.z_prime = rs.z_prime;
        out.err_est = rs.err_est;
        out.im_residue = 0.0;
        return out;
    }

    double zerr = 0.0;
    EmValues em = em_zeta_adaptive(cplx(0.5, t), cfg, 1, &zerr);
    double tp = theta_deriv(t);
    cplx phase(std::cos(out.theta), std::sin(out.theta));
    cplx w = phase * em.f[0];
    cplx wp = cplx(0.0, 1.0) * phase * (tp * em.f[0] + em.f[1]);
    out.z = w.real();
    out.z_prime = wp.real();
    out.im_residue = std::abs(w.imag());
    out.err_est = zerr + std::abs(em.f[0]) * theta_error(out.theta) +
                  2e-16 * (1.0 + std::abs(em.f[0]));
    return out;
}

double Z_value(double t, const PrecisionConfig& cfg) {
    if (t < 0.0) throw std::domain_error("Z: t must be >= 0");
    check_height(t);
    if (t > cfg.rs_threshold && t >= 50.0) return rs_z(t, false).z;
    double zerr = 0.0;
    EmValues em = em_zeta_adaptive(cplx(0.5, t), cfg, 0, &zerr);
    double th = theta(t);
    cplx w = cplx(std::cos(th), std::sin(th)) * em.f[0];
    return w.real();
}

double Z_prime(double t, const PrecisionConfig& cfg) { return Z(t, cfg).z_prime; }

cplx Z1(ComplexPoint s, const PrecisionConfig& cfg) {
    check_pole(s.value());
    check_height(s.t);
    EmValues em = em_zeta_adaptive(s.value(), cfg, 1, nullptr);
    return em.f[1] - 0.5 * chi_logderiv(s) * em.f[0];
}

double Z_higher_deriv(double t, int ell, const PrecisionConfig& cfg) {
    if (ell < 0 || ell > 3)
        throw std::domain_error("Z_higher_deriv: ell must be in 0..3");
    if (t < 0.0) throw std::domain_error("Z_higher_deriv: t must be >= 0");
    check_height(t);

    double th = theta(t);
    double tp = theta_deriv(t);
    double tpp = theta_deriv2(t);
    double tppp = theta_deriv3(t);
    cplx phase(std::cos(th), std::sin(th));

    EmValues em = em_zeta_adaptive(cplx(0.5, t), cfg, std::min(ell, 2), nullptr);
    cplx zeta_m[4];
    zeta_m[0] = em.f[0];
    zeta_m[1] = em.f[1];
    zeta_m[2] = em.f[2];
    if (ell >= 3) zeta_m[3] = zeta_deriv(ComplexPoint::critical(t), 3, cfg);

    // Z^(l) = Re sum_m binom(l,m) (i^m zeta^(m)) (d/dt)^{l-m} e^{i theta}
    static const double binom[4][4] = {
        {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    cplx total = 0.0;
    for (int m = 0; m <= ell; ++m) {
        cplx dz = i_pow[m] * zeta_m[m];
        total += binom[ell][m] * dz * phase_ratio(ell - m, tp, tpp, tppp);
    }
    total *= phase;
    return total.real();
}

double chi_magnitude_check(double sigma, double t) {
    if (sigma < -1.0 || sigma > 2.0 || t < 1.0)
        throw std::domain_error("chi_magnitude_check: need -1 <= sigma <= 2, t >= 1");
    double mag = std::abs(chi(ComplexPoint{sigma, t}));
    return std::abs(mag * std::pow(t / kTwoPi, sigma - 0.5) - 1.0);
}

} // namespace critline
