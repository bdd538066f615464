// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exit code 0 only if all pass.
//
// The heavy criteria share one zero cache built up to t = 10010 with the
// Riemann-Siegel fast path; identity-grade checks use the Euler-Maclaurin
// precision profile.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "critline/arithmetic.hpp"
#include "critline/moments.hpp"
#include "critline/quadrature.hpp"
#include "critline/rng.hpp"
#include "critline/rs_formula.hpp"
#include "critline/zerofinder.hpp"
#include "oracles.hpp"

using namespace critline;

namespace {

int g_failures = 0;
std::chrono::steady_clock::time_point g_t0;

double now_s() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - g_t0)
        .count();
}

void report(int idx, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d %-24s %s  (t=%.1fs)\n", pass ? "PASS" : "FAIL", idx, name,
                detail.c_str(), now_s());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

const PrecisionConfig kFast = PrecisionConfig::fast();
const PrecisionConfig kPrecise = PrecisionConfig::precise();
const ParallelMap kPool(std::max(2u, std::thread::hardware_concurrency()));

// ---- 1. gap identity ----
void criterion_gap_identity(const ZeroCache& cache) {
    const std::size_t n = std::min<std::size_t>(200, cache.gaps.size());
    std::vector<double> resid(3 * n, 0.0);
    kPool.for_each(3 * n, [&](std::size_t j) {
        int k = static_cast<int>(j % 3) + 1;
        resid[j] = gap_integral(cache.gaps[j / 3], k, kPrecise).identity_residual;
    });
    double worst = 0.0;
    for (double r : resid) worst = std::max(worst, r);
    report(1, "gap_identity", worst <= 1e-6,
           fmt("max rel residual %.3g over first %.0f gaps, k=1..3, tol 1e-6", worst,
               static_cast<double>(n)));
}

// ---- 2. |Z'| = |Z_1| ----
void criterion_deriv_identity() {
    SeededRng rng(2024);
    std::vector<double> ts(1000);
    for (auto& t : ts) t = rng.uniform(10.0, 1000.0);
    std::vector<double> dev(ts.size(), 0.0);
    kPool.for_each(ts.size(), [&](std::size_t i) {
        double zp = std::abs(Z_prime(ts[i], kPrecise));
        double z1 = std::abs(Z1(ComplexPoint::critical(ts[i]), kPrecise));
        dev[i] = std::abs(zp - z1) / (1.0 + zp);
    });
    double worst = 0.0;
    for (double d : dev) worst = std::max(worst, d);
    report(2, "deriv_identity", worst <= 1e-8,
           fmt("max ||Z'|-|Z_1||/(1+|Z'|) = %.3g at 1000 seeded t, tol 1e-8", worst));
}

// ---- 3. zero census ----
void criterion_census(const ZeroCache& cache) {
    // independent dense-grid oracle
    auto oracle100 = oracles::grid_sign_changes(
        [](double u) { return Z_value(u, kFast); }, 0.05, 100.0, 0.05, 1e-6);
    auto oracle1000 = oracles::grid_sign_changes(
        [](double u) { return Z_value(u, kFast); }, 0.05, 1000.0, 0.02, 1e-6);

    auto scan100 = scan_zeros(0.0, 100.0, kFast, kPool);
    auto scan1000 = scan_zeros(0.0, 1000.0, kFast, kPool);

    bool counts_ok = oracle100.size() == 29 && scan100.size() == 29 &&
                     oracle1000.size() == 649 && scan1000.size() == 649;

    // audit drift along the cached scan
    double worst_ratio = 0.0;
    for (double T : {20.0, 50.0, 100.0, 300.0, 1000.0, 3000.0, 10000.0}) {
        long obs = 0;
        for (const auto& z : cache.zeros)
            if (z.gamma <= T) ++obs;
        CountAudit a = count_audit(T, obs);
        worst_ratio = std::max(worst_ratio, std::abs(a.drift) / a.bound);
    }
    report(3, "zero_census", counts_ok && worst_ratio <= 1.0,
           fmt("N(100)=%g N(1000)=%g (oracle agrees); max |drift|/(2logT) = %.3g",
               static_cast<double>(scan100.size()), static_cast<double>(scan1000.size()),
               worst_ratio));
}

// ---- 4. Conrey-Ghosh constant ----
void criterion_cg_constant(const ZeroCache& cache) {
    const double c = 1.194528; // (e^2 - 5)/2
    bool ok = true;
    std::string detail;
    for (double T : {2500.0, 5000.0, 10000.0}) {
        MomentResult m = discrete_moment(1, T, cache, kFast);
        double dev = std::abs(m.value - c * std::log(T));
        ok = ok && dev <= 3.0;
        detail += fmt("T=%g: M1-c*logT = %+.3f  ", T, m.value - c * std::log(T));
    }
    MomentResult m4 = discrete_moment(1, 10000.0, cache, kFast);
    double rel = m4.value / std::log(10000.0) / c;
    ok = ok && rel >= 0.8 && rel <= 1.2;
    detail += fmt("M1(1e4)/log = %.4f (=%.3f of the constant); ",
                  m4.value / std::log(10000.0), rel);
    TrendFit fit = trend_fit(MomentKind::discrete_max, 1, {2500.0, 5000.0, 10000.0},
                             cache, kFast, kPool);
    ok = ok && std::abs(fit.linear_slope / c - 1.0) <= 0.25;
    detail += fmt("fitted slope vs log T = %.4f", fit.linear_slope);
    report(4, "conrey_ghosh_m1", ok, detail);
}

// ---- 5. Holder / Cauchy-Schwarz suite ----
void criterion_holder(const ZeroCache& cache) {
    bool ok = true;
    double worst = 1e18;
    for (int k : {2, 3}) {
        DirichletPoly poly = build_poly(k, 20);
        HolderReport rep = holder_suite(k, 500.0, cache, &poly, kPrecise, kPool);
        for (const auto& c : rep.chains) worst = std::min(worst, c.slack);
        ok = ok && rep.all_above(1.0 - 1e-6);
    }
    report(5, "holder_suite", ok,
           fmt("min slack %.6f over both k in {2,3}, T=500, xi=20 (>= 1-1e-6)", worst));
}

// ---- 6. Montgomery-Vaughan mean value ----
void criterion_mv() {
    DirichletPoly poly = build_poly(2, 50);
    MeanValueReport a = mv_meanvalue_check(poly, 5000.0, kFast);
    MeanValueReport b = mv_meanvalue_check(poly, 10000.0, kFast);
    bool ok = a.relative_deviation <= 0.02 && b.relative_deviation <= a.relative_deviation;
    report(6, "mv_meanvalue", ok,
           fmt("rel dev %.4g%% at T=5000, %.4g%% at T=10000 (tol 2%%, decreasing)",
               100.0 * a.relative_deviation, 100.0 * b.relative_deviation));
}

// ---- 7. divisor sieve exactness ----
void criterion_sieve() {
    bool exact = true;
    for (int k = 1; k <= 4 && exact; ++k) {
        DivisorTable t = sieve_dk(k, 500);
        for (std::int64_t n = 1; n <= 500; ++n) {
            if (t.dk[static_cast<std::size_t>(n)] !=
                static_cast<std::int64_t>(oracles::divisor_count_bruteforce(
                    static_cast<std::uint64_t>(n), k))) {
                exact = false;
                break;
            }
        }
    }
    bool bounded = true;
    for (int k = 1; k <= 4 && bounded; ++k) {
        DivisorTable t = sieve_dk(k, 100000);
        compute_dk_tilde(t);
        for (std::int64_t n = 2; n <= t.xi; ++n) {
            double bound = static_cast<double>(t.dk[static_cast<std::size_t>(n)]) *
                           std::log(static_cast<double>(n));
            if (!(t.dk_tilde[static_cast<std::size_t>(n)] <= bound * (1.0 + 1e-13))) {
                bounded = false;
                break;
            }
        }
    }
    report(7, "divisor_sieve", exact && bounded,
           std::string("d_k exact vs brute force (n<=500, k<=4): ") +
               (exact ? "yes" : "NO") +
               "; d~_k <= d_k log n (n<=1e5, k<=4): " + (bounded ? "yes" : "NO"));
}

// ---- 8. C_1 sanity ----
void criterion_c1() {
    DivisorTable t = sieve_dk(1, 100000);
    double h = partial_sum_dk2_over_n(t, 100000);
    double dev = std::abs(h - std::log(1e5) - 0.5772156649);
    report(8, "c1_harmonic", dev <= 1e-5,
           fmt("|H_xi - log xi - gamma| = %.3g at xi=1e5 (tol 1/xi = 1e-5)", dev));
}

// ---- 9. Cauchy-circle inequality ----
void criterion_cauchy_lemma() {
    CauchyLemmaReport r = cauchy_lemma_check(1, 1, 0.1, 200.0, kPrecise, kPool);
    bool ok = r.lhs <= r.rhs * (1.0 + 1e-3);
    report(9, "cauchy_lemma", ok,
           fmt("lhs %.6g <= rhs %.6g * (1+1e-3), 25-point disk sample", r.lhs, r.rhs));
}

// ---- 10. Theorem-1 boundedness trend ----
void criterion_m2_trend(const ZeroCache& cache) {
    TrendFit fit = trend_fit(MomentKind::discrete_max, 2, {2000.0, 4000.0, 8000.0},
                             cache, kFast, kPool);
    bool ok = fit.max_min_ratio <= 4.0;
    std::string detail = fmt("r_2 max/min = %.3f (<= 4); ", fit.max_min_ratio);
    detail += "r_2(T) =";
    for (double r : fit.ratios) detail += fmt(" %.5f", r);
    detail += " vs band [0.03241, 0.08218] (report-only)";
    report(10, "m2_trend", ok, detail);
}

// ---- 11. chi suite ----
void criterion_chi_suite() {
    SeededRng rng(7);
    double worst_unit = 0.0;
    for (int i = 0; i < 100; ++i) {
        double t = rng.uniform(1.0, 1000.0);
        worst_unit =
            std::max(worst_unit, std::abs(std::abs(chi(ComplexPoint::critical(t))) - 1.0));
    }
    bool est_ok = true;
    for (double t : {20.0, 100.0, 1000.0}) {
        double dev = std::abs(chi_logderiv(ComplexPoint::critical(t)).real() +
                              std::log(t / (2.0 * 3.141592653589793)));
        est_ok = est_ok && dev <= 5.0 / t;
    }
    bool mag_ok = chi_magnitude_check(0.25, 500.0) <= 2.0 / 500.0 &&
                  chi_magnitude_check(0.75, 500.0) <= 2.0 / 500.0;
    report(11, "chi_suite", worst_unit <= 1e-10 && est_ok && mag_ok,
           fmt("max ||chi|-1| = %.3g (tol 1e-10); est and Stirling magnitude in bounds",
               worst_unit));
}

// ---- 12. evaluator cross-validation ----
void criterion_cross_validation() {
    SeededRng rng(12);
    std::vector<double> ts(100);
    for (auto& t : ts) t = rng.uniform(100.0, 10000.0);
    std::vector<double> dev(ts.size(), 0.0);
    kPool.for_each(ts.size(), [&](std::size_t i) {
        dev[i] = std::abs(rs_z(ts[i], false).z - Z(ts[i], kPrecise).z);
    });
    double worst = 0.0;
    for (double d : dev) worst = std::max(worst, d);

    // observed convergence order of the analytic derivatives vs central
    // differences, median over a panel of heights
    std::vector<double> orders;
    for (double t : {25.0, 30.0, 47.0, 61.0, 83.0}) {
        double exact = Z_prime(t, kPrecise);
        auto zf = [&](double u) { return Z_value(u, kPrecise); };
        double e1 = std::abs(oracles::fd1(zf, t, 0.04) - exact);
        double e2 = std::abs(oracles::fd1(zf, t, 0.02) - exact);
        orders.push_back(std::log2(e1 / e2));
    }
    std::sort(orders.begin(), orders.end());
    double order = orders[orders.size() / 2];

    report(12, "cross_validation", worst <= 1e-6 && order >= 1.9,
           fmt("max |Z_rs - Z_em| = %.3g at 100 seeded t (tol 1e-6); FD order %.3f",
               worst, order));
}

// ---- 13. window closed form + convexity diagnostic ----
void criterion_window() {
    SeededRng rng(13);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        double k = rng.uniform(0.5, 3.0);
        double T = rng.uniform(3.0, 25.0);
        double t = rng.uniform(0.5 * T, 2.5 * T);
        double direct = integrate_fixed(
            [&](double tau) {
                double u = t - tau;
                return std::exp(-2.0 * k * u * u);
            },
            T, 2.0 * T, 64);
        worst = std::max(worst, std::abs(gaussian_window(t, k, T) - direct));
    }
    std::string detail = fmt("max |closed form - quadrature| = %.3g (tol 1e-10); ", worst);
    detail += "convexity ratio:";
    for (double T : {250.0, 500.0, 1000.0}) {
        ConvexityDiagnostic d = window_convexity(1.0, 0.6, T, kFast, kPool);
        detail += fmt(" J(T=%g)=%.4g", T, d.ratio);
    }
    detail += " (report-only)";
    report(13, "window_forms", worst <= 1e-10, detail);
}

} // namespace

int main() {
    g_t0 = std::chrono::steady_clock::now();
    std::printf("building shared zero cache to t = 10010 ...\n");
    std::fflush(stdout);
    ZeroCache cache = build_cache(10010.0, kFast, kPool);
    std::printf("cache ready: %zu zeros (t=%.1fs)\n", cache.zeros.size(), now_s());
    std::fflush(stdout);

    criterion_gap_identity(cache);
    criterion_deriv_identity();
    criterion_census(cache);
    criterion_cg_constant(cache);
    criterion_holder(cache);
    criterion_mv();
    criterion_sieve();
    criterion_c1();
    criterion_cauchy_lemma();
    criterion_m2_trend(cache);
    criterion_chi_suite();
    criterion_cross_validation();
    criterion_window();

    std::printf("%s: %d of 13 criteria failed (t=%.1fs)\n",
                g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", g_failures,
                now_s());
    return g_failures == 0 ? 0 : 1;
}
