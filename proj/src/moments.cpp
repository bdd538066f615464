#include "critline/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "critline/quadrature.hpp"
#include "critline/summation.hpp"

namespace critline {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

struct Segment {
    double a = 0.0;
    double b = 0.0;
};

// Breakpoints for the gap-aligned quadrature: every ordinate in range, the
// extrema when the integrand has |.| kinks there, and the two critical
// points below gamma_1 when the range reaches that low.
std::vector<Segment> gap_aligned_segments(const ZeroCache& cache, double t_min,
                                          double t_max, bool split_at_lambda,
                                          const PrecisionConfig& cfg) {
    if (cache.t_max + 1e-9 < t_max)
        throw CoverageError("moments: cache covers only t <= " +
                            std::to_string(cache.t_max));
    std::vector<double> pts{t_min, t_max};
    for (const auto& z : cache.zeros)
        if (z.gamma > t_min && z.gamma < t_max) pts.push_back(z.gamma);
    if (split_at_lambda) {
        for (const auto& g : cache.gaps)
            if (g.located && g.lambda > t_min && g.lambda < t_max)
                pts.push_back(g.lambda);
        if (t_min < 14.1) {
            for (double lp : low_critical_points(cfg))
                if (lp > t_min && lp < t_max) pts.push_back(lp);
        }
    }
    std::sort(pts.begin(), pts.end());
    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1] - pts[i] > 1e-12) segs.push_back({pts[i], pts[i + 1]});
    return segs;
}

std::vector<Segment> uniform_segments(double a, double b, double width) {
    std::vector<Segment> segs;
    auto n = static_cast<std::size_t>(std::ceil((b - a) / width));
    n = std::max<std::size_t>(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        double lo = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
        double hi = a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(n);
        segs.push_back({lo, hi});
    }
    return segs;
}

struct SweepResult {
    std::vector<double> value;
    std::vector<double> err;
    std::size_t evals = 0;
    bool converged = true;
};

// One vector integrand over many segments, segments in parallel, reduction
// in segment order so results do not depend on scheduling.
SweepResult sweep(const std::vector<Segment>& segs, int ncomp,
                  const std::function<void(double, std::span<double>)>& f,
                  double rel_tol, double abs_tol, const ParallelMap& pool) {
    std::vector<VecQuadResult> parts(segs.size());
    pool.for_each(segs.size(), [&](std::size_t i) {
        parts[i] = integrate_vec(f, ncomp, segs[i].a, segs[i].b, rel_tol, abs_tol, 36);
    });
    SweepResult out;
    std::vector<CompensatedSum> vals(static_cast<std::size_t>(ncomp));
    std::vector<CompensatedSum> errs(static_cast<std::size_t>(ncomp));
    for (const auto& p : parts) {
        out.evals += p.evals;
        out.converged = out.converged && p.converged;
        for (int j = 0; j < ncomp; ++j) {
            vals[static_cast<std::size_t>(j)].add(p.value[static_cast<std::size_t>(j)]);
            errs[static_cast<std::size_t>(j)].add(p.err_est[static_cast<std::size_t>(j)]);
        }
    }
    for (int j = 0; j < ncomp; ++j) {
        out.value.push_back(vals[static_cast<std::size_t>(j)].value());
        out.err.push_back(errs[static_cast<std::size_t>(j)].value());
    }
    return out;
}

double norm_exponent(const MomentSpec& spec) {
    switch (spec.kind) {
        case MomentKind::discrete_max:
        case MomentKind::continuous_Z:
        case MomentKind::windowed: return static_cast<double>(spec.k) * spec.k;
        case MomentKind::continuous_Zderiv:
        case MomentKind::continuous_zeta_deriv:
            return static_cast<double>(spec.k) * (spec.k + 2 * spec.ell);
        case MomentKind::mixed_square: return static_cast<double>(spec.k) * spec.k + 2;
        case MomentKind::mixed_abs: return static_cast<double>(spec.k) * spec.k + 1;
    }
    return 0.0;
}

void fill_normalization(MomentResult& r) {
    r.p = norm_exponent(r.spec);
    double lt = std::log(r.spec.t_max);
    if (r.spec.kind == MomentKind::discrete_max)
        r.normalized = r.value / std::pow(lt, r.p);
    else
        r.normalized = r.value / (r.spec.t_max * std::pow(lt, r.p));
}

} // namespace

const char* moment_kind_name(MomentKind kind) {
    switch (kind) {
        case MomentKind::discrete_max: return "discrete";
        case MomentKind::continuous_Z: return "continuous_Z";
        case MomentKind::continuous_Zderiv: return "continuous_Zderiv";
        case MomentKind::continuous_zeta_deriv: return "continuous_zeta_deriv";
        case MomentKind::mixed_square: return "mixed_square";
        case MomentKind::mixed_abs: return "mixed_abs";
        case MomentKind::windowed: return "windowed";
    }
    return "?";
}

GapContribution gap_integral(const ZeroGap& gap, int k, const PrecisionConfig& cfg) {
    if (!gap.located)
        throw std::invalid_argument("gap_integral: extremum not located");
    if (!(gap.width() > 1e-9))
        throw std::domain_error("gap_integral: degenerate gap");
    if (k < 1) throw std::domain_error("gap_integral: k >= 1");

    auto f = [&cfg, k](double t) {
        ZEvaluation e = Z(t, cfg);
        return std::abs(e.z_prime * ipow(e.z, 2 * k - 1));
    };
    double scale = ipow(std::abs(gap.z_lambda), 2 * k);
    double abs_tol = 1e-17 * (scale + 1e-30);
    QuadResult left = integrate(f, gap.gamma, gap.lambda, 1e-9, abs_tol, 36);
    QuadResult right = integrate(f, gap.lambda, gap.gamma_plus, 1e-9, abs_tol, 36);
    if (!left.converged || !right.converged)
        throw std::runtime_error("gap_integral: quadrature did not converge");

    GapContribution c;
    c.gap = gap;
    c.k = k;
    c.integral = left.value + right.value;
    c.err_est = left.err_est + right.err_est;
    c.identity_residual = std::abs(k * c.integral - scale) / scale;
    return c;
}

MomentResult discrete_moment(int k, double T, const ZeroCache& cache,
                             const PrecisionConfig& cfg) {
    if (k < 1) throw std::domain_error("discrete_moment: k >= 1");
    if (cache.t_max + 1e-9 < T)
        throw CoverageError("discrete_moment: cache covers only t <= " +
                            std::to_string(cache.t_max));
    (void)cfg;
    CompensatedSum sum;
    long n_obs = 0;
    double err = 0.0;
    for (std::size_t i = 0; i < cache.zeros.size(); ++i) {
        if (cache.zeros[i].gamma > T) break;
        ++n_obs;
        if (i >= cache.gaps.size())
            throw CoverageError("discrete_moment: last ordinate lacks a partner");
        const ZeroGap& g = cache.gaps[i];
        double z2k = ipow(std::abs(g.z_lambda), 2 * k);
        sum.add(z2k);
        err += 2.0 * k * z2k / std::max(std::abs(g.z_lambda), 1e-12) * 1e-9;
    }
    if (n_obs == 0) throw std::domain_error("discrete_moment: no ordinates below T");

    MomentResult r;
    r.spec.kind = MomentKind::discrete_max;
    r.spec.k = k;
    r.spec.t_min = 0.0;
    r.spec.t_max = T;
    r.value = sum.value() / static_cast<double>(n_obs);
    r.err_est = err / static_cast<double>(n_obs);
    fill_normalization(r);
    return r;
}

LowPointContribution low_points_contribution(int k, const PrecisionConfig& cfg) {
    LowPointContribution c;
    c.lambda = low_critical_points(cfg);
    for (double lp : c.lambda) {
        double z = Z_value(lp, cfg);
        c.z2k.push_back(ipow(std::abs(z), 2 * k));
        c.total += c.z2k.back();
    }
    return c;
}

MomentResult continuous_moment(const MomentSpec& spec, const PrecisionConfig& cfg,
                               const ZeroCache& cache, const ParallelMap& pool,
                               double tol_scale) {
    if (!(spec.t_min >= 0.0 && spec.t_min < spec.t_max))
        throw std::domain_error("continuous_moment: bad range");
    if (spec.k < 1) throw std::domain_error("continuous_moment: k >= 1");
    if (spec.kind == MomentKind::windowed || spec.kind == MomentKind::discrete_max)
        throw std::domain_error("continuous_moment: kind handled elsewhere");

    const bool kinked = spec.kind == MomentKind::mixed_abs;
    std::vector<Segment> segs =
        gap_aligned_segments(cache, spec.t_min, spec.t_max, kinked, cfg);

    const int k = spec.k;
    const int ell = spec.ell;
    std::function<void(double, std::span<double>)> f;
    switch (spec.kind) {
        case MomentKind::continuous_Z:
            f = [&cfg, k](double t, std::span<double> out) {
                out[0] = ipow(Z_value(t, cfg), 2 * k);
            };
            break;
        case MomentKind::continuous_Zderiv:
            f = [&cfg, k, ell](double t, std::span<double> out) {
                out[0] = ipow(Z_higher_deriv(t, ell, cfg), 2 * k);
            };
            break;
        case MomentKind::continuous_zeta_deriv:
            f = [&cfg, k, ell](double t, std::span<double> out) {
                out[0] = ipow(std::abs(zeta_deriv(ComplexPoint::critical(t), ell, cfg)),
                              2 * k);
            };
            break;
        case MomentKind::mixed_square:
            f = [&cfg, k](double t, std::span<double> out) {
                ZEvaluation e = Z(t, cfg);
                out[0] = e.z_prime * e.z_prime * ipow(e.z, 2 * k - 2);
            };
            break;
        default: // mixed_abs
            f = [&cfg, k](double t, std::span<double> out) {
                ZEvaluation e = Z(t, cfg);
                out[0] = std::abs(e.z_prime * ipow(e.z, 2 * k - 1));
            };
            break;
    }

    double rel = std::max(cfg.rel_tol, 1e-9) * tol_scale;
    double abs_tol = 1e-11 * tol_scale;
    SweepResult s = sweep(segs, 1, f, rel, abs_tol, pool);

    MomentResult r;
    r.spec = spec;
    r.value = s.value[0];
    r.err_est = s.err[0];
    r.converged = s.converged;
    if (!s.converged)
        throw std::runtime_error("continuous_moment: quadrature did not converge");
    fill_normalization(r);
    return r;
}

double gaussian_window(double t, double k, double T) {
    double s = std::sqrt(2.0 * k);
    return std::sqrt(kPi / (8.0 * k)) *
           (std::erf(s * (2.0 * T - t)) - std::erf(s * (T - t)));
}

namespace {

double window_halfwidth(double k) { return 6.0 / std::sqrt(2.0 * k); }

} // namespace

MomentResult windowed_moment(double k, double sigma, double T,
                             const PrecisionConfig& cfg, const ParallelMap& pool) {
    if (!(sigma >= 0.5 && sigma <= 0.75))
        throw std::domain_error("windowed_moment: sigma must be in [1/2, 3/4]");
    if (!(k > 0.0) || !(T >= 2.0))
        throw std::domain_error("windowed_moment: need k > 0 and T >= 2");
    double lo = T - window_halfwidth(k);
    double hi = 2.0 * T + window_halfwidth(k);
    if (lo < 1.0)
        throw std::domain_error("windowed_moment: window reaches below t = 1");

    int twok = static_cast<int>(std::lround(2.0 * k));
    bool integer_2k = std::abs(2.0 * k - twok) < 1e-12;
    auto f = [&cfg, k, sigma, T, twok, integer_2k](double t, std::span<double> out) {
        double m = std::abs(zeta(ComplexPoint{sigma, t}, cfg));
        double p = integer_2k ? ipow(m, twok) : std::pow(m, 2.0 * k);
        out[0] = p * gaussian_window(t, k, T);
    };
    SweepResult s = sweep(uniform_segments(lo, hi, 20.0), 1, f,
                          std::max(cfg.rel_tol, 1e-8), 1e-12 * T, pool);

    MomentResult r;
    r.spec.kind = MomentKind::windowed;
    r.spec.k = static_cast<int>(std::lround(k));
    r.spec.sigma = sigma;
    r.spec.t_min = lo;
    r.spec.t_max = T;
    r.value = s.value[0];
    r.err_est = s.err[0];
    r.converged = s.converged;
    fill_normalization(r);
    return r;
}

ConvexityDiagnostic window_convexity(double k, double sigma, double T,
                                     const PrecisionConfig& cfg,
                                     const ParallelMap& pool) {
    ConvexityDiagnostic d;
    d.T = T;
    d.j_sigma = windowed_moment(k, sigma, T, cfg, pool).value;
    d.j_half = windowed_moment(k, 0.5, T, cfg, pool).value;
    d.ratio = d.j_sigma /
              (std::pow(T, sigma - 0.5) * std::pow(d.j_half, 1.5 - sigma));
    return d;
}

bool HolderReport::all_above(double threshold) const {
    for (const auto& c : chains)
        if (!(c.slack >= threshold)) return false;
    return true;
}

namespace {

// Chains (a)-(c) from the component integrals:
//   I_abs = int |Z' Z^{2k-1}|, I_Z = int Z^{2k}, I_Zp = int Z'^{2k},
//   I_sq = int Z'^2 Z^{2k-2}, I_44 = int Z'^4 Z^{2k-4}
HolderReport chains_from_integrals(int k, double i_abs, double i_z, double i_zp,
                                   double i_sq, double i_44) {
    HolderReport rep;
    double kk = static_cast<double>(k);
    {
        InequalityCheck c;
        c.name = "holder_abs";
        c.lhs = i_abs;
        c.rhs = std::pow(i_z, (2.0 * kk - 1.0) / (2.0 * kk)) *
                std::pow(i_zp, 1.0 / (2.0 * kk));
        c.slack = c.rhs / c.lhs;
        rep.chains.push_back(c);
    }
    {
        InequalityCheck c;
        c.name = "holder_sq_three";
        c.lhs = i_sq;
        c.rhs = std::cbrt(i_44) * std::pow(i_abs, 2.0 / 3.0);
        c.slack = c.rhs / c.lhs;
        rep.chains.push_back(c);
    }
    {
        InequalityCheck c;
        c.name = "holder_sq_remark1";
        c.lhs = i_sq;
        c.rhs = std::pow(i_zp, 3.0 / (4.0 * kk)) *
                std::pow(i_z, (2.0 * kk - 3.0) / (4.0 * kk)) * std::sqrt(i_abs);
        c.slack = c.rhs / c.lhs;
        rep.chains.push_back(c);
    }
    return rep;
}

} // namespace

HolderReport holder_suite_on(const std::function<void(double, double&, double&)>& zpair,
                             int k, double t_min, double t_max,
                             const PrecisionConfig& cfg, const ParallelMap& pool) {
    if (k < 2) throw std::domain_error("holder_suite: k >= 2 (needs Z^{2k-4})");
    auto f = [&zpair, k](double t, std::span<double> out) {
        double z, zp;
        zpair(t, z, zp);
        double z2 = z * z;
        out[0] = std::abs(zp * ipow(z, 2 * k - 1));
        out[1] = ipow(z, 2 * k);
        out[2] = ipow(zp, 2 * k);
        out[3] = zp * zp * ipow(z, 2 * k - 2);
        out[4] = ipow(zp, 4) * ipow(z2, k - 2);
    };
    SweepResult s = sweep(uniform_segments(t_min, t_max, 2.0), 5, f,
                          std::max(cfg.rel_tol, 1e-10), 1e-13, pool);
    return chains_from_integrals(k, s.value[0], s.value[1], s.value[2], s.value[3],
                                 s.value[4]);
}

HolderReport holder_suite(int k, double T, const ZeroCache& cache,
                          const DirichletPoly* poly, const PrecisionConfig& cfg,
                          const ParallelMap& pool) {
    if (k < 2) throw std::domain_error("holder_suite: k >= 2 (needs Z^{2k-4})");
    const double t_min = 1.0;
    const int ncomp = poly ? 8 : 5;

    auto f = [&cfg, k, poly](double t, std::span<double> out) {
        ZEvaluation e = Z(t, cfg);
        out[0] = std::abs(e.z_prime * ipow(e.z, 2 * k - 1));
        out[1] = ipow(e.z, 2 * k);
        out[2] = ipow(e.z_prime, 2 * k);
        out[3] = e.z_prime * e.z_prime * ipow(e.z, 2 * k - 2);
        out[4] = ipow(e.z_prime, 4) * ipow(e.z, 2 * k - 4);
        if (poly) {
            // Z_1 zeta^{k-1} = -i e^{-i k theta} Z' Z^{k-1} on the line
            cplx rot = std::exp(cplx(0.0, -k * e.theta));
            cplx z1zk = cplx(0.0, -1.0) * rot * (e.z_prime * ipow(e.z, k - 1));
            cplx a = eval_A(t, *poly);
            cplx prod = z1zk * std::conj(a);
            out[5] = prod.real();
            out[6] = prod.imag();
            out[7] = std::norm(a);
        }
    };
    SweepResult s = sweep(gap_aligned_segments(cache, t_min, T, true, cfg), ncomp, f,
                          std::max(cfg.rel_tol, 1e-10), 1e-12, pool);
    HolderReport rep = chains_from_integrals(k, s.value[0], s.value[1], s.value[2],
                                             s.value[3], s.value[4]);
    if (poly) {
        InequalityCheck c;
        c.name = "cauchy_schwarz_A";
        cplx lhs_c(s.value[5], s.value[6]);
        c.lhs = std::norm(lhs_c);
        c.rhs = s.value[3] * s.value[7];
        c.slack = c.rhs / c.lhs;
        rep.chains.push_back(c);
    }
    return rep;
}

CauchyLemmaReport cauchy_lemma_check(int k, int ell, double R, double T,
                                     const PrecisionConfig& cfg,
                                     const ParallelMap& pool) {
    if (!(R > 0.0 && R < 0.5))
        throw std::domain_error("cauchy_lemma_check: need 0 < R < 1/2");
    if (k < 1 || ell < 0) throw std::domain_error("cauchy_lemma_check: bad orders");

    // 25 sample offsets: center, 8 at R/2, 16 at R
    std::vector<cplx> alphas{0.0};
    for (int j = 0; j < 8; ++j) {
        double ph = 2.0 * kPi * j / 8.0;
        alphas.push_back(0.5 * R * cplx(std::cos(ph), std::sin(ph)));
    }
    for (int j = 0; j < 16; ++j) {
        double ph = 2.0 * kPi * j / 16.0;
        alphas.push_back(R * cplx(std::cos(ph), std::sin(ph)));
    }

    const int ncomp = 1 + static_cast<int>(alphas.size());
    auto f = [&cfg, k, ell, &alphas](double t, std::span<double> out) {
        out[0] = ipow(std::abs(zeta_deriv(ComplexPoint::critical(t), ell, cfg)), 2 * k);
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            ComplexPoint s{0.5 + alphas[j].real(), t + alphas[j].imag()};
            out[j + 1] = ipow(std::abs(zeta(s, cfg)), 2 * k);
        }
    };
    SweepResult s = sweep(uniform_segments(0.0, T, 5.0), ncomp, f,
                          std::max(cfg.rel_tol, 1e-8), 1e-11, pool);

    CauchyLemmaReport rep;
    rep.lhs = s.value[0];
    double best = -1.0;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        if (s.value[j + 1] > best) {
            best = s.value[j + 1];
            best_j = j;
        }
    }
    double fact = 1.0;
    for (int i = 2; i <= ell; ++i) fact *= i;
    rep.rhs = std::pow(fact / std::pow(R, ell), 2.0 * k) * best;
    rep.slack = rep.rhs * (1.0 + 1e-3) / rep.lhs;
    rep.alpha_re = alphas[best_j].real();
    rep.alpha_im = alphas[best_j].imag();
    return rep;
}

SumIntegralComparison compare_sum_integral(int k, double T, const ZeroCache& cache,
                                           const PrecisionConfig& cfg,
                                           const ParallelMap& pool) {
    SumIntegralComparison cmp;
    cmp.k = k;
    double t_end = 0.0;
    CompensatedSum sum;
    for (std::size_t i = 0; i + 1 < cache.zeros.size(); ++i) {
        if (cache.zeros[i + 1].gamma > T) break;
        t_end = cache.zeros[i + 1].gamma;
        sum.add(ipow(std::abs(cache.gaps[i].z_lambda), 2 * k));
    }
    if (t_end == 0.0)
        throw std::domain_error("compare_sum_integral: no complete gap below T");
    cmp.t_end = t_end;
    cmp.discrete_sum = sum.value();

    MomentSpec spec;
    spec.kind = MomentKind::mixed_abs;
    spec.k = k;
    spec.t_min = 1.0;
    spec.t_max = t_end;
    cmp.integral = static_cast<double>(k) *
                   continuous_moment(spec, cfg, cache, pool).value;
    cmp.low_points = low_points_contribution(k, cfg).total;
    cmp.relative_gap = std::abs(cmp.integral - cmp.discrete_sum) / cmp.discrete_sum;
    return cmp;
}

TrendFit trend_fit(MomentKind kind, int k, const std::vector<double>& heights,
                   const ZeroCache& cache, const PrecisionConfig& cfg,
                   const ParallelMap& pool) {
    if (heights.size() < 3)
        throw std::invalid_argument("trend_fit: need at least three heights");
    for (std::size_t i = 1; i < heights.size(); ++i)
        if (heights[i] <= heights[i - 1])
            throw std::invalid_argument("trend_fit: heights must increase");

    TrendFit fit;
    fit.kind = kind;
    fit.k = k;
    fit.heights = heights;
    for (double T : heights) {
        MomentResult r;
        if (kind == MomentKind::discrete_max) {
            r = discrete_moment(k, T, cache, cfg);
        } else {
            MomentSpec spec;
            spec.kind = kind;
            spec.k = k;
            spec.t_max = T;
            r = continuous_moment(spec, cfg, cache, pool);
        }
        fit.values.push_back(r.value);
        fit.ratios.push_back(r.normalized);
    }

    std::vector<double> x, y, xl, yl;
    for (std::size_t i = 0; i < heights.size(); ++i) {
        x.push_back(std::log(std::log(heights[i])));
        double v = kind == MomentKind::discrete_max ? fit.values[i]
                                                    : fit.values[i] / heights[i];
        y.push_back(std::log(v));
        xl.push_back(std::log(heights[i]));
        yl.push_back(fit.values[i]);
    }
    fit.fitted_exponent = linear_fit(x, y).slope;
    if (kind == MomentKind::discrete_max) fit.linear_slope = linear_fit(xl, yl).slope;

    double lo = fit.ratios[0], hi = fit.ratios[0];
    for (double r : fit.ratios) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    fit.max_min_ratio = hi / lo;
    return fit;
}

} // namespace critline
