#include "critline/arithmetic.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "critline/quadrature.hpp"
#include "critline/summation.hpp"

namespace critline {

namespace {

void check_table_args(int k, std::int64_t xi) {
    if (k < 1 || k > 6) throw std::domain_error("sieve_dk: k must be in 1..6");
    if (xi < 2 || xi > 10'000'000)
        throw std::domain_error("sieve_dk: xi must be in [2, 1e7]");
}

// one Dirichlet convolution with the constant function 1
std::vector<std::int64_t> convolve_with_one(const std::vector<std::int64_t>& in,
                                            std::int64_t xi) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(xi) + 1, 0);
    for (std::int64_t d = 1; d <= xi; ++d) {
        std::int64_t v = in[static_cast<std::size_t>(d)];
        for (std::int64_t n = d; n <= xi; n += d)
            out[static_cast<std::size_t>(n)] += v;
    }
    return out;
}

} // namespace

DivisorTable sieve_dk(int k, std::int64_t xi) {
    check_table_args(k, xi);
    DivisorTable t;
    t.k = k;
    t.xi = xi;
    t.dk.assign(static_cast<std::size_t>(xi) + 1, 1);
    t.dk[0] = 0;
    for (int j = 1; j < k; ++j) t.dk = convolve_with_one(t.dk, xi);
    return t;
}

void compute_dk_tilde(DivisorTable& table) {
    const std::int64_t xi = table.xi;
    table.dk_tilde.assign(static_cast<std::size_t>(xi) + 1, 0.0);
    std::vector<double> logs(static_cast<std::size_t>(xi) + 1, 0.0);
    for (std::int64_t n = 1; n <= xi; ++n)
        logs[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));

    if (table.k == 1) {
        // d_0 is the convolution unit, so d~_1(n) = log n
        for (std::int64_t n = 1; n <= xi; ++n)
            table.dk_tilde[static_cast<std::size_t>(n)] = logs[static_cast<std::size_t>(n)];
        return;
    }
    DivisorTable lower = sieve_dk(table.k - 1, xi);
    for (std::int64_t d = 1; d <= xi; ++d) {
        double v = static_cast<double>(lower.dk[static_cast<std::size_t>(d)]);
        double ld = logs[static_cast<std::size_t>(d)];
        for (std::int64_t n = d; n <= xi; n += d)
            table.dk_tilde[static_cast<std::size_t>(n)] +=
                v * (logs[static_cast<std::size_t>(n)] - ld);
    }
}

double partial_sum_dk2_over_n(const DivisorTable& table, std::int64_t xi) {
    if (xi > table.xi) throw std::domain_error("partial_sum: xi beyond table");
    CompensatedSum s;
    for (std::int64_t n = 1; n <= xi; ++n) {
        double d = static_cast<double>(table.dk[static_cast<std::size_t>(n)]);
        s.add(d * d / static_cast<double>(n));
    }
    return s.value();
}

double partial_sum_dk2(const DivisorTable& table, std::int64_t xi) {
    if (xi > table.xi) throw std::domain_error("partial_sum: xi beyond table");
    CompensatedSum s;
    for (std::int64_t n = 1; n <= xi; ++n) {
        double d = static_cast<double>(table.dk[static_cast<std::size_t>(n)]);
        s.add(d * d);
    }
    return s.value();
}

void dump_table_csv(const DivisorTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("dump_table_csv: cannot open " + path);
    out << "n,dk,dk_tilde\n";
    char buf[96];
    for (std::int64_t n = 1; n <= table.xi; ++n) {
        if (table.has_tilde())
            std::snprintf(buf, sizeof buf, "%lld,%lld,%.17g\n",
                          static_cast<long long>(n),
                          static_cast<long long>(table.dk[static_cast<std::size_t>(n)]),
                          table.dk_tilde[static_cast<std::size_t>(n)]);
        else
            std::snprintf(buf, sizeof buf, "%lld,%lld,\n", static_cast<long long>(n),
                          static_cast<long long>(table.dk[static_cast<std::size_t>(n)]));
        out << buf;
    }
    if (!out) throw std::runtime_error("dump_table_csv: write failed for " + path);
}

LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit: need two matching samples");
    double n = static_cast<double>(x.size());
    CompensatedSum sx, sy, sxx, sxy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx.add(x[i]);
        sy.add(y[i]);
        sxx.add(x[i] * x[i]);
        sxy.add(x[i] * y[i]);
    }
    double denom = n * sxx.value() - sx.value() * sx.value();
    if (denom == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");
    LinFit f;
    f.slope = (n * sxy.value() - sx.value() * sy.value()) / denom;
    f.intercept = (sy.value() - f.slope * sx.value()) / n;
    return f;
}

PartialSumFit fit_Ck(int k, const std::vector<std::int64_t>& xi_grid) {
    if (xi_grid.size() < 3)
        throw std::invalid_argument("fit_Ck: need at least three cutoffs");
    for (std::size_t i = 1; i < xi_grid.size(); ++i)
        if (xi_grid[i] <= xi_grid[i - 1])
            throw std::invalid_argument("fit_Ck: grid must increase");

    DivisorTable table = sieve_dk(k, xi_grid.back());
    PartialSumFit fit;
    fit.k = k;
    fit.xi_grid = xi_grid;

    std::vector<double> x, y;
    for (std::int64_t xi : xi_grid) {
        double s = partial_sum_dk2_over_n(table, xi);
        fit.sums.push_back(s);
        x.push_back(std::log(std::log(static_cast<double>(xi))));
        y.push_back(std::log(s));
    }
    LinFit lf = linear_fit(x, y);
    fit.fitted_exponent = lf.slope;
    fit.fitted_c = std::exp(lf.intercept);
    double lx = std::log(static_cast<double>(xi_grid.back()));
    fit.c_at_target = fit.sums.back() / std::pow(lx, k * k);
    return fit;
}

double DirichletPoly::coef_abs_sum() const {
    CompensatedSum s;
    for (std::size_t n = 1; n < coef.size(); ++n) s.add(coef[n]);
    return s.value();
}

DirichletPoly build_poly(int k, std::int64_t xi) {
    if (xi < 1) throw std::domain_error("build_poly: xi must be >= 1");
    DivisorTable table = sieve_dk(k, std::max<std::int64_t>(xi, 2));
    DirichletPoly p;
    p.k = k;
    p.xi = xi;
    p.coef.assign(static_cast<std::size_t>(xi) + 1, 0.0);
    p.logn.assign(static_cast<std::size_t>(xi) + 1, 0.0);
    for (std::int64_t n = 1; n <= xi; ++n) {
        p.coef[static_cast<std::size_t>(n)] =
            static_cast<double>(table.dk[static_cast<std::size_t>(n)]) /
            std::sqrt(static_cast<double>(n));
        p.logn[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
    }
    return p;
}

DirichletPoly build_poly_for_height(int k, double T, double theta) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::domain_error("build_poly_for_height: theta in (0,1)");
    auto xi = static_cast<std::int64_t>(std::pow(T, theta));
    DirichletPoly p = build_poly(k, std::max<std::int64_t>(xi, 1));
    p.theta_exponent = theta;
    return p;
}

cplx eval_A(double t, const DirichletPoly& poly) {
    CompensatedComplexSum s;
    for (std::size_t n = 1; n < poly.coef.size(); ++n) {
        double phase = -t * poly.logn[n];
        s.add(poly.coef[n] * cplx(std::cos(phase), std::sin(phase)));
    }
    return s.value();
}

MeanValueReport mv_meanvalue_check(const DirichletPoly& poly, double T,
                                   const PrecisionConfig& cfg) {
    if (!(T >= 10.0 * static_cast<double>(poly.xi)))
        throw std::domain_error("mv_meanvalue_check: need T >= 10 xi");

    MeanValueReport rep;
    CompensatedSum diag;
    CompensatedSum sq;
    for (std::size_t n = 1; n < poly.coef.size(); ++n) {
        diag.add(poly.coef[n] * poly.coef[n]); // d_k(n)^2 / n
        double d = poly.coef[n] * std::sqrt(static_cast<double>(n));
        sq.add(d * d); // d_k(n)^2
    }
    rep.main_term = T * diag.value();

    double abs_tol = 1e-12 * std::max(rep.main_term, 1.0);
    QuadResult q = integrate(
        [&poly](double t) { return std::norm(eval_A(t, poly)); }, 0.0, T,
        std::max(cfg.rel_tol, 1e-10), abs_tol, 40);
    if (!q.converged)
        throw std::runtime_error("mv_meanvalue_check: quadrature did not converge");
    rep.integral = q.value;
    rep.quad_err = q.err_est;
    rep.deviation = std::abs(rep.integral - rep.main_term);
    rep.relative_deviation = rep.deviation / rep.main_term;
    rep.c_slack = rep.deviation / sq.value();
    rep.converged = q.converged;
    return rep;
}

} // namespace critline
