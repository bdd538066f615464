#include "critline/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "critline/summation.hpp"

namespace critline {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on P_15 from the Chebyshev initial guess (converges to machine
// precision in a handful of steps; avoids transcribed tables).
struct Gl15 {
    std::array<double, 15> x{};
    std::array<double, 15> w{};

    Gl15() {
        constexpr int n = 15;
        constexpr double pi = 3.141592653589793238462643383279502884;
        for (int i = 0; i < n; ++i) {
            double xi = std::cos(pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 60; ++it) {
                // P_n(xi) and P_n'(xi) by the three-term recurrence
                double p0 = 1.0, p1 = xi;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                double dx = p1 / dp;
                xi -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            x[static_cast<std::size_t>(i)] = xi;
            w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - xi * xi) * dp * dp);
        }
    }
};

const Gl15& gl15() {
    static const Gl15 table;
    return table;
}

void gl15_panel_vec(const std::function<void(double, std::span<double>)>& f,
                    int ncomp, double a, double b, std::span<double> out,
                    std::vector<double>& scratch) {
    const Gl15& g = gl15();
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    std::vector<CompensatedSum> acc(static_cast<std::size_t>(ncomp));
    for (int i = 0; i < 15; ++i) {
        double t = c + h * g.x[static_cast<std::size_t>(i)];
        f(t, std::span<double>(scratch.data(), static_cast<std::size_t>(ncomp)));
        for (int j = 0; j < ncomp; ++j)
            acc[static_cast<std::size_t>(j)].add(
                g.w[static_cast<std::size_t>(i)] * scratch[static_cast<std::size_t>(j)]);
    }
    for (int j = 0; j < ncomp; ++j)
        out[static_cast<std::size_t>(j)] = h * acc[static_cast<std::size_t>(j)].value();
}

struct VecState {
    const std::function<void(double, std::span<double>)>* f;
    int ncomp;
    double rel_tol;
    double abs_tol;
    std::vector<CompensatedSum> value;
    std::vector<CompensatedSum> err;
    std::size_t evals = 0;
    bool converged = true;
    std::vector<double> scratch;
};

void adapt_vec(VecState& st, double a, double b, std::span<const double> whole,
               int depth) {
    const int nc = st.ncomp;
    double m = 0.5 * (a + b);
    std::vector<double> left(static_cast<std::size_t>(nc));
    std::vector<double> right(static_cast<std::size_t>(nc));
    gl15_panel_vec(*st.f, nc, a, m, left, st.scratch);
    gl15_panel_vec(*st.f, nc, m, b, right, st.scratch);
    st.evals += 30;

    bool ok = true;
    for (int j = 0; j < nc; ++j) {
        auto ju = static_cast<std::size_t>(j);
        double refined = left[ju] + right[ju];
        double diff = std::abs(whole[ju] - refined);
        double tol = std::max(st.abs_tol, st.rel_tol * std::abs(refined));
        if (diff > tol) {
            ok = false;
            break;
        }
    }
    if (ok || depth <= 0) {
        if (!ok) st.converged = false;
        for (int j = 0; j < nc; ++j) {
            auto ju = static_cast<std::size_t>(j);
            double refined = left[ju] + right[ju];
            st.value[ju].add(refined);
            st.err[ju].add(std::abs(whole[ju] - refined));
        }
        return;
    }
    adapt_vec(st, a, m, left, depth - 1);
    adapt_vec(st, m, b, right, depth - 1);
}

} // namespace

VecQuadResult integrate_vec(const std::function<void(double, std::span<double>)>& f,
                            int ncomp, double a, double b, double rel_tol,
                            double abs_tol, int max_depth) {
    if (!(a <= b)) throw std::invalid_argument("integrate_vec: bad interval");
    VecQuadResult res;
    res.value.assign(static_cast<std::size_t>(ncomp), 0.0);
    res.err_est.assign(static_cast<std::size_t>(ncomp), 0.0);
    if (a == b) return res;

    VecState st;
    st.f = &f;
    st.ncomp = ncomp;
    st.rel_tol = rel_tol;
    // The acceptance test compares against the bisected panel, so the split
    // tolerance is shared across the whole range through abs_tol.
    st.abs_tol = abs_tol;
    st.value.assign(static_cast<std::size_t>(ncomp), {});
    st.err.assign(static_cast<std::size_t>(ncomp), {});
    st.scratch.assign(static_cast<std::size_t>(ncomp), 0.0);

    std::vector<double> whole(static_cast<std::size_t>(ncomp));
    gl15_panel_vec(f, ncomp, a, b, whole, st.scratch);
    st.evals = 15;
    adapt_vec(st, a, b, whole, max_depth);

    for (int j = 0; j < ncomp; ++j) {
        auto ju = static_cast<std::size_t>(j);
        res.value[ju] = st.value[ju].value();
        res.err_est[ju] = st.err[ju].value();
    }
    res.evals = st.evals;
    res.converged = st.converged;
    return res;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol, int max_depth) {
    auto wrap = [&f](double t, std::span<double> out) { out[0] = f(t); };
    VecQuadResult v = integrate_vec(wrap, 1, a, b, rel_tol, abs_tol, max_depth);
    QuadResult r;
    r.value = v.value[0];
    r.err_est = v.err_est[0];
    r.evals = v.evals;
    r.converged = v.converged;
    return r;
}

double integrate_fixed(const std::function<double(double)>& f, double a, double b,
                       int panels) {
    const Gl15& g = gl15();
    CompensatedSum acc;
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double pa = a + p * h;
        double c = pa + 0.5 * h;
        double hw = 0.5 * h;
        for (int i = 0; i < 15; ++i)
            acc.add(hw * g.w[static_cast<std::size_t>(i)] *
                    f(c + hw * g.x[static_cast<std::size_t>(i)]));
    }
    return acc.value();
}

} // namespace critline
