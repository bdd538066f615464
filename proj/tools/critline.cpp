// Command-line front end: scanning and caching zeros, moment tables, the
// verification suite, and trend/constant fits.
//
//   critline zeros   --t-max 100 --cache zeros.cache
//   critline extrema --cache zeros.cache
//   critline moments --kind discrete --k 1 --t-max 100 --cache zeros.cache
//   critline verify  --t-max 500 [--cache zeros.cache] --format json
//   critline fit     --kind discrete --k 1 --t-grid 2000,4000,8000 --cache ...
//   critline fit     --arith --k 2 --xi-max 1e7
//
// All numeric output renders with 17 significant digits; given the same
// flags and seed the stdout payload is byte-identical across runs (timings
// go to stderr).
#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "critline/arithmetic.hpp"
#include "critline/moments.hpp"
#include "critline/verify.hpp"
#include "critline/zerofinder.hpp"

using namespace critline;

namespace {

struct RunConfig {
    double t_max = 500.0;
    std::vector<int> k_list{1};
    std::vector<int> ell_list{0};
    double rel_tol = 1e-12;
    double abs_floor = 1e-11;
    double rs_threshold = 200.0;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::string cache_path;
    std::string format = "csv";
    std::uint64_t seed = 1;

    PrecisionConfig precision() const {
        PrecisionConfig cfg;
        cfg.rel_tol = rel_tol;
        cfg.abs_floor = abs_floor;
        cfg.rs_threshold = rs_threshold;
        cfg.validate();
        return cfg;
    }
    ParallelMap pool() const { return ParallelMap(workers); }
};

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

void add_common(CLI::App* cmd, RunConfig& rc) {
    cmd->add_option("--t-max", rc.t_max, "height limit T");
    cmd->add_option("--k", rc.k_list, "moment orders (repeat or comma-separate)")
        ->delimiter(',')
        ->check(CLI::Range(1, 8));
    cmd->add_option("--ell", rc.ell_list, "derivative orders")
        ->delimiter(',')
        ->check(CLI::Range(0, 4));
    cmd->add_option("--rel-tol", rc.rel_tol, "relative evaluation tolerance");
    cmd->add_option("--abs-floor", rc.abs_floor, "absolute accuracy floor");
    cmd->add_option("--rs-threshold", rc.rs_threshold,
                    "switch Z to the Riemann-Siegel path above this height");
    cmd->add_option("--workers", rc.workers, "worker threads")
        ->check(CLI::Range(1u, 256u));
    cmd->add_option("--cache", rc.cache_path, "zero-cache file path");
    cmd->add_option("--format", rc.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", rc.seed, "seed for sampled checks");
    cmd->set_config("--config", "", "key=value config file (flags override)");
}

// Load the cache when the file exists (corrupt files abort with a format
// error), extend it when it falls short, build it otherwise; writes back
// whenever a path was given.
ZeroCache obtain_cache(const RunConfig& rc, double t_max) {
    PrecisionConfig cfg = rc.precision();
    ParallelMap pool = rc.pool();
    if (!rc.cache_path.empty() && std::filesystem::exists(rc.cache_path)) {
        ZeroCache cache = load_cache(rc.cache_path);
        if (cache.t_max + 1e-9 < t_max) {
            cache = extend_cache(cache, t_max, cfg, pool);
            save_cache(cache, rc.cache_path);
        }
        return cache;
    }
    ZeroCache cache = build_cache(t_max, cfg, pool);
    if (!rc.cache_path.empty()) save_cache(cache, rc.cache_path);
    return cache;
}

int cmd_zeros(const RunConfig& rc) {
    ZeroCache cache = obtain_cache(rc, rc.t_max);
    long observed = 0;
    double min_gap = 1e300, max_gap = 0.0;
    for (const auto& z : cache.zeros)
        if (z.gamma <= rc.t_max) ++observed;
    for (const auto& g : cache.gaps) {
        min_gap = std::min(min_gap, g.width());
        max_gap = std::max(max_gap, g.width());
    }
    CountAudit audit = count_audit(rc.t_max, observed);
    if (rc.format == "json") {
        std::printf("{\"t_max\": %s, \"zeros\": %ld, \"expected\": %ld, "
                    "\"drift\": %s, \"drift_bound\": %s, \"min_gap\": %s, "
                    "\"max_gap\": %s}\n",
                    num17(rc.t_max).c_str(), observed, audit.expected,
                    num17(audit.drift).c_str(), num17(audit.bound).c_str(),
                    num17(min_gap).c_str(), num17(max_gap).c_str());
    } else {
        std::printf("t_max,zeros,expected,drift,drift_bound,min_gap,max_gap\n");
        std::printf("%s,%ld,%ld,%s,%s,%s,%s\n", num17(rc.t_max).c_str(), observed,
                    audit.expected, num17(audit.drift).c_str(),
                    num17(audit.bound).c_str(), num17(min_gap).c_str(),
                    num17(max_gap).c_str());
    }
    return audit.within_bound() ? 0 : 1;
}

int cmd_extrema(const RunConfig& rc) {
    if (rc.cache_path.empty())
        throw std::invalid_argument("extrema: --cache is required");
    ZeroCache cache = load_cache(rc.cache_path);
    PrecisionConfig cfg = rc.precision();

    std::vector<double> resid(cache.gaps.size(), 0.0);
    rc.pool().for_each(cache.gaps.size(), [&](std::size_t i) {
        resid[i] = std::abs(Z_prime(cache.gaps[i].lambda, cfg));
    });
    bool alternating = true;
    for (std::size_t i = 0; i + 1 < cache.gaps.size(); ++i)
        alternating = alternating && cache.gaps[i].sign == -cache.gaps[i + 1].sign;
    double worst_resid = 0.0;
    for (double r : resid) worst_resid = std::max(worst_resid, r);

    if (rc.format == "json") {
        std::printf("{\"gaps\": %zu, \"max_zprime_residual\": %s, "
                    "\"signs_alternate\": %s}\n",
                    cache.gaps.size(), num17(worst_resid).c_str(),
                    alternating ? "true" : "false");
    } else {
        std::printf("gaps,max_zprime_residual,signs_alternate\n");
        std::printf("%zu,%s,%d\n", cache.gaps.size(), num17(worst_resid).c_str(),
                    alternating ? 1 : 0);
    }
    bool ok = alternating && worst_resid <= 100.0 * cfg.abs_floor;
    return ok ? 0 : 1;
}

MomentKind parse_kind(const std::string& name) {
    if (name == "discrete") return MomentKind::discrete_max;
    if (name == "continuous_Z") return MomentKind::continuous_Z;
    if (name == "continuous_Zderiv") return MomentKind::continuous_Zderiv;
    if (name == "continuous_zeta_deriv") return MomentKind::continuous_zeta_deriv;
    if (name == "mixed_square") return MomentKind::mixed_square;
    if (name == "mixed_abs") return MomentKind::mixed_abs;
    if (name == "windowed") return MomentKind::windowed;
    throw CLI::ValidationError("--kind", "unknown moment kind '" + name + "'");
}

void emit_moment_rows(const std::vector<MomentResult>& rows,
                      const std::string& format) {
    if (format == "json") {
        std::printf("{\"moments\": [");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const MomentResult& r = rows[i];
            std::printf("%s{\"kind\": \"%s\", \"k\": %d, \"ell\": %d, \"sigma\": %s, "
                        "\"t_min\": %s, \"t_max\": %s, \"value\": %s, \"err\": %s, "
                        "\"normalized\": %s, \"p\": %s}",
                        i ? ", " : "", moment_kind_name(r.spec.kind), r.spec.k,
                        r.spec.ell, num17(r.spec.sigma).c_str(),
                        num17(r.spec.t_min).c_str(), num17(r.spec.t_max).c_str(),
                        num17(r.value).c_str(), num17(r.err_est).c_str(),
                        num17(r.normalized).c_str(), num17(r.p).c_str());
        }
        std::printf("]}\n");
        return;
    }
    std::printf("kind,k,ell,sigma,t_min,t_max,value,err,normalized,p\n");
    for (const MomentResult& r : rows)
        std::printf("%s,%d,%d,%s,%s,%s,%s,%s,%s,%s\n", moment_kind_name(r.spec.kind),
                    r.spec.k, r.spec.ell, num17(r.spec.sigma).c_str(),
                    num17(r.spec.t_min).c_str(), num17(r.spec.t_max).c_str(),
                    num17(r.value).c_str(), num17(r.err_est).c_str(),
                    num17(r.normalized).c_str(), num17(r.p).c_str());
}

int cmd_moments(const RunConfig& rc, const std::string& kind_name, double sigma) {
    if (rc.k_list.empty())
        throw CLI::ValidationError("--k", "at least one moment order is required");
    MomentKind kind = parse_kind(kind_name);
    PrecisionConfig cfg = rc.precision();
    ParallelMap pool = rc.pool();

    std::vector<MomentResult> rows;
    if (kind == MomentKind::windowed) {
        for (int k : rc.k_list)
            rows.push_back(windowed_moment(k, sigma, rc.t_max, cfg, pool));
    } else {
        ZeroCache cache = obtain_cache(rc, rc.t_max);
        for (int k : rc.k_list) {
            if (kind == MomentKind::discrete_max) {
                rows.push_back(discrete_moment(k, rc.t_max, cache, cfg));
            } else if (kind == MomentKind::continuous_Zderiv ||
                       kind == MomentKind::continuous_zeta_deriv) {
                for (int ell : rc.ell_list) {
                    MomentSpec spec;
                    spec.kind = kind;
                    spec.k = k;
                    spec.ell = ell;
                    spec.t_max = rc.t_max;
                    rows.push_back(continuous_moment(spec, cfg, cache, pool));
                }
            } else {
                MomentSpec spec;
                spec.kind = kind;
                spec.k = k;
                spec.t_max = rc.t_max;
                rows.push_back(continuous_moment(spec, cfg, cache, pool));
            }
        }
    }
    emit_moment_rows(rows, rc.format);
    return 0;
}

int cmd_verify(const RunConfig& rc, bool heavy) {
    PrecisionConfig cfg = rc.precision();
    ParallelMap pool = rc.pool();
    ZeroCache cache = obtain_cache(rc, rc.t_max);

    VerifyOptions opt;
    opt.t_max = rc.t_max;
    opt.seed = rc.seed;
    opt.heavy = heavy;
    VerifyReport rep = run_verify(opt, cache, cfg, pool);

    if (rc.format == "json") {
        std::printf("{\"checks\": [");
        for (std::size_t i = 0; i < rep.checks.size(); ++i) {
            const CheckResult& c = rep.checks[i];
            std::printf("%s{\"name\": \"%s\", \"status\": \"%s\", \"metric\": %s, "
                        "\"threshold\": %s, \"detail\": \"%s\"}",
                        i ? ", " : "", c.name.c_str(),
                        c.report_only ? "report-only" : (c.passed ? "pass" : "fail"),
                        num17(c.metric).c_str(), num17(c.threshold).c_str(),
                        json_escape(c.detail).c_str());
        }
        std::printf("], \"all_pass\": %s}\n", rep.all_pass() ? "true" : "false");
    } else {
        std::printf("name,status,metric,threshold,detail\n");
        for (const CheckResult& c : rep.checks)
            std::printf("%s,%s,%s,%s,%s\n", c.name.c_str(),
                        c.report_only ? "report-only" : (c.passed ? "pass" : "fail"),
                        num17(c.metric).c_str(), num17(c.threshold).c_str(),
                        c.detail.c_str());
    }
    for (const CheckResult& c : rep.checks)
        std::fprintf(stderr, "  %-26s %-11s %10.1f ms\n", c.name.c_str(),
                     c.report_only ? "report-only" : (c.passed ? "pass" : "FAIL"),
                     c.runtime_ms);
    return rep.all_pass() ? 0 : 1;
}

int cmd_fit(const RunConfig& rc, bool arith, const std::string& kind_name,
            const std::vector<double>& t_grid, double xi_max,
            const std::string& dump_path) {
    if (rc.k_list.empty())
        throw CLI::ValidationError("--k", "at least one order is required");

    if (arith) {
        if (!dump_path.empty()) {
            DivisorTable table = sieve_dk(rc.k_list.front(),
                                          static_cast<std::int64_t>(xi_max));
            compute_dk_tilde(table);
            dump_table_csv(table, dump_path);
        }
        if (rc.format == "json") std::printf("{\"arith_fits\": [");
        else
            std::printf("k,target_exponent,fitted_exponent,c_fit,c_at_target\n");
        bool first = true;
        for (int k : rc.k_list) {
            // six geometric cutoffs anchored at the top; the asymptotic
            // exponent needs the largest feasible sampling region
            std::vector<std::int64_t> grid;
            for (int j = 5; j >= 0; --j)
                grid.push_back(static_cast<std::int64_t>(xi_max) >> j);
            if (grid.front() < 16)
                throw CLI::ValidationError("--xi-max", "grid too short; raise --xi-max");
            PartialSumFit fit = fit_Ck(k, grid);
            if (rc.format == "json") {
                std::printf("%s{\"k\": %d, \"target_exponent\": %d, "
                            "\"fitted_exponent\": %s, \"c_fit\": %s, "
                            "\"c_at_target\": %s}",
                            first ? "" : ", ", k, k * k,
                            num17(fit.fitted_exponent).c_str(),
                            num17(fit.fitted_c).c_str(),
                            num17(fit.c_at_target).c_str());
            } else {
                std::printf("%d,%d,%s,%s,%s\n", k, k * k,
                            num17(fit.fitted_exponent).c_str(),
                            num17(fit.fitted_c).c_str(),
                            num17(fit.c_at_target).c_str());
            }
            first = false;
        }
        if (rc.format == "json") std::printf("]}\n");
        return 0;
    }

    MomentKind kind = parse_kind(kind_name);
    std::vector<double> grid = t_grid;
    if (grid.empty()) grid = {rc.t_max / 4.0, rc.t_max / 2.0, rc.t_max};
    double top = grid.back();
    ZeroCache cache = obtain_cache(rc, top);
    PrecisionConfig cfg = rc.precision();
    ParallelMap pool = rc.pool();

    double eps = rc.precision().epsilon_slack;
    if (rc.format == "json") std::printf("{\"trend_fits\": [");
    else
        std::printf("kind,k,target_exponent,epsilon_slack,fitted_exponent,"
                    "linear_slope,max_min_ratio,values\n");
    bool first = true;
    for (int k : rc.k_list) {
        TrendFit fit = trend_fit(kind, k, grid, cache, cfg, pool);
        int ell = rc.ell_list.empty() ? 0 : rc.ell_list.front();
        double target = 0.0;
        switch (kind) {
            case MomentKind::discrete_max:
            case MomentKind::continuous_Z:
            case MomentKind::windowed: target = static_cast<double>(k) * k; break;
            case MomentKind::continuous_Zderiv:
            case MomentKind::continuous_zeta_deriv:
                target = static_cast<double>(k) * (k + 2 * ell);
                break;
            case MomentKind::mixed_square: target = static_cast<double>(k) * k + 2; break;
            case MomentKind::mixed_abs: target = static_cast<double>(k) * k + 1; break;
        }
        if (rc.format == "json") {
            std::printf("%s{\"kind\": \"%s\", \"k\": %d, \"target_exponent\": %s, "
                        "\"epsilon_slack\": %s, "
                        "\"fitted_exponent\": %s, \"linear_slope\": %s, "
                        "\"max_min_ratio\": %s, \"values\": [",
                        first ? "" : ", ", moment_kind_name(kind), k,
                        num17(target).c_str(), num17(eps).c_str(),
                        num17(fit.fitted_exponent).c_str(),
                        num17(fit.linear_slope).c_str(),
                        num17(fit.max_min_ratio).c_str());
            for (std::size_t i = 0; i < fit.values.size(); ++i)
                std::printf("%s%s", i ? ", " : "", num17(fit.values[i]).c_str());
            std::printf("]}");
        } else {
            std::string values;
            for (std::size_t i = 0; i < fit.values.size(); ++i)
                values += (i ? " " : "") + num17(fit.values[i]);
            std::printf("%s,%d,%s,%s,%s,%s,%s,%s\n", moment_kind_name(kind), k,
                        num17(target).c_str(), num17(eps).c_str(),
                        num17(fit.fitted_exponent).c_str(),
                        num17(fit.linear_slope).c_str(),
                        num17(fit.max_min_ratio).c_str(), values.c_str());
        }
        first = false;
    }
    if (rc.format == "json") std::printf("]}\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical-line zeta toolkit: zeros, extrema, moments, verification"};
    app.require_subcommand(1);

    RunConfig rc;

    auto* zeros = app.add_subcommand("zeros", "scan zeros, locate extrema, write cache");
    add_common(zeros, rc);

    auto* extrema = app.add_subcommand("extrema", "re-verify cached extrema");
    add_common(extrema, rc);

    std::string kind_name = "discrete";
    double sigma = 0.5;
    auto* moments = app.add_subcommand("moments", "compute moment tables");
    add_common(moments, rc);
    moments->add_option("--kind", kind_name, "moment kind");
    moments->add_option("--sigma", sigma, "abscissa for windowed moments");

    bool heavy = false;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify, rc);
    verify->add_flag("--heavy", heavy, "include the tall windowed-moment grid");

    bool arith = false;
    std::string fit_kind = "discrete";
    std::vector<double> t_grid;
    double xi_max = 1e6;
    auto* fit = app.add_subcommand("fit", "trend and constant fits");
    add_common(fit, rc);
    fit->add_flag("--arith", arith, "fit C_k from the divisor partial sums");
    fit->add_option("--kind", fit_kind, "moment kind for the trend fit");
    fit->add_option("--t-grid", t_grid, "explicit height grid")->delimiter(',');
    fit->add_option("--xi-max", xi_max, "largest sieve cutoff for --arith");
    std::string dump_path;
    fit->add_option("--dump-table", dump_path,
                    "write the sieved n,dk,dk_tilde table as CSV (--arith)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (zeros->parsed()) return cmd_zeros(rc);
        if (extrema->parsed()) return cmd_extrema(rc);
        if (moments->parsed()) return cmd_moments(rc, kind_name, sigma);
        if (verify->parsed()) return cmd_verify(rc, heavy);
        if (fit->parsed()) return cmd_fit(rc, arith, fit_kind, t_grid, xi_max, dump_path);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "critline: error: %s\n", e.what());
        return 2;
    }
    return 0;
}
