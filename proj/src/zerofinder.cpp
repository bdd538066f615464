#include "critline/zerofinder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace critline {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;
constexpr double kBracketWidth = 1e-11;

double local_step(double t) {
    double tt = std::max(t, 10.0);
    return kTwoPi / std::log(tt / kTwoPi) / 8.0;
}

// Bisection refinement of a bracketed sign change of f.
template <typename F>
double bisect(F&& f, double lo, double hi, double flo, double width) {
    for (int it = 0; it < 64 && hi - lo > width; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Serial scan over one window with a locally adapted step.
void scan_window(double t0, double t1, double step_scale,
                 const PrecisionConfig& cfg, std::vector<CriticalZero>& out) {
    auto zf = [&cfg](double u) { return Z_value(u, cfg); };
    double a = std::max(t0, 1e-3);
    double fa = zf(a);
    while (a < t1) {
        double b = std::min(a + step_scale * local_step(a), t1);
        double fb = zf(b);
        if (fa == 0.0) {
            out.push_back({0, a, 0.0});
        } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
            double g = bisect(zf, a, b, fa, kBracketWidth);
            out.push_back({0, g, std::abs(zf(g))});
        }
        a = b;
        fa = fb;
    }
}

std::vector<CriticalZero> scan_zeros_scaled(double t0, double t1,
                                            double step_scale,
                                            const PrecisionConfig& cfg,
                                            const ParallelMap& pool) {
    if (!(0.0 <= t0 && t0 < t1 && t1 <= 1e6))
        throw std::domain_error("scan_zeros: need 0 <= t0 < t1 <= 1e6");

    // disjoint windows, processed in parallel, merged in order
    const double window = 250.0;
    std::size_t nwin = static_cast<std::size_t>((t1 - t0) / window) + 1;
    std::vector<std::vector<CriticalZero>> parts(nwin);
    pool.for_each(nwin, [&](std::size_t w) {
        double a = t0 + static_cast<double>(w) * window;
        double b = std::min(a + window, t1);
        if (a < b) scan_window(a, b, step_scale, cfg, parts[w]);
    });

    std::vector<CriticalZero> zeros;
    for (auto& p : parts)
        zeros.insert(zeros.end(), p.begin(), p.end());
    for (std::size_t i = 0; i < zeros.size(); ++i)
        zeros[i].index = static_cast<std::int64_t>(i) + 1;
    return zeros;
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

std::string format_cache_line(const CriticalZero& z, const ZeroGap* gap) {
    char buf[256];
    if (gap)
        std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g,%.17g",
                      static_cast<long long>(z.index), z.gamma, gap->gamma_plus,
                      gap->lambda, gap->z_lambda);
    else
        std::snprintf(buf, sizeof buf, "%lld,%.17g,,,",
                      static_cast<long long>(z.index), z.gamma);
    return buf;
}

} // namespace

std::vector<CriticalZero> scan_zeros(double t0, double t1,
                                     const PrecisionConfig& cfg,
                                     const ParallelMap& pool) {
    return scan_zeros_scaled(t0, t1, 1.0, cfg, pool);
}

long count_expected(double T) {
    double x = T / kTwoPi;
    return std::lround(x * std::log(x) - x + 0.875);
}

CountAudit count_audit(double T, long observed) {
    if (T < 10.0) throw std::domain_error("count_audit: T >= 10 required");
    CountAudit a;
    double x = T / kTwoPi;
    a.expected_raw = x * std::log(x) - x + 0.875;
    a.expected = std::lround(a.expected_raw);
    a.observed = observed;
    a.drift = static_cast<double>(observed) - a.expected_raw;
    a.bound = 2.0 * std::log(T);
    return a;
}

std::vector<ZeroGap> enumerate_gaps(const std::vector<CriticalZero>& zeros,
                                    const PrecisionConfig& cfg) {
    std::vector<ZeroGap> gaps;
    if (zeros.size() < 2) return gaps;
    gaps.reserve(zeros.size() - 1);
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
        if (!(zeros[i].gamma < zeros[i + 1].gamma))
            throw std::invalid_argument("enumerate_gaps: ordinates not increasing");
        ZeroGap g;
        g.gamma = zeros[i].gamma;
        g.gamma_plus = zeros[i + 1].gamma;
        g.sign = sign_of(Z_value(0.5 * (g.gamma + g.gamma_plus), cfg));
        gaps.push_back(g);
    }
    return gaps;
}

void locate_extremum(ZeroGap& gap, const PrecisionConfig& cfg) {
    if (!(gap.width() > 1e-9))
        throw std::domain_error("locate_extremum: degenerate gap");

    auto zp = [&cfg](double u) { return Z_prime(u, cfg); };

    // Z vanishes at both ends and keeps one sign inside, so Z' takes
    // opposite signs at the endpoints; bracket slightly inside.
    double inset = 1e-6 * gap.width();
    double lo = gap.gamma + inset;
    double hi = gap.gamma_plus - inset;
    double flo = zp(lo);
    double fhi = zp(hi);
    if ((flo < 0.0) == (fhi < 0.0))
        throw MultipleExtremaError(
            "locate_extremum: Z' endpoint signs match; evaluation fault");

    gap.lambda = bisect(zp, lo, hi, flo, kBracketWidth);
    gap.z_lambda = Z_value(gap.lambda, cfg);
    if (gap.sign == 0) gap.sign = sign_of(gap.z_lambda);
    gap.located = true;

    // uniqueness audit: exactly one sign change of Z' on a 64-point grid
    int changes = 0;
    double prev = flo;
    for (int i = 1; i <= 64; ++i) {
        double u = lo + (hi - lo) * i / 64.0;
        double cur = zp(u);
        if ((prev < 0.0) != (cur < 0.0)) ++changes;
        prev = cur;
    }
    if (changes != 1)
        throw MultipleExtremaError(
            "locate_extremum: audit grid saw " + std::to_string(changes) +
            " sign changes of Z' in one gap");
}

std::vector<double> low_critical_points(const PrecisionConfig& cfg) {
    auto zp = [&cfg](double u) { return Z_prime(u, cfg); };
    std::vector<double> pts;
    double a = 0.05, fa = zp(a);
    const double g1 = 14.13;
    while (a < g1) {
        double b = std::min(a + 0.05, g1);
        double fb = zp(b);
        if ((fa < 0.0) != (fb < 0.0)) pts.push_back(bisect(zp, a, b, fa, kBracketWidth));
        a = b;
        fa = fb;
    }
    return pts;
}

namespace {

// Very fine rescan of one open gap for a zero pair the coarse grid stepped
// over (Lehmer-like pairs sit far below an eighth of the mean spacing, and
// one missed pair stays inside the 2 log T census slack).
std::vector<CriticalZero> rescan_gap(double a, double b, const PrecisionConfig& cfg) {
    auto zf = [&cfg](double u) { return Z_value(u, cfg); };
    std::vector<CriticalZero> extra;
    const int grid = 4096;
    double inset = (b - a) / grid;
    double lo = a + 0.5 * inset;
    double flo = zf(lo);
    for (int i = 1; i < grid; ++i) {
        double hi = a + (b - a) * (i + 0.5) / grid;
        double fhi = zf(hi);
        if ((flo < 0.0) != (fhi < 0.0)) {
            double g = bisect(zf, lo, hi, flo, kBracketWidth);
            extra.push_back({0, g, std::abs(zf(g))});
        }
        lo = hi;
        flo = fhi;
    }
    return extra;
}

// Locates every extremum; a gap whose uniqueness audit fails is finely
// rescanned for missed zeros, the list is re-paired, and one more pass runs.
// A second failure is a genuine evaluation fault.
void pair_and_locate(ZeroCache& cache, const PrecisionConfig& cfg,
                     const ParallelMap& pool) {
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < cache.zeros.size(); ++i)
            cache.zeros[i].index = static_cast<std::int64_t>(i) + 1;
        std::vector<ZeroGap> fresh = enumerate_gaps(cache.zeros, cfg);
        // recycle extrema that already passed (gap endpoints unchanged)
        std::size_t reuse = 0;
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            while (reuse < cache.gaps.size() &&
                   cache.gaps[reuse].gamma < fresh[i].gamma - 1e-12)
                ++reuse;
            if (reuse < cache.gaps.size() && cache.gaps[reuse].located &&
                cache.gaps[reuse].gamma == fresh[i].gamma &&
                cache.gaps[reuse].gamma_plus == fresh[i].gamma_plus)
                fresh[i] = cache.gaps[reuse];
        }
        cache.gaps = std::move(fresh);

        std::vector<char> bad(cache.gaps.size(), 0);
        pool.for_each(cache.gaps.size(), [&](std::size_t i) {
            if (cache.gaps[i].located) return;
            try {
                locate_extremum(cache.gaps[i], cfg);
            } catch (const MultipleExtremaError&) {
                bad[i] = 1;
            }
        });

        std::vector<CriticalZero> recovered;
        for (std::size_t i = 0; i < cache.gaps.size(); ++i) {
            if (!bad[i]) continue;
            if (pass == 1)
                throw MultipleExtremaError(
                    "pair_and_locate: repeated extremum-audit failure near t = " +
                    std::to_string(cache.gaps[i].gamma));
            auto extra = rescan_gap(cache.gaps[i].gamma, cache.gaps[i].gamma_plus, cfg);
            if (extra.empty())
                throw MultipleExtremaError(
                    "pair_and_locate: extremum audit failed but no missed zeros "
                    "found near t = " +
                    std::to_string(cache.gaps[i].gamma));
            recovered.insert(recovered.end(), extra.begin(), extra.end());
        }
        if (recovered.empty()) return;
        cache.zeros.insert(cache.zeros.end(), recovered.begin(), recovered.end());
        std::sort(cache.zeros.begin(), cache.zeros.end(),
                  [](const CriticalZero& x, const CriticalZero& y) {
                      return x.gamma < y.gamma;
                  });
    }
}

ZeroCache assemble_cache(std::vector<CriticalZero> zeros, double t_max,
                         const PrecisionConfig& cfg, const ParallelMap& pool) {
    ZeroCache cache;
    cache.t_max = t_max;
    cache.tol = kBracketWidth;
    cache.zeros = std::move(zeros);
    pair_and_locate(cache, cfg, pool);
    return cache;
}

long zeros_not_above(const std::vector<CriticalZero>& zeros, double T) {
    long n = 0;
    for (const auto& z : zeros)
        if (z.gamma <= T) ++n;
    return n;
}

} // namespace

ZeroCache build_cache(double t_max, const PrecisionConfig& cfg,
                      const ParallelMap& pool) {
    if (!(t_max >= 15.0 && t_max <= 1e6))
        throw std::domain_error("build_cache: need 15 <= t_max <= 1e6");
    // overshoot so the last gamma <= t_max has its partner
    double overshoot = t_max + 6.0 * local_step(t_max) * 8.0;
    std::vector<CriticalZero> zeros = scan_zeros(0.0, overshoot, cfg, pool);

    CountAudit audit = count_audit(t_max, zeros_not_above(zeros, t_max));
    if (!audit.within_bound()) {
        // one refinement pass at a quarter of the step
        zeros = scan_zeros_scaled(0.0, overshoot, 0.25, cfg, pool);
        for (std::size_t i = 0; i < zeros.size(); ++i)
            zeros[i].index = static_cast<std::int64_t>(i) + 1;
        audit = count_audit(t_max, zeros_not_above(zeros, t_max));
        if (!audit.within_bound())
            throw AuditMismatchError(
                "build_cache: N(T) audit drift " + std::to_string(audit.drift) +
                " exceeds 2 log T after step/4 rescan");
    }
    while (!zeros.empty() && zeros.size() >= 2 &&
           zeros[zeros.size() - 2].gamma > t_max)
        zeros.pop_back(); // keep at most one zero above t_max
    return assemble_cache(std::move(zeros), t_max, cfg, pool);
}

ZeroCache extend_cache(const ZeroCache& base, double t_max,
                       const PrecisionConfig& cfg, const ParallelMap& pool) {
    if (t_max <= base.t_max) return base;
    if (base.zeros.empty()) return build_cache(t_max, cfg, pool);

    double resume = base.zeros.back().gamma + 1e-9;
    double overshoot = t_max + 6.0 * local_step(t_max) * 8.0;
    std::vector<CriticalZero> fresh = scan_zeros(resume, overshoot, cfg, pool);

    std::vector<CriticalZero> zeros = base.zeros;
    for (auto z : fresh) {
        z.index = static_cast<std::int64_t>(zeros.size()) + 1;
        zeros.push_back(z);
    }
    CountAudit audit = count_audit(t_max, zeros_not_above(zeros, t_max));
    if (!audit.within_bound())
        throw AuditMismatchError("extend_cache: N(T) audit drift " +
                                 std::to_string(audit.drift) + " exceeds 2 log T");
    while (!zeros.empty() && zeros.size() >= 2 &&
           zeros[zeros.size() - 2].gamma > t_max)
        zeros.pop_back();

    ZeroCache cache;
    cache.t_max = t_max;
    cache.tol = kBracketWidth;
    cache.zeros = std::move(zeros);
    cache.gaps = base.gaps; // pair_and_locate recycles the located extrema
    pair_and_locate(cache, cfg, pool);
    return cache;
}

void save_cache(const ZeroCache& cache, const std::string& path) {
    std::ofstream out(path, std::ios::binary); // LF line endings everywhere
    if (!out) throw std::runtime_error("save_cache: cannot open " + path);
    char head[128];
    std::snprintf(head, sizeof head, "#zeta-zero-cache v1 tmax=%.17g tol=%.17g",
                  cache.t_max, cache.tol);
    out << head << "\n";
    for (std::size_t i = 0; i < cache.zeros.size(); ++i) {
        const ZeroGap* gap = i < cache.gaps.size() ? &cache.gaps[i] : nullptr;
        out << format_cache_line(cache.zeros[i], gap) << "\n";
    }
    if (!out) throw std::runtime_error("save_cache: write failed for " + path);
}

ZeroCache load_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheFormatError("load_cache: cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw CacheFormatError("load_cache: empty file " + path);

    ZeroCache cache;
    if (std::sscanf(line.c_str(), "#zeta-zero-cache v1 tmax=%lf tol=%lf",
                    &cache.t_max, &cache.tol) != 2)
        throw CacheFormatError("load_cache: bad or wrong-version header: " + line);

    std::int64_t expect_index = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        // split on commas, keeping empty fields
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) f.push_back(tok);
        while (f.size() < 5) f.push_back("");
        if (f.size() != 5)
            throw CacheFormatError("load_cache: malformed record: " + line);

        CriticalZero z;
        z.index = std::strtoll(f[0].c_str(), nullptr, 10);
        z.gamma = std::strtod(f[1].c_str(), nullptr);
        z.refinement_residual = 0.0; // not persisted; validated before save
        if (z.index != expect_index)
            throw CacheFormatError("load_cache: record indices not contiguous");
        ++expect_index;
        if (!cache.zeros.empty() && !(z.gamma > cache.zeros.back().gamma))
            throw CacheFormatError("load_cache: ordinates not increasing");
        cache.zeros.push_back(z);

        if (!f[2].empty()) {
            ZeroGap g;
            g.gamma = z.gamma;
            g.gamma_plus = std::strtod(f[2].c_str(), nullptr);
            g.lambda = std::strtod(f[3].c_str(), nullptr);
            g.z_lambda = std::strtod(f[4].c_str(), nullptr);
            g.sign = sign_of(g.z_lambda);
            g.located = true;
            cache.gaps.push_back(g);
        }
    }
    if (cache.zeros.empty())
        throw CacheFormatError("load_cache: no records in " + path);
    if (cache.gaps.size() + 1 != cache.zeros.size())
        throw CacheFormatError("load_cache: truncated file (every non-final "
                               "record needs gap fields)");
    for (std::size_t i = 0; i < cache.gaps.size(); ++i) {
        if (cache.gaps[i].gamma_plus != cache.zeros[i + 1].gamma)
            throw CacheFormatError("load_cache: coverage gap between records");
        if (!(cache.gaps[i].gamma < cache.gaps[i].lambda &&
              cache.gaps[i].lambda < cache.gaps[i].gamma_plus))
            throw CacheFormatError("load_cache: extremum outside its gap");
    }
    return cache;
}

} // namespace critline
