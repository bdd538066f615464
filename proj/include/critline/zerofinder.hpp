// Locating critical-line zeros, pairing them into gaps, and finding the
// unique extremum of Z between each pair.  Results persist to a line-
// oriented text cache (see save_cache for the format).
#ifndef CRITLINE_ZEROFINDER_HPP
#define CRITLINE_ZEROFINDER_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "critline/evaluator.hpp"
#include "critline/parallel.hpp"

namespace critline {

struct CriticalZero {
    std::int64_t index = 0; // 1-based
    double gamma = 0.0;
    double refinement_residual = 0.0; // |Z(gamma)| after refinement
};

struct ZeroGap {
    double gamma = 0.0;      // lower ordinate
    double gamma_plus = 0.0; // upper ordinate
    double lambda = 0.0;     // extremum of Z inside, 0 until located
    double z_lambda = 0.0;   // Z(lambda)
    int sign = 0;            // sign of Z on the open gap
    bool located = false;

    double width() const { return gamma_plus - gamma; }
};

struct ZeroCache {
    double t_max = 0.0;
    double tol = 0.0; // refinement bracket width used for the scan
    std::vector<CriticalZero> zeros;
    std::vector<ZeroGap> gaps; // gaps[i] joins zeros[i] and zeros[i+1]
};

struct CountAudit {
    double expected_raw = 0.0; // T/2pi log(T/2pi) - T/2pi + 7/8
    long expected = 0;         // rounded
    long observed = 0;
    double drift = 0.0;        // observed - expected_raw
    double bound = 0.0;        // 2 log T, the allowed |drift|
    bool within_bound() const { return std::abs(drift) <= bound; }
};

struct AuditMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MultipleExtremaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CacheFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CoverageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All sign changes of Z in (t0, t1], step an eighth of the local mean gap,
// refined by bisection to a 1e-11 bracket.  No audit here; callers audit.
std::vector<CriticalZero> scan_zeros(double t0, double t1,
                                     const PrecisionConfig& cfg,
                                     const ParallelMap& pool = ParallelMap(1));

long count_expected(double T);
CountAudit count_audit(double T, long observed);

// Pairs consecutive zeros; fills gamma, gamma_plus, sign.  Lambda unfilled.
std::vector<ZeroGap> enumerate_gaps(const std::vector<CriticalZero>& zeros,
                                    const PrecisionConfig& cfg);

// Fills lambda and z_lambda by bisection on the sign change of Z'.  A
// 64-point audit grid must see exactly one sign change, otherwise
// MultipleExtremaError (an evaluation-accuracy fault on RH).
void locate_extremum(ZeroGap& gap, const PrecisionConfig& cfg);

// The two critical points of Z below gamma_1 (the O_k(1) term of the
// discrete-sum reduction), located by a dense Z' scan of (0, gamma_1).
std::vector<double> low_critical_points(const PrecisionConfig& cfg);

// Scan from scratch (or extend `base`) to cover (0, t_max], locate every
// extremum, and run the N(T) audit; a failed audit triggers one rescan at
// step/4 before AuditMismatchError.
ZeroCache build_cache(double t_max, const PrecisionConfig& cfg,
                      const ParallelMap& pool = ParallelMap(1));
ZeroCache extend_cache(const ZeroCache& base, double t_max,
                       const PrecisionConfig& cfg,
                       const ParallelMap& pool = ParallelMap(1));

// Text format, one line per record:
//   #zeta-zero-cache v1 tmax=<float> tol=<float>
//   index,gamma,gamma_plus,lambda,Z_lambda     (17 significant digits)
// The trailing zero without a partner carries empty gap fields.
void save_cache(const ZeroCache& cache, const std::string& path);
ZeroCache load_cache(const std::string& path);

} // namespace critline

#endif
