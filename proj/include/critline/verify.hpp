// The verification suite: every exact identity, true inequality, and
// asymptotic-shape check the toolkit can test numerically, run as named
// checks with explicit thresholds.  Asserting checks decide the exit code;
// report-only checks carry measured values whose constants are ineffective
// (never asserted).
#ifndef CRITLINE_VERIFY_HPP
#define CRITLINE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "critline/moments.hpp"

namespace critline {

struct CheckResult {
    std::string name;
    bool report_only = false;
    bool passed = true;     // always true for report-only checks
    double metric = 0.0;    // residual (smaller is better) or slack (>= 1 passes)
    double threshold = 0.0; // asserted bound on the metric
    std::string detail;     // short human-readable summary
    double runtime_ms = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.report_only && !c.passed) return false;
        return true;
    }
};

struct VerifyOptions {
    double t_max = 500.0;
    std::uint64_t seed = 1;
    int identity_samples = 200; // seeded t-samples for the pointwise identities
    int gap_identity_count = 200;
    bool heavy = false; // include the tall windowed-moment grid
};

VerifyReport run_verify(const VerifyOptions& opt, const ZeroCache& cache,
                        const PrecisionConfig& cfg, const ParallelMap& pool);

} // namespace critline

#endif
