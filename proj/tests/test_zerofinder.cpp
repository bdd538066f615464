#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "critline/zerofinder.hpp"
#include "oracles.hpp"

using namespace critline;

namespace {
const PrecisionConfig kCfg = PrecisionConfig::fast();
} // namespace

TEST_CASE("scan_zeros finds the first ordinates") {
    auto zeros = scan_zeros(0.0, 15.0, kCfg);
    REQUIRE(zeros.size() == 1);
    CHECK(std::abs(zeros[0].gamma - 14.1347251417) < 1e-8);
    CHECK(zeros[0].refinement_residual <= 100.0 * kCfg.abs_floor);

    auto three = scan_zeros(0.0, 30.0, kCfg);
    REQUIRE(three.size() == 3);
    CHECK(std::abs(three[0].gamma - 14.1347251417) < 1e-8);
    CHECK(std::abs(three[1].gamma - 21.0220396388) < 1e-8);
    CHECK(std::abs(three[2].gamma - 25.0108575801) < 1e-8);
    CHECK(three[0].index == 1);
    CHECK(three[2].index == 3);

    CHECK(scan_zeros(0.0, 14.0, kCfg).empty());
}

TEST_CASE("zero census against the dense-grid oracle") {
    // oracle: fixed-step sign scan, independent of the production stepping
    auto oracle = oracles::grid_sign_changes(
        [](double u) { return Z_value(u, kCfg); }, 0.05, 100.0, 0.05, 1e-6);
    CHECK(oracle.size() == 29);

    auto zeros = scan_zeros(0.0, 100.0, kCfg);
    CHECK(zeros.size() == 29);
    CHECK(count_expected(100.0) == 29);

    CountAudit audit = count_audit(100.0, static_cast<long>(zeros.size()));
    CHECK(audit.within_bound());
    CHECK(audit.expected == 29);
}

TEST_CASE("count audit values and drift bound") {
    CHECK(count_expected(1000.0) == 649);
    CHECK_THROWS_AS(count_audit(5.0, 1), std::domain_error);
    CountAudit a = count_audit(1000.0, 649);
    CHECK(std::abs(a.drift) <= a.bound);
    CHECK(a.bound == doctest::Approx(2.0 * std::log(1000.0)));
}

TEST_CASE("enumerate_gaps pairs and alternates") {
    auto zeros = scan_zeros(0.0, 60.0, kCfg);
    REQUIRE(zeros.size() >= 4);
    auto gaps = enumerate_gaps(zeros, kCfg);
    CHECK(gaps.size() == zeros.size() - 1);
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
        CHECK(gaps[i].sign == -gaps[i + 1].sign);

    std::vector<CriticalZero> single = {zeros[0]};
    CHECK(enumerate_gaps(single, kCfg).empty());

    std::vector<CriticalZero> bad = {zeros[1], zeros[0]};
    CHECK_THROWS_AS(enumerate_gaps(bad, kCfg), std::invalid_argument);
}

TEST_CASE("locate_extremum: bisection result matches the grid+golden oracle") {
    auto zeros = scan_zeros(0.0, 30.0, kCfg);
    auto gaps = enumerate_gaps(zeros, kCfg);
    REQUIRE(gaps.size() == 2);

    for (auto& gap : gaps) {
        locate_extremum(gap, kCfg);
        CHECK(gap.gamma < gap.lambda);
        CHECK(gap.lambda < gap.gamma_plus);
        CHECK(std::abs(Z_prime(gap.lambda, kCfg)) < 1e-9);
        CHECK(gap.sign * gap.z_lambda > 0.0);

        // oracle: 1024-point |Z| argmax refined by golden section
        auto absz = [](double u) { return std::abs(Z_value(u, kCfg)); };
        double best = gap.gamma;
        double best_v = -1.0;
        for (int i = 1; i < 1024; ++i) {
            double u = gap.gamma + gap.width() * i / 1024.0;
            double v = absz(u);
            if (v > best_v) {
                best_v = v;
                best = u;
            }
        }
        double h = gap.width() / 1024.0;
        double lam_oracle = oracles::golden_max(absz, best - h, best + h);
        CHECK(std::abs(gap.lambda - lam_oracle) < 1e-6);
        CHECK(std::abs(gap.z_lambda) >= best_v - 1e-9);

        // interior maximum dominates the near-boundary values
        CHECK(std::abs(gap.z_lambda) >= absz(gap.gamma + 1e-3));
        CHECK(std::abs(gap.z_lambda) >= absz(gap.gamma_plus - 1e-3));
    }

    ZeroGap degenerate;
    degenerate.gamma = 20.0;
    degenerate.gamma_plus = 20.0 + 1e-10;
    CHECK_THROWS_AS(locate_extremum(degenerate, kCfg), std::domain_error);
}

TEST_CASE("exactly two critical points of Z below gamma_1") {
    auto pts = low_critical_points(kCfg);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] > 0.0);
    CHECK(pts[1] < 14.1347);
    CHECK(std::abs(Z_prime(pts[0], kCfg)) < 1e-9);
    CHECK(std::abs(Z_prime(pts[1], kCfg)) < 1e-9);
}

TEST_CASE("cache build, save, load round-trip") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "critline_cache_test.txt";

    ZeroCache cache = build_cache(60.0, kCfg);
    REQUIRE(cache.zeros.size() >= 8);
    REQUIRE(cache.gaps.size() == cache.zeros.size() - 1);
    for (const auto& z : cache.zeros)
        CHECK(z.refinement_residual <= 100.0 * kCfg.abs_floor);

    save_cache(cache, tmp.string());
    ZeroCache loaded = load_cache(tmp.string());
    CHECK(loaded.t_max == cache.t_max);
    CHECK(loaded.tol == cache.tol);
    REQUIRE(loaded.zeros.size() == cache.zeros.size());
    REQUIRE(loaded.gaps.size() == cache.gaps.size());
    for (std::size_t i = 0; i < cache.zeros.size(); ++i) {
        CHECK(loaded.zeros[i].gamma == cache.zeros[i].gamma);
        CHECK(loaded.zeros[i].index == cache.zeros[i].index);
    }
    for (std::size_t i = 0; i < cache.gaps.size(); ++i) {
        CHECK(loaded.gaps[i].lambda == cache.gaps[i].lambda);
        CHECK(loaded.gaps[i].z_lambda == cache.gaps[i].z_lambda);
        CHECK(loaded.gaps[i].sign == cache.gaps[i].sign);
    }
    fs::remove(tmp);
}

TEST_CASE("cache version and truncation errors") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "critline_cache_bad.txt";

    {
        std::FILE* f = std::fopen(tmp.string().c_str(), "wb");
        std::fputs("#zeta-zero-cache v2 tmax=10 tol=1e-11\n1,14.1,,,\n", f);
        std::fclose(f);
        CHECK_THROWS_AS(load_cache(tmp.string()), CacheFormatError);
    }
    {
        std::FILE* f = std::fopen(tmp.string().c_str(), "wb");
        // middle record lacks gap fields: truncated coverage
        std::fputs("#zeta-zero-cache v1 tmax=30 tol=1e-11\n"
                   "1,14.13,,,\n2,21.02,,,\n",
                   f);
        std::fclose(f);
        CHECK_THROWS_AS(load_cache(tmp.string()), CacheFormatError);
    }
    fs::remove(tmp);
}

TEST_CASE("append scan preserves contiguous coverage") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "critline_cache_merge.txt";

    ZeroCache small = build_cache(40.0, kCfg);
    ZeroCache merged = extend_cache(small, 80.0, kCfg);
    ZeroCache direct = build_cache(80.0, kCfg);

    REQUIRE(merged.zeros.size() == direct.zeros.size());
    for (std::size_t i = 0; i < merged.zeros.size(); ++i)
        CHECK(std::abs(merged.zeros[i].gamma - direct.zeros[i].gamma) < 1e-9);
    for (std::size_t i = 0; i + 1 < merged.zeros.size(); ++i)
        CHECK(merged.gaps[i].gamma_plus == merged.zeros[i + 1].gamma);

    save_cache(merged, tmp.string());
    ZeroCache loaded = load_cache(tmp.string());
    CHECK(loaded.zeros.size() == merged.zeros.size());
    fs::remove(tmp);

    // identical prefix: the first zeros of the merged cache are the old ones
    for (std::size_t i = 0; i < small.zeros.size(); ++i)
        CHECK(merged.zeros[i].gamma == small.zeros[i].gamma);
}

TEST_CASE("a dropped zero pair is recovered through the extremum audit") {
    ZeroCache base = build_cache(40.0, kCfg);
    REQUIRE(base.zeros.size() >= 6);

    // simulate a scan that stepped over an interior pair
    ZeroCache doctored;
    doctored.t_max = base.t_max;
    doctored.tol = base.tol;
    doctored.zeros = base.zeros;
    doctored.zeros.erase(doctored.zeros.begin() + 2, doctored.zeros.begin() + 4);
    for (std::size_t i = 0; i < doctored.zeros.size(); ++i)
        doctored.zeros[i].index = static_cast<std::int64_t>(i) + 1;

    ZeroCache repaired = extend_cache(doctored, 45.0, kCfg);
    ZeroCache direct = build_cache(45.0, kCfg);
    REQUIRE(repaired.zeros.size() == direct.zeros.size());
    for (std::size_t i = 0; i < repaired.zeros.size(); ++i)
        CHECK(std::abs(repaired.zeros[i].gamma - direct.zeros[i].gamma) < 1e-8);
    for (std::size_t i = 0; i < repaired.gaps.size(); ++i)
        CHECK(std::abs(repaired.gaps[i].lambda - direct.gaps[i].lambda) < 1e-8);
}
