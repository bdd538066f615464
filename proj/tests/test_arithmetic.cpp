#include <doctest.h>

#include <cmath>
#include <numeric>

#include "critline/arithmetic.hpp"
#include "critline/rng.hpp"
#include "oracles.hpp"

using namespace critline;

TEST_CASE("sieve_dk exact small values") {
    DivisorTable d2 = sieve_dk(2, 100);
    CHECK(d2.dk[12] == 6); // ordered pairs with m*n = 12
    CHECK(d2.dk[12] == static_cast<std::int64_t>(oracles::divisor_count_bruteforce(12, 2)));
    CHECK(d2.dk[1] == 1);

    DivisorTable d3 = sieve_dk(3, 50);
    CHECK(d3.dk[6] == 9); // ordered triples
    CHECK(d3.dk[6] == static_cast<std::int64_t>(oracles::divisor_count_bruteforce(6, 3)));

    for (int k = 1; k <= 6; ++k)
        CHECK(sieve_dk(k, 2).dk[1] == 1);

    DivisorTable d1 = sieve_dk(1, 30);
    for (std::int64_t n = 1; n <= 30; ++n) CHECK(d1.dk[static_cast<std::size_t>(n)] == 1);

    CHECK_THROWS_AS(sieve_dk(0, 100), std::domain_error);
    CHECK_THROWS_AS(sieve_dk(7, 100), std::domain_error);
    CHECK_THROWS_AS(sieve_dk(2, 1), std::domain_error);
}

TEST_CASE("sieve matches brute force over a block") {
    for (int k = 2; k <= 4; ++k) {
        DivisorTable t = sieve_dk(k, 120);
        for (std::int64_t n = 1; n <= 120; ++n)
            CHECK(t.dk[static_cast<std::size_t>(n)] ==
                  static_cast<std::int64_t>(oracles::divisor_count_bruteforce(
                      static_cast<std::uint64_t>(n), k)));
    }
}

TEST_CASE("multiplicativity on random coprime pairs") {
    DivisorTable t = sieve_dk(3, 10000);
    SeededRng rng(42);
    int tested = 0;
    while (tested < 200) {
        auto m = static_cast<std::int64_t>(2 + rng.next_u64() % 90);
        auto n = static_cast<std::int64_t>(2 + rng.next_u64() % 90);
        if (std::gcd(m, n) != 1 || m * n > t.xi) continue;
        CHECK(t.dk[static_cast<std::size_t>(m * n)] ==
              t.dk[static_cast<std::size_t>(m)] * t.dk[static_cast<std::size_t>(n)]);
        ++tested;
    }
    // d_k(p^a) = C(a+k-1, a) at a prime power
    CHECK(t.dk[8] == 10);  // d_3(2^3) = C(5,3)
    CHECK(t.dk[81] == 15); // d_3(3^4) = C(6,4)
}

TEST_CASE("convolution identity: sum d_k(n) = sum_{ab<=x} d_{k-1}(a)") {
    const std::int64_t x = 10000;
    for (int k = 2; k <= 4; ++k) {
        DivisorTable hi = sieve_dk(k, x);
        DivisorTable lo = sieve_dk(k - 1, x);
        std::int64_t lhs = 0;
        for (std::int64_t n = 1; n <= x; ++n) lhs += hi.dk[static_cast<std::size_t>(n)];
        std::int64_t rhs = 0;
        for (std::int64_t a = 1; a <= x; ++a)
            rhs += lo.dk[static_cast<std::size_t>(a)] * (x / a);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dk_tilde: unit cases and divisor-enumeration oracle") {
    DivisorTable t1 = sieve_dk(1, 100);
    compute_dk_tilde(t1);
    CHECK(t1.dk_tilde[10] == doctest::Approx(std::log(10.0)).epsilon(1e-14));
    CHECK(t1.dk_tilde[1] == 0.0);

    DivisorTable t2 = sieve_dk(2, 100);
    compute_dk_tilde(t2);
    CHECK(t2.dk_tilde[1] == 0.0);
    // d~_2(6) = sum_{d|6} log(6/d)
    double want = std::log(6.0) + std::log(3.0) + std::log(2.0) + 0.0;
    CHECK(t2.dk_tilde[6] == doctest::Approx(want).epsilon(1e-14));

    DivisorTable t3 = sieve_dk(3, 64);
    compute_dk_tilde(t3);
    for (std::int64_t n = 1; n <= 64; ++n) {
        // direct divisor enumeration of d_2 * log
        double acc = 0.0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                acc += static_cast<double>(oracles::divisor_count_bruteforce(
                           static_cast<std::uint64_t>(d), 2)) *
                       std::log(static_cast<double>(n) / static_cast<double>(d));
        CHECK(t3.dk_tilde[static_cast<std::size_t>(n)] ==
              doctest::Approx(acc).epsilon(1e-12));
    }
}

TEST_CASE("paper bound d~_k(n) <= d_k(n) log n") {
    for (int k : {1, 2, 3}) {
        DivisorTable t = sieve_dk(k, 20000);
        compute_dk_tilde(t);
        for (std::int64_t n = 2; n <= t.xi; ++n) {
            double bound = static_cast<double>(t.dk[static_cast<std::size_t>(n)]) *
                           std::log(static_cast<double>(n));
            CHECK(t.dk_tilde[static_cast<std::size_t>(n)] <= bound * (1.0 + 1e-13));
        }
    }
}

TEST_CASE("partial sums") {
    DivisorTable t1 = sieve_dk(1, 200000);
    // harmonic sum: H_xi - log xi -> EulerGamma within 1/xi
    for (std::int64_t xi : {1000L, 100000L}) {
        double h = partial_sum_dk2_over_n(t1, xi);
        CHECK(std::abs(h - std::log(static_cast<double>(xi)) - 0.5772156649) <=
              1.0 / static_cast<double>(xi));
    }
    CHECK(partial_sum_dk2_over_n(t1, 1) == 1.0);
    CHECK(partial_sum_dk2(t1, 1) == 1.0);
    CHECK(partial_sum_dk2(t1, 12345) == 12345.0); // k = 1: all terms 1

    // k = 2 against a naive divisor-count loop
    DivisorTable t2 = sieve_dk(2, 10000);
    double naive = 0.0;
    for (std::int64_t n = 1; n <= 10000; ++n) {
        double d = static_cast<double>(oracles::divisor_count_bruteforce(
            static_cast<std::uint64_t>(n), 2));
        naive += d * d / static_cast<double>(n);
    }
    CHECK(partial_sum_dk2_over_n(t2, 10000) == doctest::Approx(naive).epsilon(1e-10));

    // normalized growth ratio between xi and 2 xi stays below 1.5
    DivisorTable big = sieve_dk(2, 200000);
    auto norm = [&](std::int64_t xi) {
        double lx = std::log(static_cast<double>(xi));
        return partial_sum_dk2(big, xi) / (static_cast<double>(xi) * lx * lx * lx);
    };
    double r1 = norm(100000), r2 = norm(200000);
    CHECK(std::max(r1, r2) / std::min(r1, r2) <= 1.5);
}

TEST_CASE("fit_Ck") {
    PartialSumFit f1 = fit_Ck(1, {10, 100, 1000, 10000, 100000, 1000000});
    CHECK(std::abs(f1.fitted_exponent - 1.0) < 0.15);
    CHECK(std::abs(f1.c_at_target - 1.0) < 0.05);
    for (std::size_t i = 1; i < f1.sums.size(); ++i)
        CHECK(f1.sums[i] > f1.sums[i - 1]); // S strictly increasing
    CHECK(f1.fitted_exponent > 0.0);

    CHECK_THROWS_AS(fit_Ck(1, {10, 20}), std::invalid_argument);
    CHECK_THROWS_AS(fit_Ck(1, {100, 100, 1000}), std::invalid_argument);

    // k = 2 on a top-anchored geometric grid: the exponent heads toward
    // k^2 = 4 but converges slowly; the band reflects that
    PartialSumFit f2 = fit_Ck(2, {31250, 62500, 125000, 250000, 500000, 1000000});
    CHECK(f2.fitted_exponent >= 3.0);
    CHECK(f2.fitted_exponent <= 5.0);
}

TEST_CASE("eval_A basics and direct-loop oracle") {
    DirichletPoly p = build_poly(2, 10);
    // t = 0: real positive sum of coefficients
    cplx a0 = eval_A(0.0, p);
    CHECK(a0.imag() == 0.0);
    CHECK(a0.real() == doctest::Approx(p.coef_abs_sum()).epsilon(1e-15));

    DirichletPoly unit = build_poly(2, 1);
    for (double t : {0.0, 5.0, 123.0}) CHECK(eval_A(t, unit) == cplx(1.0, 0.0));

    // 10-term direct evaluation at t = 3.7
    DivisorTable tab = sieve_dk(2, 10);
    cplx direct = 0.0;
    for (int n = 1; n <= 10; ++n)
        direct += static_cast<double>(tab.dk[static_cast<std::size_t>(n)]) /
                  std::sqrt(static_cast<double>(n)) *
                  std::exp(cplx(0.0, -3.7 * std::log(static_cast<double>(n))));
    CHECK(std::abs(eval_A(3.7, p) - direct) < 1e-14);

    // |A(t)| <= sum of coefficients
    for (double t : {1.0, 2.5, 77.0}) CHECK(std::abs(eval_A(t, p)) <= p.coef_abs_sum());
}

TEST_CASE("Montgomery-Vaughan mean value") {
    PrecisionConfig cfg;

    // xi = 1: |A| = 1, integral is exactly T
    DirichletPoly unit = build_poly(1, 1);
    MeanValueReport r0 = mv_meanvalue_check(unit, 100.0, cfg);
    CHECK(r0.integral == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(r0.relative_deviation < 1e-12);

    // exact pairwise oracle: int_0^T |A|^2 = T sum c^2 + cross terms
    DirichletPoly p = build_poly(2, 20);
    double T = 400.0;
    double exact = 0.0;
    for (std::size_t m = 1; m < p.coef.size(); ++m)
        for (std::size_t n = 1; n < p.coef.size(); ++n) {
            if (m == n) {
                exact += p.coef[m] * p.coef[n] * T;
            } else {
                double w = p.logn[m] - p.logn[n];
                exact += p.coef[m] * p.coef[n] * std::sin(T * w) / w;
            }
        }
    MeanValueReport r = mv_meanvalue_check(p, T, cfg);
    CHECK(r.integral == doctest::Approx(exact).epsilon(1e-8));

    // deviation within the MV envelope, and headroom under 2 percent
    CHECK(r.relative_deviation < 0.02);

    CHECK_THROWS_AS(mv_meanvalue_check(p, 100.0, cfg), std::domain_error);
}

TEST_CASE("linear_fit sanity") {
    LinFit f = linear_fit({1.0, 2.0, 3.0, 4.0}, {3.0, 5.0, 7.0, 9.0});
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(1.0));

    // constant series: slope 0
    LinFit c = linear_fit({1.0, 2.0, 3.0}, {4.0, 4.0, 4.0});
    CHECK(c.slope == doctest::Approx(0.0));
}
