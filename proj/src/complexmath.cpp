#include "critline/complexmath.hpp"

#include <cmath>

namespace critline {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos approximant, g = 6.024680040776729583740234375, N = 13
// (Godfrey-style coefficients in rational form, exp(g)-scaled numerator;
// same set Boost.Math uses for double precision).  Denominator is
// z(z+1)...(z+11).
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr double kLanczosNum[13] = {
    56906521.91347156388090791033559122686859,
    103794043.1163445451906271053616070238554,
    86363131.28813859145546927288977868422342,
    43338889.32467613834773723740590533316085,
    14605578.08768506808414169982791359218571,
    3481712.15498064590882071018964774556468,
    601859.6171681098786670226533699352302507,
    75999.29304014542649875303443598909137092,
    6955.999602515376140356310115515198987526,
    449.9445569063168119446858607650988409623,
    19.51992788247617482847860966235652136208,
    0.5098416655656676188125178644804694509993,
    0.006061842346248906525783753964555936883222,
};
constexpr double kLanczosDen[13] = {
    0.0,
    39916800.0,
    120543840.0,
    150917976.0,
    105258076.0,
    45995730.0,
    13339535.0,
    2637558.0,
    357423.0,
    32670.0,
    1925.0,
    66.0,
    1.0,
};

// P(z)/Q(z), coefficients in ascending order.  |z| stays modest here (the
// recurrence below never pushes Re z far), so plain Horner is stable.
cplx lanczos_sum_expg_scaled(cplx z) {
    cplx num = 0.0, den = 0.0;
    for (int k = 12; k >= 0; --k) {
        num = num * z + kLanczosNum[k];
        den = den * z + kLanczosDen[k];
    }
    return num / den;
}

// log Gamma on Re z >= 0.5 (analytic branch).  The exp(g)-scaled rational
// sum absorbs the sqrt(2 pi) and e^{g} factors, hence the (log(zgh) - 1)
// form.
cplx log_gamma_right(cplx z) {
    cplx zgh = z + (kLanczosG - 0.5);
    return (z - 0.5) * (std::log(zgh) - 1.0) + std::log(lanczos_sum_expg_scaled(z));
}



// 1/sin^2(pi z) without overflow; underflows to 0 for large |Im z|.
cplx inv_sin2_pi(cplx z) {
    double y = z.imag();
    if (std::abs(y) > 8.0) {
        cplx r = (y > 0.0) ? std::exp(cplx(0.0, 2.0 * kPi) * z)
                           : std::exp(cplx(0.0, -2.0 * kPi) * z);
        cplx d = 1.0 - r;
        return -4.0 * r / (d * d);
    }
    cplx s = std::sin(kPi * z);
    return 1.0 / (s * s);
}

// cos(pi z)/sin^3(pi z) without overflow.
cplx cos_over_sin3_pi(cplx z) {
    double y = z.imag();
    if (std::abs(y) > 8.0) {
        // cos/sin^3 = cot * (1/sin^2)
        return cot_pi(z) * inv_sin2_pi(z);
    }
    cplx w = kPi * z;
    cplx s = std::sin(w);
    return std::cos(w) / (s * s * s);
}

// Asymptotic tail coefficients: B_{2n}/(2n) for n = 1..10.
constexpr double kBernOver2n[10] = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    7.0 / 84.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
    -174611.0 / 6600.0,
};

// B_{2n} for n = 1..10.
constexpr double kBern2n[10] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
};

} // namespace

cplx log_gamma(cplx z) {
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
    return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cplx digamma(cplx z) {
    if (z.real() < 0.5) {
        // psi(z) = psi(1 - z) - pi cot(pi z)
        return digamma(1.0 - z) - kPi * cot_pi(z);
    }
    cplx shift = 0.0;
    while (std::norm(z) < 144.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ log z - 1/(2z) - sum B_{2n}/(2n z^{2n})
    cplx inv2 = 1.0 / (z * z);
    cplx term = inv2;
    cplx tail = 0.0;
    for (double c : kBernOver2n) {
        tail += c * term;
        term *= inv2;
    }
    return shift + std::log(z) - 0.5 / z - tail;
}

cplx trigamma(cplx z) {
    if (z.real() < 0.5) {
        // psi'(z) + psi'(1 - z) = pi^2 / sin^2(pi z)
        return kPi * kPi * inv_sin2_pi(z) - trigamma(1.0 - z);
    }
    cplx shift = 0.0;
    while (std::norm(z) < 144.0) {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    // psi'(z) ~ 1/z + 1/(2z^2) + sum B_{2n} z^{-2n-1}
    cplx inv = 1.0 / z;
    cplx inv2 = inv * inv;
    cplx term = inv * inv2;
    cplx tail = 0.0;
    for (double c : kBern2n) {
        tail += c * term;
        term *= inv2;
    }
    return shift + inv + 0.5 * inv2 + tail;
}

cplx tetragamma(cplx z) {
    if (z.real() < 0.5) {
        // differentiate the trigamma reflection once more
        return tetragamma(1.0 - z) -
               2.0 * kPi * kPi * kPi * cos_over_sin3_pi(z);
    }
    cplx shift = 0.0;
    while (std::norm(z) < 144.0) {
        shift -= 2.0 / (z * z * z);
        z += 1.0;
    }
    // psi''(z) ~ -1/z^2 - 1/z^3 - sum B_{2n}(2n+1) z^{-2n-2}
    cplx inv = 1.0 / z;
    cplx inv2 = inv * inv;
    cplx term = inv2 * inv2;
    cplx tail = 0.0;
    for (int n = 0; n < 10; ++n) {
        tail += kBern2n[n] * (2.0 * n + 3.0) * term;
        term *= inv2;
    }
    return shift - inv2 - inv * inv2 - tail;
}

cplx cot_pi(cplx z) {
    double y = z.imag();
    if (y > 8.0) {
        cplx r = std::exp(cplx(0.0, 2.0 * kPi) * z); // |r| = e^{-2 pi y} small
        return cplx(0.0, 1.0) * (r + 1.0) / (r - 1.0);
    }
    if (y < -8.0) {
        cplx r = std::exp(cplx(0.0, -2.0 * kPi) * z);
        return cplx(0.0, -1.0) * (r + 1.0) / (r - 1.0);
    }
    cplx w = kPi * z;
    return std::cos(w) / std::sin(w);
}

cplx log_sin_pi(cplx z) {
    double y = z.imag();
    if (y > 8.0) {
        // sin(pi z) = -e^{-i pi z}(1 - e^{2 i pi z})/(2i)
        cplx w = cplx(0.0, 2.0 * kPi) * z;
        return cplx(0.0, -kPi) * z + std::log(1.0 - std::exp(w)) -
               std::log(cplx(0.0, -2.0));
    }
    if (y < -8.0) {
        cplx w = cplx(0.0, -2.0 * kPi) * z;
        return cplx(0.0, kPi) * z + std::log(1.0 - std::exp(w)) -
               std::log(cplx(0.0, 2.0));
    }
    return std::log(std::sin(kPi * z));
}

} // namespace critline
