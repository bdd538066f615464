// Complex log-gamma and polygamma functions on the right half-plane.
//
// log_gamma returns the analytic branch (real on the positive real axis,
// continuous for Re z > 0); this is what the continuous phase computations
// rely on, so it must never wrap modulo 2*pi there.
#ifndef CRITLINE_COMPLEXMATH_HPP
#define CRITLINE_COMPLEXMATH_HPP

#include <complex>

namespace critline {

using cplx = std::complex<double>;

// Analytic branch of log Gamma(z) for Re z > 0; for Re z <= 0 the value is
// correct only up to an integer multiple of 2*pi*i (reflection formula),
// which is harmless when the result is exponentiated.
cplx log_gamma(cplx z);

// psi(z), psi'(z), psi''(z).  Valid away from the poles 0, -1, -2, ...
cplx digamma(cplx z);
cplx trigamma(cplx z);
cplx tetragamma(cplx z);

// cot(pi z), safe against exp overflow for large |Im z|.
cplx cot_pi(cplx z);

// log(sin(pi z)) without overflow; branch as delivered by the principal
// logs, so use only where a 2*pi*i ambiguity is harmless.
cplx log_sin_pi(cplx z);

} // namespace critline

#endif
