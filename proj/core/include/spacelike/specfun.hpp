#pragma once

#include <complex>

namespace spacelike::specfun {

/// Result of a K0 evaluation. `underflowed` is set when the true value
/// is too small to represent as a normalised double, in which case
/// `value` is exactly zero.
struct K0Result {
    double value;
    bool underflowed;
};

/**
 * Modified Bessel function of the second kind, order zero, for x > 0.
 *
 * Uses the ascending series for x <= 2 and Chebyshev expansions of
 * exp(x) sqrt(x) K0(x) on [2, 8] and [8, inf). Relative error stays
 * below 1e-10 across [1e-6, 700]; beyond x ~ 705 the result underflows
 * and is reported as {0, true} rather than silently flushed.
 *
 * Throws std::invalid_argument for x <= 0 or non-finite x.
 */
[[nodiscard]] K0Result bessel_k0(double x);

/**
 * Independent cross-check of bessel_k0 via the integral representation
 *
 *     K0(x) = \int_0^inf exp(-x cosh u) du,
 *
 * truncated at u_max = acosh(1 + 42/x), where the integrand has fallen
 * below exp(-42) ~ 5.7e-19 of its peak, and evaluated by composite
 * 32-point Gauss-Legendre panels (n_nodes / 32 of them; n_nodes must be
 * a multiple of 32, at least 64). This route shares no code or
 * expansion coefficients with bessel_k0 and exists so the two can
 * police one another in tests.
 */
[[nodiscard]] double bessel_k0_integral_oracle(double x, int n_nodes);

/**
 * Hankel function of the second kind, order zero, at negative-imaginary
 * argument: H0^(2)(-i x) for x > 0. Evaluated through the identity
 * H0^(2)(-i x) = (2i/pi) K0(x), so the result is purely imaginary with
 * positive imaginary part. The branch is the one for which
 * (-i/4) H0^(2)(-i x) is real, positive, and decays like e^{-x}/sqrt(x).
 */
[[nodiscard]] std::complex<double> hankel2_0_imag(double x);

/**
 * Direct ascending-series evaluation of H0^(2)(w) = J0(w) - i Y0(w)
 * for complex argument, with the principal branch of the logarithm.
 * Loses accuracy past |w| ~ 20; used only to verify the identity behind
 * hankel2_0_imag by an independent route.
 */
[[nodiscard]] std::complex<double> hankel2_0_series(std::complex<double> w);

} // namespace spacelike::specfun
