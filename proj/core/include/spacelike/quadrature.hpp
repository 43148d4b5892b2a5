#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace spacelike::quadrature {

/// Controls for the adaptive oscillatory integrator.
struct QuadratureConfig {
    double tolerance = 1e-9;        ///< requested relative accuracy
    long max_evals = 2'000'000;     ///< integrand-evaluation budget
};

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/**
 * Generates the n-point Gauss-Legendre rule by Newton iteration on the
 * Legendre polynomial P_n. Nodes are returned in ascending order and
 * are accurate to machine precision for n up to a few hundred.
 */
[[nodiscard]] GaussLegendreRule gauss_legendre(int n);

/// Outcome of one adaptive integration: value, error bound, eval count.
struct IntegralEstimate {
    std::complex<double> value;
    double error_bound;
    long evals;
};

/**
 * Adaptive Gauss-Kronrod (G7/K15) integration of a complex-valued
 * integrand over [a, b]. Subdivides until the summed error estimate
 * drops below max(abs_tol, rel_tol * |result|) or the interval stack
 * is exhausted; `evals` counts integrand calls (15 per panel).
 */
[[nodiscard]] IntegralEstimate integrate_gk15(
    const std::function<std::complex<double>(double)>& f,
    double a, double b,
    double abs_tol, double rel_tol,
    long max_evals);

/**
 * Wynn epsilon acceleration of a sequence of partial sums. Returns the
 * best accelerated value together with a heuristic error estimate (the
 * spread of the last even-column entries). Sequences of fewer than
 * three terms are returned as-is with an infinite error estimate.
 */
struct AcceleratedSum {
    std::complex<double> value;
    double error_estimate;
};

[[nodiscard]] AcceleratedSum wynn_epsilon(const std::vector<std::complex<double>>& partial_sums);

} // namespace spacelike::quadrature
