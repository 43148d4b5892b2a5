#pragma once

#include "spacelike/constants.hpp"
#include "spacelike/quadrature.hpp"

#include <complex>
#include <vector>

namespace spacelike::propagator {

/**
 * A spacetime separation between two events: time difference dt [s]
 * (sign carries time ordering) and spatial distance dr [m] (>= 0).
 * The causal class is always derived from these two numbers, never
 * stored alongside them.
 */
struct SpacetimeSeparation {
    double dt_s;
    double dr_m;
};

enum class CausalClass { Spacelike, Lightlike, Timelike };

enum class Observability { Nonnegligible, Negligible };

/**
 * Squared invariant interval dr^2 - c^2 dt^2 [m^2], evaluated in the
 * factored form (dr - c|dt|)(dr + c|dt|) to avoid the catastrophic
 * cancellation of the naive difference of squares near the light cone.
 */
[[nodiscard]] double interval_sq(const SpacetimeSeparation& sep,
                                 const PhysicalConstants& k = kCodata2018);

/**
 * Causal classification. Lightlike means |dr^2 - c^2 dt^2| is within
 * `rel_tol` of zero relative to max(dr^2, c^2 dt^2); spacelike and
 * timelike are the strict sides of that band.
 */
[[nodiscard]] CausalClass classify(const SpacetimeSeparation& sep,
                                   const PhysicalConstants& k = kCodata2018,
                                   double rel_tol = 1e-12);

/**
 * Result of a propagation-amplitude evaluation at one separation.
 * `z` is the dimensionless invariant argument sqrt(dr^2 - c^2 dt^2)
 * divided by the particle's reduced Compton wavelength. The amplitude
 * is the dimensionless D(t, r); for spacelike separations it is real
 * up to numerical noise below 1e-12. `probability` is |amplitude|^2
 * exactly as computed. `error_estimate` bounds the relative error of
 * |amplitude| (tight for quadrature, the K0 rounding bound for the
 * closed form). `underflowed` marks amplitudes too small for double
 * precision, reported as exactly zero.
 */
struct PropagatorResult {
    double z;
    std::complex<double> amplitude;
    double probability;
    bool in_weinberg_window;
    bool above_threshold;
    bool underflowed;
    double error_estimate;
};

/**
 * Closed-form spacelike amplitude D = K0(z) / (2 pi), equivalently
 * (-i/4) H0^(2)(-i z). Requires a strictly spacelike separation;
 * lightlike or timelike input raises std::invalid_argument.
 */
[[nodiscard]] PropagatorResult propagator_closed_form(const SpacetimeSeparation& sep,
                                                      const MassiveParticle& p,
                                                      const PhysicalConstants& k = kCodata2018);

/**
 * The same amplitude evaluated by direct quadrature of the momentum
 * integral
 *
 *   D = (1/2pi) \int dp [c / (2 E_p)] exp(-i (E_p dt - p dr) / hbar),
 *   E_p = sqrt(p^2 c^2 + m^2 c^4),
 *
 * in dimensionless momentum s = p/(m c). The two half-axis pieces have
 * strictly monotone phases for spacelike input; each is integrated over
 * half-period panels that are then summed with epsilon acceleration.
 * This route never consults K0 and is the independent counterpart of
 * propagator_closed_form.
 *
 * Throws std::invalid_argument for non-spacelike input and
 * ConvergenceError (carrying the best estimate and its error bound)
 * when cfg.max_evals is exhausted before reaching cfg.tolerance.
 */
[[nodiscard]] PropagatorResult propagator_quadrature(const SpacetimeSeparation& sep,
                                                     const MassiveParticle& p,
                                                     const quadrature::QuadratureConfig& cfg = {},
                                                     const PhysicalConstants& k = kCodata2018);

/**
 * Weinberg's observability window: true iff 0 < dr^2 - c^2 dt^2 <=
 * lambda_bar^2 (left side strict, right side inclusive). Total over all
 * separations; timelike and lightlike input simply yield false.
 */
[[nodiscard]] bool weinberg_window(const SpacetimeSeparation& sep,
                                   const MassiveParticle& p,
                                   const PhysicalConstants& k = kCodata2018);

/**
 * The probability value separating non-negligible from negligible
 * spacelike propagation: |D|^2 at z = 1, i.e. (K0(1) / (2 pi))^2.
 */
[[nodiscard]] double observability_threshold();

/**
 * Classifies a strictly spacelike separation as Nonnegligible iff
 * z <= 1 (equivalently, iff it lies in the Weinberg window). Throws
 * std::invalid_argument for non-spacelike input.
 */
[[nodiscard]] Observability classify_observable(const SpacetimeSeparation& sep,
                                                const MassiveParticle& p,
                                                const PhysicalConstants& k = kCodata2018);

/**
 * Family of separations related by Lorentz boosts: for each rapidity
 * chi, (dt, dr) = (rho sinh(chi) / c, rho cosh(chi)), all sharing the
 * invariant spacelike length rho [m] (> 0). The recovered invariant is
 * exact to ~1e-12 relative for |chi| up to about 4; beyond that the
 * cancellation dr - c|dt| exhausts double precision.
 */
[[nodiscard]] std::vector<SpacetimeSeparation> boost_family(double rho_m,
                                                            const std::vector<double>& rapidities,
                                                            const PhysicalConstants& k = kCodata2018);

} // namespace spacelike::propagator
