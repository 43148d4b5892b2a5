#pragma once

#include "spacelike/constants.hpp"

#include <complex>
#include <functional>

namespace spacelike::nearfield {

/**
 * Below-cutoff TE10 slab configuration for the near-field
 * correspondence: slab width a [m], drive frequency omega [rad/s] with
 * 0 <= omega < omega_c, cutoff omega_c = c pi / a [rad/s], and field
 * amplitude E0 (arbitrary linear units). omega = 0 is the static
 * aerial-array limit, where the decay length becomes z0 = a/pi = c/omega_c.
 */
struct NearFieldSpec {
    double a_m;
    double omega_rad_s;
    double omega_c_rad_s;
    double e0;
};

/// Builds a consistent spec from the slab width (omega_c = c pi / a).
[[nodiscard]] NearFieldSpec make_te10_spec(double a_m, double omega_rad_s,
                                           double e0,
                                           const PhysicalConstants& k = kCodata2018);

/// Validates the invariants above; throws std::invalid_argument.
void validate(const NearFieldSpec& spec, const PhysicalConstants& k = kCodata2018);

/**
 * Below-cutoff replacement of the longitudinal wavenumber:
 * kappa = sqrt(omega_c^2 - omega^2)/c [1/m]. Accepts omega = 0 (static
 * limit, kappa = omega_c / c); rejects omega >= omega_c.
 */
[[nodiscard]] double replacement_kappa(double omega_rad_s, double omega_c_rad_s,
                                       const PhysicalConstants& k = kCodata2018);

/**
 * Evanescent near-field E_y(x, z, t) = E0 sin(pi x / a) e^{i omega t}
 * e^{-kappa z} for 0 <= x <= a, z >= 0. The magnitude
 * |E_y| = |E0| |sin(pi x / a)| e^{-kappa z} is independent of t.
 */
[[nodiscard]] std::complex<double> nearfield_Ey(const NearFieldSpec& spec,
                                                double x_m, double z_m, double t_s,
                                                const PhysicalConstants& k = kCodata2018);

/**
 * A complex scalar field of (x, z, t) evaluated in extended precision,
 * as consumed by wave_equation_residual_of.
 */
using FieldFn = std::function<std::complex<long double>(long double, long double,
                                                        long double)>;

/**
 * Finite-difference check of the 2-D wave operator
 *
 *     (d^2/dx^2 + d^2/dz^2 - (1/c^2) d^2/dt^2) E = 0
 *
 * for a time-harmonic field: the time term is applied analytically as
 * +(omega/c)^2 E and the spatial second derivatives by central
 * differences with step h. Returns |operator E| / |E| at the point
 * [1/m^2]. The stencil is evaluated in extended (long double)
 * precision so that the O(h^2) truncation behaviour remains visible
 * down to h ~ 1e-4 of the decay length instead of drowning in double
 * rounding. The point must be at least 2h inside the domain and the
 * field must not vanish there.
 */
[[nodiscard]] double wave_equation_residual_of(const FieldFn& field,
                                               double omega_rad_s,
                                               double x_m, double z_m, double t_s,
                                               double h_m,
                                               double x_min, double x_max,
                                               const PhysicalConstants& k = kCodata2018);

/**
 * wave_equation_residual_of applied to the analytic near-field of
 * `spec`. Converges to zero as O(h^2); this is the primary
 * verification that the evanescent field solves the wave equation.
 */
[[nodiscard]] double wave_equation_residual(const NearFieldSpec& spec,
                                            double x_m, double z_m, double t_s,
                                            double h_m,
                                            const PhysicalConstants& k = kCodata2018);

} // namespace spacelike::nearfield
