#pragma once

#include "spacelike/constants.hpp"

#include <complex>
#include <functional>
#include <variant>

namespace spacelike::waveguide {

/**
 * Hollow rectangular waveguide cross-section (0 <= x <= a, 0 <= y <= b,
 * propagation along +z). Dimensions in metres with a > b > 0.
 */
struct RectWaveguide {
    double a_m;
    double b_m;
};

/// TE mode indices: k_x = n pi / a, k_y = l pi / b; (n, l) != (0, 0).
struct ModeIndex {
    int n;
    int l;
};

/// Longitudinal behaviour of a mode at a given drive frequency.
struct Propagating {
    double k_z;   ///< real longitudinal wavenumber [rad/m], > 0
};
struct Evanescent {
    double kappa; ///< decay constant [1/m], > 0
};
struct AtCutoff {};

using ModeCharacter = std::variant<Propagating, Evanescent, AtCutoff>;

/// Cutoff angular frequency omega_c = c sqrt(k_x^2 + k_y^2) [rad/s].
[[nodiscard]] double cutoff_angular_frequency(const RectWaveguide& wg,
                                              const ModeIndex& m,
                                              const PhysicalConstants& k = kCodata2018);

/**
 * Classifies a drive frequency against a cutoff: above -> Propagating
 * with k_z = sqrt(omega^2 - omega_c^2)/c, below -> Evanescent with
 * kappa = sqrt(omega_c^2 - omega^2)/c, equal within 1e-12 relative ->
 * AtCutoff. Both square roots use the factored difference
 * (omega - omega_c)(omega + omega_c) so the classification stays
 * accurate arbitrarily close to cutoff.
 */
[[nodiscard]] ModeCharacter classify_mode(double omega_rad_s, double omega_c_rad_s);

/**
 * The longitudinal complex factor of a mode field at position z, time
 * t: exp(i(omega t - k_z z)) when propagating, exp(i omega t) exp(-kappa z)
 * when evanescent, exp(i omega t) at cutoff.
 */
[[nodiscard]] std::complex<double> longitudinal_factor(const ModeCharacter& character,
                                                       double omega_rad_s,
                                                       double z_m, double t_s);

/**
 * Transverse electric field component
 *
 *     E_x = A cos(k_x x) sin(k_y y) * longitudinal factor,
 *
 * with the time convention exp(+i omega t), exp(-i k_z z). The point
 * (x, y) must lie inside the cross-section; z and t are unrestricted.
 */
[[nodiscard]] std::complex<double> field_Ex(const RectWaveguide& wg,
                                            const ModeIndex& m,
                                            double omega_rad_s,
                                            double x_m, double y_m, double z_m,
                                            double t_s, double amplitude,
                                            const PhysicalConstants& k = kCodata2018);

/**
 * Splits a mode into its purely real standing-wave factor
 * cos(k_x x) sin(k_y y) (amplitude-free) and the tagged longitudinal
 * character. Multiplying amplitude * standing(x, y) *
 * longitudinal_factor(longitudinal, omega, z, t) reproduces field_Ex.
 * An evanescent mode carries only a decay constant here - there is no
 * real longitudinal wavenumber and hence no standing-wave structure
 * along z.
 */
struct FieldDecomposition {
    std::function<double(double, double)> standing;
    ModeCharacter longitudinal;
};

[[nodiscard]] FieldDecomposition decompose_field(const RectWaveguide& wg,
                                                 const ModeIndex& m,
                                                 double omega_rad_s,
                                                 const PhysicalConstants& k = kCodata2018);

/**
 * Largest spacelike separation with non-negligible propagation
 * probability for a guided photon: c / omega_c [m], the effective
 * Compton wavelength of the mode's effective mass.
 */
[[nodiscard]] double observable_spacelike_bound(double omega_c_rad_s,
                                                const PhysicalConstants& k = kCodata2018);

/**
 * Relative residual of the relativistic dispersion identity
 *
 *     (hbar omega)^2 = (m_eff c^2)^2 + (hbar k_z c)^2,
 *
 * with m_eff = hbar omega_c / c^2, for a propagating mode. Stated only
 * for Propagating character; anything else is a domain error.
 */
[[nodiscard]] double dispersion_identity_check(double omega_rad_s,
                                               const ModeCharacter& character,
                                               double omega_c_rad_s,
                                               const PhysicalConstants& k = kCodata2018);

} // namespace spacelike::waveguide
