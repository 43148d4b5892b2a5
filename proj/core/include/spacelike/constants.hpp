#pragma once

#include <stdexcept>

namespace spacelike {

/**
 * Fundamental constants in SI units. Values follow the CODATA 2018
 * adjustment; the speed of light is exact by definition.
 */
struct PhysicalConstants {
    double c;     ///< speed of light [m/s]
    double hbar;  ///< reduced Planck constant [J s]
    double m_e;   ///< electron rest mass [kg]
};

inline constexpr PhysicalConstants kCodata2018{
    2.99792458e8,       // c, exact
    1.054571817e-34,    // hbar
    9.1093837015e-31,   // m_e
};

/**
 * Reduced Compton wavelength hbar/(m c) of a particle of mass m [kg].
 * This is the characteristic length below which spacelike leakage of
 * the propagation amplitude remains appreciable.
 */
[[nodiscard]] inline double compton_wavelength(double mass_kg,
                                               const PhysicalConstants& k = kCodata2018) {
    if (!(mass_kg > 0.0)) {
        throw std::invalid_argument("compton_wavelength: mass must be positive");
    }
    return k.hbar / (mass_kg * k.c);
}

/**
 * Effective mass hbar*omega_c/c^2 [kg] assigned to a guided photon in a
 * waveguide with angular cutoff frequency omega_c [rad/s]. Below cutoff
 * the guided mode behaves exactly like a massive particle of this mass.
 */
[[nodiscard]] inline double effective_photon_mass(double omega_c_rad_s,
                                                  const PhysicalConstants& k = kCodata2018) {
    if (!(omega_c_rad_s > 0.0)) {
        throw std::invalid_argument("effective_photon_mass: cutoff frequency must be positive");
    }
    return k.hbar * omega_c_rad_s / (k.c * k.c);
}

/**
 * A particle participating in spacelike propagation, described by its
 * rest mass and the derived reduced Compton wavelength. Guided photons
 * enter through their effective mass, so massive particles and
 * below-cutoff waveguide modes share one representation.
 */
struct MassiveParticle {
    double mass_kg;        ///< rest (or effective) mass [kg]
    double lambda_bar_m;   ///< reduced Compton wavelength hbar/(m c) [m]

    [[nodiscard]] static MassiveParticle from_rest_mass(double mass_kg,
                                                        const PhysicalConstants& k = kCodata2018) {
        return MassiveParticle{mass_kg, compton_wavelength(mass_kg, k)};
    }

    /// Builds the guided-photon analogue from a cutoff frequency [rad/s].
    [[nodiscard]] static MassiveParticle from_cutoff(double omega_c_rad_s,
                                                     const PhysicalConstants& k = kCodata2018) {
        const double m = effective_photon_mass(omega_c_rad_s, k);
        return MassiveParticle{m, compton_wavelength(m, k)};
    }
};

} // namespace spacelike
