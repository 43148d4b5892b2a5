#pragma once

#include "table.hpp"

#include "spacelike/constants.hpp"
#include "spacelike/quadrature.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace spacelike::cli {

/// Bad command-line input (unknown sweep variable, malformed sweep,
/// conflicting particle sources, ...). Mapped to the usage exit code,
/// distinct from domain errors raised by the physics layer.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exactly one particle source: the electron, an explicit rest mass, or
/// a guided photon identified by its waveguide cutoff.
struct ParticleChoice {
    enum class Kind { Electron, Mass, Cutoff };
    Kind kind = Kind::Electron;
    double value = 0.0; ///< kg for Mass, rad/s for Cutoff
};

[[nodiscard]] MassiveParticle resolve_particle(const ParticleChoice& choice);

struct SweepSpec {
    std::string variable;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    bool log_spacing = false;
};

/// Evaluation grid of a sweep; enforces count >= 2, start < stop, and
/// positive endpoints for log spacing. The last point is exactly `stop`.
[[nodiscard]] std::vector<double> sweep_points(const SweepSpec& sweep);

struct PropagatorOptions {
    ParticleChoice particle;
    SweepSpec sweep{"z", 0.1, 10.0, 50, true};
    double dt_s = 0.0;                 ///< fixed dt while sweeping z or dr
    bool closed_form = true;
    bool quadrature = true;
    quadrature::QuadratureConfig quad;
};

struct WindowOptions {
    ParticleChoice particle;
    SweepSpec sweep{"dr", 0.0, 0.0, 21, false}; ///< empty range -> [0, 2 lambda_bar]
    double fixed_dt_s = 0.0;           ///< used when sweeping dr
    double fixed_dr_m = 0.0;           ///< used when sweeping dt
};

struct WaveguideOptions {
    double omega_c_rad_s = 9.49e9;
    SweepSpec sweep{"omega", 0.0, 0.0, 11, false}; ///< empty range -> [0.5, 1.5] omega_c
};

struct NearfieldOptions {
    double omega_c_rad_s = 9.49e9;
    double a_m = 0.0;                  ///< 0 -> derived as c pi / omega_c
    double omega_rad_s = -1.0;         ///< < 0 -> defaults to 0.6 omega_c
    double e0 = 1.0;
    double t_s = 0.0;
    int nx = 9;
    int nz = 9;
    double h_m = 0.0;                  ///< 0 -> 3e-4 of the decay length
    double z_max_m = 0.0;              ///< 0 -> three decay lengths
};

/**
 * The `report` table: reference values (electron Compton wavelength,
 * guided-photon bound at omega_c = 9.49e9 rad/s, their ratio, the
 * observability threshold) next to the computed ones, plus D(z) at
 * z in {0.5, 1, 2, 5} by both evaluation routes. `rel_deviation` is
 * the deviation of `computed` from `reference_value` where a reference
 * exists, and between the two routes for the D rows.
 */
[[nodiscard]] Table run_report(const quadrature::QuadratureConfig& quad);

/// Columns exactly: z,amplitude_re,amplitude_im,probability,method,in_window.
[[nodiscard]] Table run_propagator(const PropagatorOptions& opts);

/// Columns: dt,dr,causal_class,z,in_window (z empty unless spacelike).
[[nodiscard]] Table run_window(const WindowOptions& opts);

/// Columns: omega,character,k_z_or_kappa,bound_mm.
[[nodiscard]] Table run_waveguide(const WaveguideOptions& opts);

/// Columns: x,z,field_re,field_im,magnitude,residual (residual empty
/// where the five-point stencil does not fit inside the domain).
[[nodiscard]] Table run_nearfield(const NearfieldOptions& opts);

} // namespace spacelike::cli
