#include "commands.hpp"

#include "spacelike/nearfield.hpp"
#include "spacelike/propagator.hpp"
#include "spacelike/waveguide.hpp"

#include <cmath>
#include <cstdio>
#include <variant>

namespace spacelike::cli {

namespace {

constexpr double kReferenceElectronComptonMm = 3.87e-10;
constexpr double kReferenceGuidedBoundMm = 31.6;
constexpr double kReferenceBoundRatio = 8.2e10;
constexpr double kReferenceCutoffRadS = 9.49e9;

double rel_deviation(double computed, double reference) {
    return std::abs(computed - reference) / std::abs(reference);
}

std::string format_z_label(double z) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "D(z=%g)", z);
    return buffer;
}

} // namespace

MassiveParticle resolve_particle(const ParticleChoice& choice) {
    switch (choice.kind) {
        case ParticleChoice::Kind::Electron:
            return MassiveParticle::from_rest_mass(kCodata2018.m_e);
        case ParticleChoice::Kind::Mass:
            if (!(choice.value > 0.0)) {
                throw UsageError("particle mass must be positive");
            }
            return MassiveParticle::from_rest_mass(choice.value);
        case ParticleChoice::Kind::Cutoff:
            if (!(choice.value > 0.0)) {
                throw UsageError("waveguide cutoff must be positive");
            }
            return MassiveParticle::from_cutoff(choice.value);
    }
    throw UsageError("unrecognised particle source");
}

std::vector<double> sweep_points(const SweepSpec& sweep) {
    if (sweep.count < 2) {
        throw UsageError("sweep count must be at least 2");
    }
    if (!std::isfinite(sweep.start) || !std::isfinite(sweep.stop) ||
        !(sweep.start < sweep.stop)) {
        throw UsageError("sweep requires start < stop");
    }
    if (sweep.log_spacing && !(sweep.start > 0.0)) {
        throw UsageError("log-spaced sweep requires a positive start");
    }
    std::vector<double> points(static_cast<std::size_t>(sweep.count));
    const double n = sweep.count - 1;
    // Lerp form: the fraction i/n is exact for the common even splits, so
    // midpoints of simple ranges land on exact doubles.
    if (sweep.log_spacing) {
        const double log_start = std::log(sweep.start);
        const double log_span = std::log(sweep.stop) - log_start;
        for (int i = 0; i < sweep.count; ++i) {
            points[static_cast<std::size_t>(i)] =
                std::exp(log_start + log_span * (i / n));
        }
    } else {
        const double span = sweep.stop - sweep.start;
        for (int i = 0; i < sweep.count; ++i) {
            points[static_cast<std::size_t>(i)] = sweep.start + span * (i / n);
        }
    }
    points.front() = sweep.start;
    points.back() = sweep.stop;
    return points;
}

Table run_report(const quadrature::QuadratureConfig& quad) {
    Table table;
    table.columns = {"quantity", "unit",       "reference_value",
                     "computed", "quadrature", "rel_deviation"};

    const auto electron = MassiveParticle::from_rest_mass(kCodata2018.m_e);
    const double electron_mm = electron.lambda_bar_m * 1e3;
    table.rows.push_back(Row{std::string("electron_compton_wavelength"),
                             std::string("mm"), kReferenceElectronComptonMm,
                             electron_mm, std::monostate{},
                             rel_deviation(electron_mm, kReferenceElectronComptonMm)});

    const double bound_mm =
        waveguide::observable_spacelike_bound(kReferenceCutoffRadS) * 1e3;
    table.rows.push_back(Row{std::string("guided_photon_bound"), std::string("mm"),
                             kReferenceGuidedBoundMm, bound_mm, std::monostate{},
                             rel_deviation(bound_mm, kReferenceGuidedBoundMm)});

    const double ratio = bound_mm / electron_mm;
    table.rows.push_back(Row{std::string("spacelike_bound_ratio"),
                             std::string("dimensionless"), kReferenceBoundRatio,
                             ratio, std::monostate{},
                             rel_deviation(ratio, kReferenceBoundRatio)});

    table.rows.push_back(Row{std::string("observability_threshold"),
                             std::string("dimensionless"), std::monostate{},
                             propagator::observability_threshold(),
                             std::monostate{}, std::monostate{}});

    for (const double z : {0.5, 1.0, 2.0, 5.0}) {
        const propagator::SpacetimeSeparation sep{0.0, z * electron.lambda_bar_m};
        const auto closed = propagator::propagator_closed_form(sep, electron);
        const auto quadr = propagator::propagator_quadrature(sep, electron, quad);
        const double deviation = std::abs(quadr.amplitude - closed.amplitude) /
                                 std::abs(closed.amplitude);
        table.rows.push_back(Row{format_z_label(z), std::string("dimensionless"),
                                 std::monostate{}, closed.amplitude.real(),
                                 quadr.amplitude.real(), deviation});
    }
    return table;
}

Table run_propagator(const PropagatorOptions& opts) {
    if (opts.sweep.variable != "z" && opts.sweep.variable != "dr") {
        throw UsageError("propagator: unknown sweep variable '" +
                         opts.sweep.variable + "' (valid variables: z, dr)");
    }
    if (!opts.closed_form && !opts.quadrature) {
        throw UsageError("propagator: at least one method must be enabled");
    }
    if (opts.sweep.variable == "z" && !(opts.sweep.start > 0.0)) {
        throw UsageError("propagator: z sweep requires a positive start");
    }
    const auto particle = resolve_particle(opts.particle);
    const auto points = sweep_points(opts.sweep);

    Table table;
    table.columns = {"z",           "amplitude_re", "amplitude_im",
                     "probability", "method",       "in_window"};
    const double c_dt = kCodata2018.c * opts.dt_s;
    for (const double point : points) {
        propagator::SpacetimeSeparation sep{opts.dt_s, 0.0};
        if (opts.sweep.variable == "z") {
            // dr chosen so the invariant argument equals the requested z
            // at the fixed dt.
            sep.dr_m = std::hypot(point * particle.lambda_bar_m, c_dt);
        } else {
            sep.dr_m = point;
        }
        const auto emit = [&](const propagator::PropagatorResult& r,
                              const char* method) {
            table.rows.push_back(Row{r.z, r.amplitude.real(), r.amplitude.imag(),
                                     r.probability, std::string(method),
                                     r.in_weinberg_window});
        };
        if (opts.closed_form) {
            emit(propagator::propagator_closed_form(sep, particle), "closed_form");
        }
        if (opts.quadrature) {
            emit(propagator::propagator_quadrature(sep, particle, opts.quad),
                 "quadrature");
        }
    }
    return table;
}

Table run_window(const WindowOptions& opts) {
    if (opts.sweep.variable != "dr" && opts.sweep.variable != "dt") {
        throw UsageError("window: unknown sweep variable '" + opts.sweep.variable +
                         "' (valid variables: dr, dt)");
    }
    const auto particle = resolve_particle(opts.particle);

    SweepSpec sweep = opts.sweep;
    if (sweep.start == sweep.stop) { // unset range: pick a window-straddling default
        if (sweep.variable == "dr") {
            sweep.start = 0.0;
            sweep.stop = 2.0 * particle.lambda_bar_m;
        } else {
            sweep.stop = 2.0 * particle.lambda_bar_m / kCodata2018.c;
            sweep.start = -sweep.stop;
        }
    }
    const auto points = sweep_points(sweep);

    Table table;
    table.columns = {"dt", "dr", "causal_class", "z", "in_window"};
    for (const double point : points) {
        propagator::SpacetimeSeparation sep{opts.fixed_dt_s, opts.fixed_dr_m};
        (sweep.variable == "dr" ? sep.dr_m : sep.dt_s) = point;
        const auto causal = propagator::classify(sep);
        const char* label = causal == propagator::CausalClass::Spacelike ? "spacelike"
                            : causal == propagator::CausalClass::Lightlike
                                ? "lightlike"
                                : "timelike";
        Cell z_cell = std::monostate{};
        if (causal == propagator::CausalClass::Spacelike) {
            z_cell = std::sqrt(propagator::interval_sq(sep)) / particle.lambda_bar_m;
        }
        table.rows.push_back(Row{sep.dt_s, sep.dr_m, std::string(label), z_cell,
                                 propagator::weinberg_window(sep, particle)});
    }
    return table;
}

Table run_waveguide(const WaveguideOptions& opts) {
    if (!std::isfinite(opts.omega_c_rad_s) || !(opts.omega_c_rad_s > 0.0)) {
        throw UsageError("waveguide: cutoff frequency must be positive");
    }
    if (opts.sweep.variable != "omega") {
        throw UsageError("waveguide: unknown sweep variable '" +
                         opts.sweep.variable + "' (valid variables: omega)");
    }
    SweepSpec sweep = opts.sweep;
    if (sweep.start == sweep.stop) {
        sweep.start = 0.5 * opts.omega_c_rad_s;
        sweep.stop = 1.5 * opts.omega_c_rad_s;
    }
    std::vector<double> points;
    for (const double omega : sweep_points(sweep)) {
        if (omega > 0.0) {
            points.push_back(omega);
        }
    }
    if (points.empty()) {
        throw UsageError("waveguide: frequency sweep contains no positive point");
    }
    const double bound_mm =
        waveguide::observable_spacelike_bound(opts.omega_c_rad_s) * 1e3;

    Table table;
    table.columns = {"omega", "character", "k_z_or_kappa", "bound_mm"};
    for (const double omega : points) {
        const auto character = waveguide::classify_mode(omega, opts.omega_c_rad_s);
        std::string label;
        double wavenumber = 0.0;
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, waveguide::Propagating>) {
                    label = "propagating";
                    wavenumber = c.k_z;
                } else if constexpr (std::is_same_v<T, waveguide::Evanescent>) {
                    label = "evanescent";
                    wavenumber = c.kappa;
                } else {
                    label = "at_cutoff";
                    wavenumber = 0.0;
                }
            },
            character);
        table.rows.push_back(Row{omega, label, wavenumber, bound_mm});
    }
    return table;
}

Table run_nearfield(const NearfieldOptions& opts) {
    if (opts.nx < 3 || opts.nz < 3) {
        throw UsageError("nearfield: grid resolution must be at least 3 in each axis");
    }
    double a = opts.a_m;
    double omega_c = opts.omega_c_rad_s;
    if (a > 0.0) {
        omega_c = kCodata2018.c * 3.14159265358979323846 / a;
    } else {
        if (!std::isfinite(omega_c) || !(omega_c > 0.0)) {
            throw UsageError("nearfield: cutoff frequency must be positive");
        }
        a = kCodata2018.c * 3.14159265358979323846 / omega_c;
    }
    const double omega = (opts.omega_rad_s < 0.0) ? 0.6 * omega_c : opts.omega_rad_s;
    const auto spec = nearfield::make_te10_spec(a, omega, opts.e0);

    const double kappa = nearfield::replacement_kappa(omega, spec.omega_c_rad_s);
    const double h = (opts.h_m > 0.0) ? opts.h_m : 3e-4 / kappa;
    const double z_max = (opts.z_max_m > 0.0) ? opts.z_max_m : 3.0 / kappa;

    Table table;
    table.columns = {"x", "z", "field_re", "field_im", "magnitude", "residual"};
    for (int ix = 0; ix < opts.nx; ++ix) {
        const double x = (ix == opts.nx - 1) ? a : ix * a / (opts.nx - 1);
        for (int iz = 0; iz < opts.nz; ++iz) {
            const double z = (iz == opts.nz - 1) ? z_max : iz * z_max / (opts.nz - 1);
            const auto field = nearfield::nearfield_Ey(spec, x, z, opts.t_s);
            Cell residual = std::monostate{};
            const bool stencil_fits =
                x - 2.0 * h >= 0.0 && x + 2.0 * h <= a && z - 2.0 * h >= 0.0;
            if (stencil_fits && std::abs(field) > 0.0) {
                residual = nearfield::wave_equation_residual(spec, x, z, opts.t_s, h);
            }
            table.rows.push_back(Row{x, z, field.real(), field.imag(),
                                     std::abs(field), residual});
        }
    }
    return table;
}

} // namespace spacelike::cli
