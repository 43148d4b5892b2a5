#include "CLI11.hpp"

#include "commands.hpp"
#include "table.hpp"

#include "spacelike/errors.hpp"

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using spacelike::cli::ParticleChoice;
using spacelike::cli::Table;
using spacelike::cli::UsageError;

constexpr int kExitUsage = 2;       // malformed invocation or configuration
constexpr int kExitDomain = 3;      // physically invalid input
constexpr int kExitConvergence = 4; // quadrature failed to reach tolerance

struct OutputOptions {
    std::string path;          // empty -> standard output
    std::string format = "csv";
};

void write_table(const Table& table, const OutputOptions& out) {
    const std::string text = (out.format == "json") ? spacelike::cli::emit_json(table)
                                                    : spacelike::cli::emit_csv(table);
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file: " + out.path);
    }
    file << text;
    if (!file) {
        throw std::runtime_error("failed while writing output file: " + out.path);
    }
}

// Default quadrature tolerance, overridable through SPACELIKE_TOL; an
// explicit --tolerance flag still wins over the environment.
double default_tolerance() {
    const char* env = std::getenv("SPACELIKE_TOL");
    if (env == nullptr) {
        return 1e-9;
    }
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0)) {
        throw UsageError("SPACELIKE_TOL must be a positive number");
    }
    return value;
}

void add_output_options(CLI::App* sub, OutputOptions& out) {
    sub->add_option("--output", out.path,
                    "Write the table to this file instead of standard output");
    sub->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->set_config("--config", "",
                    "Flat key=value configuration file; command-line flags "
                    "take precedence over file values");
}

struct ParticleFlags {
    CLI::Option* electron = nullptr;
    CLI::Option* mass = nullptr;
    CLI::Option* cutoff_rad_s = nullptr;
    CLI::Option* cutoff_ghz = nullptr;
    double mass_kg = 0.0;
    double rad_s = 0.0;
    double ghz_angular = 0.0;

    [[nodiscard]] ParticleChoice resolve() const {
        const int sources = (electron->count() > 0) + (mass->count() > 0) +
                            (cutoff_rad_s->count() > 0) + (cutoff_ghz->count() > 0);
        if (sources > 1) {
            throw UsageError("specify exactly one particle source "
                             "(--electron, --mass-kg, --cutoff-rad-s, "
                             "--cutoff-ghz-angular)");
        }
        if (mass->count() > 0) {
            return {ParticleChoice::Kind::Mass, mass_kg};
        }
        if (cutoff_rad_s->count() > 0) {
            return {ParticleChoice::Kind::Cutoff, rad_s};
        }
        if (cutoff_ghz->count() > 0) {
            return {ParticleChoice::Kind::Cutoff, ghz_angular * 1e9};
        }
        return {ParticleChoice::Kind::Electron, 0.0};
    }
};

void add_particle_options(CLI::App* sub, ParticleFlags& flags) {
    flags.electron = sub->add_flag("--electron", "Use the electron rest mass (default)");
    flags.mass = sub->add_option("--mass-kg", flags.mass_kg, "Particle rest mass [kg]");
    flags.cutoff_rad_s = sub->add_option(
        "--cutoff-rad-s", flags.rad_s,
        "Guided photon: waveguide cutoff angular frequency [rad/s]");
    flags.cutoff_ghz = sub->add_option(
        "--cutoff-ghz-angular", flags.ghz_angular,
        "Guided photon: cutoff angular frequency [1e9 rad/s] (factor 1e9, no 2 pi)");
}

struct SweepFlags {
    std::string spacing;
};

void add_sweep_options(CLI::App* sub, spacelike::cli::SweepSpec& sweep,
                       SweepFlags& flags, const std::string& variables) {
    flags.spacing = sweep.log_spacing ? "log" : "linear";
    sub->add_option("--sweep-variable", sweep.variable,
                    "Swept quantity (" + variables + ")")
        ->capture_default_str();
    sub->add_option("--sweep-start", sweep.start, "First sweep value")
        ->capture_default_str();
    sub->add_option("--sweep-stop", sweep.stop, "Last sweep value")
        ->capture_default_str();
    sub->add_option("--sweep-count", sweep.count, "Number of sweep points (>= 2)")
        ->capture_default_str();
    sub->add_option("--sweep-spacing", flags.spacing, "Point spacing")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
}

void add_quadrature_options(CLI::App* sub, spacelike::quadrature::QuadratureConfig& quad) {
    sub->add_option("--tolerance", quad.tolerance,
                    "Relative tolerance of the momentum-integral quadrature")
        ->capture_default_str();
    sub->add_option("--max-evals", quad.max_evals,
                    "Integrand evaluation budget of the quadrature")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spacelike - spacelike propagation amplitudes, the Weinberg "
                 "observability window, and evanescent-waveguide analogues"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "spacelike 0.1.0");

    try {
        const double tol_default = default_tolerance();

        // --- report ---------------------------------------------------
        auto report_out = OutputOptions{};
        auto report_quad = spacelike::quadrature::QuadratureConfig{tol_default, 2'000'000};
        auto* report = app.add_subcommand(
            "report", "Reference quantities and D(z) by both evaluation routes");
        add_output_options(report, report_out);
        add_quadrature_options(report, report_quad);
        report->callback([&] { write_table(spacelike::cli::run_report(report_quad), report_out); });

        // --- propagator -----------------------------------------------
        auto prop_out = OutputOptions{};
        auto prop_opts = spacelike::cli::PropagatorOptions{};
        prop_opts.quad.tolerance = tol_default;
        auto prop_particle = ParticleFlags{};
        auto prop_sweep = SweepFlags{};
        std::string prop_method = "both";
        auto* prop = app.add_subcommand(
            "propagator", "Sweep the propagation amplitude D over z or dr");
        add_output_options(prop, prop_out);
        add_particle_options(prop, prop_particle);
        add_sweep_options(prop, prop_opts.sweep, prop_sweep, "z, dr");
        add_quadrature_options(prop, prop_opts.quad);
        prop->add_option("--dt-s", prop_opts.dt_s,
                         "Fixed time separation [s] applied to every sweep point")
            ->capture_default_str();
        prop->add_option("--method", prop_method, "Evaluation route(s)")
            ->check(CLI::IsMember({"closed_form", "quadrature", "both"}))
            ->capture_default_str();
        prop->callback([&] {
            prop_opts.particle = prop_particle.resolve();
            prop_opts.sweep.log_spacing = (prop_sweep.spacing == "log");
            prop_opts.closed_form = (prop_method != "quadrature");
            prop_opts.quadrature = (prop_method != "closed_form");
            write_table(spacelike::cli::run_propagator(prop_opts), prop_out);
        });

        // --- window ----------------------------------------------------
        auto window_out = OutputOptions{};
        auto window_opts = spacelike::cli::WindowOptions{};
        auto window_particle = ParticleFlags{};
        auto window_sweep = SweepFlags{};
        auto* window = app.add_subcommand(
            "window", "Causal classification and Weinberg-window membership");
        add_output_options(window, window_out);
        add_particle_options(window, window_particle);
        add_sweep_options(window, window_opts.sweep, window_sweep, "dr, dt");
        window->add_option("--dt-s", window_opts.fixed_dt_s,
                           "Fixed time separation [s] while sweeping dr")
            ->capture_default_str();
        window->add_option("--dr-m", window_opts.fixed_dr_m,
                           "Fixed spatial separation [m] while sweeping dt")
            ->capture_default_str();
        window->callback([&] {
            window_opts.particle = window_particle.resolve();
            window_opts.sweep.log_spacing = (window_sweep.spacing == "log");
            write_table(spacelike::cli::run_window(window_opts), window_out);
        });

        // --- waveguide ---------------------------------------------------
        auto guide_out = OutputOptions{};
        auto guide_opts = spacelike::cli::WaveguideOptions{};
        auto guide_sweep = SweepFlags{};
        double guide_ghz = 0.0;
        auto* guide = app.add_subcommand(
            "waveguide", "Mode classification across a cutoff-straddling sweep");
        add_output_options(guide, guide_out);
        auto* guide_cut = guide->add_option("--cutoff-rad-s", guide_opts.omega_c_rad_s,
                                            "Cutoff angular frequency [rad/s]")
                              ->capture_default_str();
        auto* guide_cut_ghz =
            guide->add_option("--cutoff-ghz-angular", guide_ghz,
                              "Cutoff angular frequency [1e9 rad/s] (factor 1e9, no 2 pi)");
        guide_cut_ghz->excludes(guide_cut);
        add_sweep_options(guide, guide_opts.sweep, guide_sweep, "omega");
        guide->callback([&] {
            if (guide_cut_ghz->count() > 0) {
                guide_opts.omega_c_rad_s = guide_ghz * 1e9;
            }
            guide_opts.sweep.log_spacing = (guide_sweep.spacing == "log");
            write_table(spacelike::cli::run_waveguide(guide_opts), guide_out);
        });

        // --- nearfield ----------------------------------------------------
        auto near_out = OutputOptions{};
        auto near_opts = spacelike::cli::NearfieldOptions{};
        double near_ghz = 0.0;
        double near_omega_ghz = 0.0;
        auto* near = app.add_subcommand(
            "nearfield", "Evanescent near-field samples and wave-equation residuals");
        add_output_options(near, near_out);
        auto* near_cut = near->add_option("--cutoff-rad-s", near_opts.omega_c_rad_s,
                                          "Cutoff angular frequency [rad/s]")
                             ->capture_default_str();
        auto* near_cut_ghz =
            near->add_option("--cutoff-ghz-angular", near_ghz,
                             "Cutoff angular frequency [1e9 rad/s] (factor 1e9, no 2 pi)");
        near_cut_ghz->excludes(near_cut);
        auto* near_a = near->add_option("--a-m", near_opts.a_m,
                                        "Slab width [m] (alternative to a cutoff)");
        near_a->excludes(near_cut);
        near_a->excludes(near_cut_ghz);
        auto* near_omega = near->add_option("--omega-rad-s", near_opts.omega_rad_s,
                                            "Drive angular frequency [rad/s] "
                                            "(default 0.6 of cutoff)");
        auto* near_omega_g =
            near->add_option("--omega-ghz-angular", near_omega_ghz,
                             "Drive angular frequency [1e9 rad/s] (factor 1e9, no 2 pi)");
        near_omega_g->excludes(near_omega);
        near->add_option("--e0", near_opts.e0, "Field amplitude")->capture_default_str();
        near->add_option("--t-s", near_opts.t_s, "Sample time [s]")->capture_default_str();
        near->add_option("--nx", near_opts.nx, "Grid points across the slab (>= 3)")
            ->capture_default_str();
        near->add_option("--nz", near_opts.nz, "Grid points along z (>= 3)")
            ->capture_default_str();
        near->add_option("--h-m", near_opts.h_m,
                         "Finite-difference step [m] (default 3e-4 of the decay length)");
        near->add_option("--zmax-m", near_opts.z_max_m,
                         "Grid depth [m] (default three decay lengths)");
        near->callback([&] {
            if (near_cut_ghz->count() > 0) {
                near_opts.omega_c_rad_s = near_ghz * 1e9;
            }
            if (near_omega_g->count() > 0) {
                near_opts.omega_rad_s = near_omega_ghz * 1e9;
            }
            write_table(spacelike::cli::run_nearfield(near_opts), near_out);
        });

        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return (code == 0) ? 0 : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const spacelike::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << " (best estimate "
                  << e.best_estimate().real() << ", error bound " << e.error_bound()
                  << ")\n";
        return kExitConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
