// Acceptance harness for the spacelike toolkit. Each shipping criterion
// is evaluated once and reported as exactly one [PASS]/[FAIL] line with
// the measured numbers and the bound they are held to. The process exit
// code is the number of failed criteria.
//
// Criteria that exercise the command-line tool need the path to the
// built binary:   spacelike_acceptance --cli <path-to-spacelike>

#include "commands.hpp"
#include "table.hpp"

#include "spacelike/constants.hpp"
#include "spacelike/nearfield.hpp"
#include "spacelike/propagator.hpp"
#include "spacelike/specfun.hpp"
#include "spacelike/waveguide.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

using namespace spacelike;

constexpr double kPi = 3.14159265358979323846;

struct Context {
    std::string cli;
    fs::path work;
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    return buffer;
}

double rel_dev(double a, double b) {
    return std::abs(a - b) / std::abs(b);
}

struct CliRun {
    int exit_code;
    double seconds;
    fs::path output;
};

CliRun run_cli(const Context& ctx, const std::string& args, const std::string& tag,
               const std::string& env_prefix = "") {
    const fs::path out = ctx.work / (tag + ".out");
    const fs::path err = ctx.work / (tag + ".err");
    const std::string command = env_prefix + "\"" + ctx.cli + "\" " + args +
                                " --output \"" + out.string() + "\" 2>\"" +
                                err.string() + "\"";
    const auto t0 = std::chrono::steady_clock::now();
    const int status = std::system(command.c_str());
    const auto t1 = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(t1 - t0).count();
    int exit_code = -1;
    if (status != -1 && WIFEXITED(status)) {
        exit_code = WEXITSTATUS(status);
    }
    return {exit_code, seconds, out};
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

double report_value(const cli::Table& table, const std::string& quantity) {
    for (const cli::Row& row : table.rows) {
        if (std::get<std::string>(row[0]) == quantity) {
            return std::get<double>(row[3]);
        }
    }
    throw std::runtime_error("report row missing: " + quantity);
}

// --- criterion 1: electron Compton wavelength via the report command ----

Outcome electron_wavelength_via_cli(const Context& ctx) {
    const CliRun run = run_cli(ctx, "report", "c1_report");
    if (run.exit_code != 0) {
        return {false, fmt("report exited with code %d", run.exit_code)};
    }
    const auto table = cli::parse_csv(read_file(run.output));
    const double computed = report_value(table, "electron_compton_wavelength");
    const double dev = rel_dev(computed, 3.87e-10);
    const bool pass = dev <= 5e-3 && run.seconds < 1.0;
    return {pass, fmt("computed %.6e mm vs 3.87e-10 mm, deviation %.2e (<= 5e-3), "
                      "%.3f s (< 1 s)",
                      computed, dev, run.seconds)};
}

// --- criterion 2: guided-photon bound via the report command ------------

Outcome guided_bound_via_cli(const Context& ctx) {
    const CliRun run = run_cli(ctx, "report", "c2_report");
    if (run.exit_code != 0) {
        return {false, fmt("report exited with code %d", run.exit_code)};
    }
    const auto table = cli::parse_csv(read_file(run.output));
    const double computed = report_value(table, "guided_photon_bound");
    const double dev = rel_dev(computed, 31.6);
    const bool pass = dev <= 5e-3 && run.seconds < 1.0;
    return {pass, fmt("computed %.4f mm vs 31.6 mm at cutoff 9.49e9 rad/s, "
                      "deviation %.2e (<= 5e-3), %.3f s (< 1 s)",
                      computed, dev, run.seconds)};
}

// --- criterion 3: quadrature equals closed form, at rest and boosted ----

Outcome route_equivalence(const Context&) {
    const auto electron = MassiveParticle::from_rest_mass(kCodata2018.m_e);
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const double z : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        for (const double chi : {0.0, 0.7, -1.3}) {
            const double rho = z * electron.lambda_bar_m;
            const propagator::SpacetimeSeparation sep{
                rho * std::sinh(chi) / kCodata2018.c, rho * std::cosh(chi)};
            const auto quad = propagator::propagator_quadrature(sep, electron);
            const auto closed = propagator::propagator_closed_form(sep, electron);
            worst = std::max(worst, std::abs(quad.amplitude - closed.amplitude) /
                                        std::abs(closed.amplitude));
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = worst <= 1e-6 && seconds < 10.0;
    return {pass, fmt("15 points (5 z-values, dt = 0 and two boosts each), worst "
                      "deviation %.2e (<= 1e-6), %.3f s (< 10 s)",
                      worst, seconds)};
}

// --- criterion 4: K0 kernel against the integral representation ---------

Outcome kernel_against_oracle(const Context&) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
        const double oracle = specfun::bessel_k0_integral_oracle(x, 4096);
        worst = std::max(worst, rel_dev(specfun::bessel_k0(x).value, oracle));
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = worst <= 1e-9 && seconds < 5.0;
    return {pass, fmt("7-point grid, worst deviation %.2e (<= 1e-9), %.3f s (< 5 s)",
                      worst, seconds)};
}

// --- criterion 5: Lorentz invariance across a rapidity family -----------

Outcome boost_invariance(const Context&) {
    const auto electron = MassiveParticle::from_rest_mass(kCodata2018.m_e);
    double worst = 0.0;
    for (const double z : {1.0, 5.0}) {
        const auto family = propagator::boost_family(z * electron.lambda_bar_m,
                                                     {-2.0, -1.0, 0.0, 1.0, 2.0});
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (const auto& sep : family) {
            const double a =
                std::abs(propagator::propagator_quadrature(sep, electron).amplitude);
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
        worst = std::max(worst, (hi - lo) / hi);
    }
    const bool pass = worst <= 1e-6;
    return {pass, fmt("rapidities {-2..2} at z = 1 and 5, worst quadrature "
                      "amplitude spread %.2e (<= 1e-6)",
                      worst)};
}

// --- criterion 6: exponential asymptotic tail at z = 20 -----------------

Outcome asymptotic_tail(const Context&) {
    const auto electron = MassiveParticle::from_rest_mass(kCodata2018.m_e);
    const auto r = propagator::propagator_closed_form(
        {0.0, 20.0 * electron.lambda_bar_m}, electron);
    const double scaled = std::abs(r.amplitude) * std::sqrt(20.0) * std::exp(20.0);
    const double ratio = scaled / (1.0 / (2.0 * std::sqrt(2.0 * kPi)));
    const bool pass = ratio > 0.99 && ratio < 1.01;
    return {pass, fmt("|D| sqrt(z) e^z over 1/(2 sqrt(2 pi)) at z = 20: %.6f "
                      "(in [0.99, 1.01])",
                      ratio)};
}

// --- criterion 7: window and threshold never disagree -------------------

Outcome window_threshold_coherence(const Context&) {
    const auto electron = MassiveParticle::from_rest_mass(kCodata2018.m_e);
    const double threshold = propagator::observability_threshold();
    std::mt19937 gen(20260825u);
    std::uniform_real_distribution<double> z_dist(0.01, 3.0);
    std::uniform_real_distribution<double> chi_dist(-2.0, 2.0);
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
        const double rho = z_dist(gen) * electron.lambda_bar_m;
        const double chi = chi_dist(gen);
        const propagator::SpacetimeSeparation sep{
            rho * std::sinh(chi) / kCodata2018.c, rho * std::cosh(chi)};
        const auto r = propagator::propagator_closed_form(sep, electron);
        const bool window = propagator::weinberg_window(sep, electron);
        if (window != (r.probability >= threshold) || window != r.above_threshold ||
            window != r.in_weinberg_window) {
            ++disagreements;
        }
    }
    return {disagreements == 0,
            fmt("1000 random spacelike separations, %d window/threshold "
                "disagreements (== 0)",
                disagreements)};
}

// --- criterion 8: guided-mode dispersion identity ------------------------

Outcome dispersion_identity(const Context&) {
    double worst = 0.0;
    int points = 0;
    for (int i = 0; i < 40; ++i) {
        const double omega_c = std::pow(10.0, 6.0 + 6.0 * i / 39.0);
        for (int j = 0; j < 25; ++j) {
            const double excess = std::pow(10.0, -6.0 + 7.0 * j / 24.0);
            const double omega = omega_c * (1.0 + excess);
            const auto character = waveguide::classify_mode(omega, omega_c);
            worst = std::max(worst, waveguide::dispersion_identity_check(
                                        omega, character, omega_c));
            ++points;
        }
    }
    const bool pass = worst <= 1e-12 && points == 1000;
    return {pass, fmt("%d propagating points, worst relative residual %.2e (<= 1e-12)",
                      points, worst)};
}

// --- criterion 9: wave-equation residual scales as h^2 ------------------

Outcome residual_order(const Context&) {
    const double a = 99.31e-3;
    const double omega_c = kCodata2018.c * kPi / a;
    const auto spec = nearfield::make_te10_spec(a, 0.6 * omega_c, 1.0);
    const double kappa = nearfield::replacement_kappa(spec.omega_rad_s,
                                                      spec.omega_c_rad_s);

    const std::vector<double> hs = {1e-3 / kappa, 5e-4 / kappa, 2.5e-4 / kappa};
    double slope_lo = 10.0;
    double slope_hi = -10.0;
    for (const double xf : {0.2, 0.45, 0.7}) {
        for (const double zf : {0.3, 0.9, 1.8}) {
            std::vector<double> lr;
            for (const double h : hs) {
                lr.push_back(std::log(nearfield::wave_equation_residual(
                    spec, xf * a, zf / kappa, 0.0, h)));
            }
            const double slope = (lr.front() - lr.back()) /
                                 (std::log(hs.front()) - std::log(hs.back()));
            slope_lo = std::min(slope_lo, slope);
            slope_hi = std::max(slope_hi, slope);
        }
    }
    const bool slopes_ok = slope_lo >= 1.9 && slope_hi <= 2.1;

    // Negative control: a 10% too-large decay constant must be rejected
    // loudly at the finest probe step.
    const double wrong_kappa = 1.1 * kappa;
    const nearfield::FieldFn wrong = [&](long double x, long double z, long double t) {
        const long double pi_l = 3.141592653589793238462643383279502884L;
        return static_cast<long double>(spec.e0) *
               std::sin(pi_l * x / spec.a_m) *
               std::exp(std::complex<long double>(
                   0.0L, static_cast<long double>(spec.omega_rad_s) * t)) *
               std::exp(-static_cast<long double>(wrong_kappa) * z);
    };
    const double h_fine = 1e-4 / kappa;
    const double honest =
        nearfield::wave_equation_residual(spec, 0.3 * a, 0.4 / kappa, 0.0, h_fine);
    const double dishonest = nearfield::wave_equation_residual_of(
        wrong, spec.omega_rad_s, 0.3 * a, 0.4 / kappa, 0.0, h_fine, 0.0, a);
    const bool control_ok = dishonest >= 10.0 * honest;

    return {slopes_ok && control_ok,
            fmt("9 interior points: slope range [%.3f, %.3f] (within 2.0 +- 0.1); "
                "perturbed-decay control %.1e vs honest %.1e (>= 10x)",
                slope_lo, slope_hi, dishonest, honest)};
}

// --- criterion 10: CLI output is deterministic ---------------------------

Outcome cli_determinism(const Context& ctx) {
    const fs::path conf = ctx.work / "c10.conf";
    {
        std::ofstream file(conf, std::ios::binary);
        file << "sweep-start=0.5\nsweep-stop=5\nsweep-count=7\n";
    }
    struct Variant {
        std::string args;
        std::string tag;
        std::string env;
    };
    const std::vector<Variant> commands = {
        {"report", "c10_report_csv", ""},
        {"report --format json", "c10_report_json", ""},
        {"propagator --sweep-start 0.5 --sweep-stop 5 --sweep-count 7",
         "c10_propagator_csv", ""},
        {"propagator --sweep-start 0.5 --sweep-stop 5 --sweep-count 7 --format json",
         "c10_propagator_json", ""},
        {"propagator --config \"" + conf.string() + "\"", "c10_propagator_conf", ""},
        {"report", "c10_report_envtol", "SPACELIKE_TOL=1e-7 "},
        {"window", "c10_window", ""},
        {"waveguide", "c10_waveguide", ""},
        {"nearfield --nx 5 --nz 5", "c10_nearfield", ""},
    };
    int identical = 0;
    for (const auto& [args, tag, env] : commands) {
        const CliRun first = run_cli(ctx, args, tag + "_a", env);
        const CliRun second = run_cli(ctx, args, tag + "_b", env);
        if (first.exit_code != 0 || second.exit_code != 0) {
            return {false, fmt("'%s' exited with codes %d and %d", args.c_str(),
                               first.exit_code, second.exit_code)};
        }
        const std::string a = read_file(first.output);
        const std::string b = read_file(second.output);
        if (a.empty() || a != b) {
            return {false, fmt("'%s' produced differing or empty output", args.c_str())};
        }
        ++identical;
    }
    return {identical == static_cast<int>(commands.size()),
            fmt("%d command invocations run twice, all byte-identical", identical)};
}

} // namespace

int main(int argc, char** argv) {
    Context ctx;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            ctx.cli = argv[++i];
        } else {
            std::cerr << "usage: spacelike_acceptance --cli <path-to-spacelike>\n";
            return 2;
        }
    }
    if (ctx.cli.empty()) {
        std::cerr << "usage: spacelike_acceptance --cli <path-to-spacelike>\n";
        return 2;
    }

    char tmpl[] = "/tmp/spacelike-acceptance-XXXXXX";
    if (::mkdtemp(tmpl) == nullptr) {
        std::cerr << "error: cannot create scratch directory\n";
        return 2;
    }
    ctx.work = tmpl;

    struct Criterion {
        const char* label;
        std::function<Outcome(const Context&)> check;
    };
    const std::vector<Criterion> criteria = {
        {"report: electron Compton wavelength 3.87e-10 mm", electron_wavelength_via_cli},
        {"report: guided-photon bound 31.6 mm", guided_bound_via_cli},
        {"quadrature equals closed form to 1e-6", route_equivalence},
        {"K0 kernel matches integral oracle to 1e-9", kernel_against_oracle},
        {"boost-family amplitude spread below 1e-6", boost_invariance},
        {"asymptotic tail ratio within 1% at z = 20", asymptotic_tail},
        {"window/threshold coherence on 1000 random separations",
         window_threshold_coherence},
        {"dispersion identity residual below 1e-12 on 1000 points",
         dispersion_identity},
        {"wave-equation residual is O(h^2) with working negative control",
         residual_order},
        {"every CLI command is byte-deterministic", cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].check(ctx);
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) {
            ++failures;
        }
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1)
                  << "/10: " << criteria[i].label << " -- " << outcome.detail << "\n";
    }

    std::error_code ec;
    fs::remove_all(ctx.work, ec);

    if (failures == 0) {
        std::cout << "acceptance: all 10 criteria passed\n";
    } else {
        std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    }
    return failures;
}
