#include "spacelike/nearfield.hpp"

#include <cmath>
#include <stdexcept>

namespace spacelike::nearfield {

namespace {

using cld = std::complex<long double>;

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

} // namespace

NearFieldSpec make_te10_spec(double a_m, double omega_rad_s, double e0,
                             const PhysicalConstants& k) {
    if (!std::isfinite(a_m) || !(a_m > 0.0)) {
        throw std::invalid_argument("make_te10_spec: slab width must be positive");
    }
    NearFieldSpec spec{a_m, omega_rad_s, k.c * static_cast<double>(kPiL) / a_m, e0};
    validate(spec, k);
    return spec;
}

void validate(const NearFieldSpec& spec, const PhysicalConstants& k) {
    if (!std::isfinite(spec.a_m) || !(spec.a_m > 0.0)) {
        throw std::invalid_argument("NearFieldSpec: slab width must be positive");
    }
    if (!std::isfinite(spec.e0)) {
        throw std::invalid_argument("NearFieldSpec: amplitude must be finite");
    }
    if (!std::isfinite(spec.omega_rad_s) || spec.omega_rad_s < 0.0 ||
        spec.omega_rad_s >= spec.omega_c_rad_s) {
        throw std::invalid_argument(
            "NearFieldSpec: requires 0 <= omega < omega_c (evanescent regime)");
    }
    const double omega_c_of_a = k.c * static_cast<double>(kPiL) / spec.a_m;
    if (std::abs(spec.omega_c_rad_s - omega_c_of_a) > 1e-12 * omega_c_of_a) {
        throw std::invalid_argument(
            "NearFieldSpec: omega_c inconsistent with slab width (omega_c = c pi / a)");
    }
}

double replacement_kappa(double omega_rad_s, double omega_c_rad_s,
                         const PhysicalConstants& k) {
    if (!std::isfinite(omega_rad_s) || omega_rad_s < 0.0 ||
        !std::isfinite(omega_c_rad_s) || !(omega_c_rad_s > 0.0) ||
        omega_rad_s >= omega_c_rad_s) {
        throw std::invalid_argument(
            "replacement_kappa: requires 0 <= omega < omega_c");
    }
    return std::sqrt((omega_c_rad_s - omega_rad_s) *
                     (omega_c_rad_s + omega_rad_s)) / k.c;
}

std::complex<double> nearfield_Ey(const NearFieldSpec& spec,
                                  double x_m, double z_m, double t_s,
                                  const PhysicalConstants& k) {
    validate(spec, k);
    if (!(x_m >= 0.0 && x_m <= spec.a_m)) {
        throw std::invalid_argument("nearfield_Ey: x outside [0, a]");
    }
    if (!(z_m >= 0.0)) {
        throw std::invalid_argument("nearfield_Ey: z must be >= 0");
    }
    const double kappa = replacement_kappa(spec.omega_rad_s, spec.omega_c_rad_s, k);
    // The walls x = 0, a carry an exactly vanishing tangential field;
    // evaluating sin(pi) would leave ~1e-16 of noise instead.
    const double standing = (x_m == 0.0 || x_m == spec.a_m)
        ? 0.0
        : std::sin(static_cast<double>(kPiL) * x_m / spec.a_m);
    const double magnitude = spec.e0 * standing * std::exp(-kappa * z_m);
    return magnitude * std::polar(1.0, spec.omega_rad_s * t_s);
}

double wave_equation_residual_of(const FieldFn& field, double omega_rad_s,
                                 double x_m, double z_m, double t_s, double h_m,
                                 double x_min, double x_max,
                                 const PhysicalConstants& k) {
    if (!std::isfinite(h_m) || !(h_m > 0.0)) {
        throw std::invalid_argument("wave_equation_residual: step must be positive");
    }
    if (x_m - 2.0 * h_m < x_min || x_m + 2.0 * h_m > x_max || z_m - 2.0 * h_m < 0.0) {
        throw std::invalid_argument(
            "wave_equation_residual: point must be at least 2h inside the domain");
    }
    const long double x = x_m;
    const long double z = z_m;
    const long double t = t_s;
    const long double h = h_m;

    const cld centre = field(x, z, t);
    const long double centre_mag = std::abs(centre);
    if (!(centre_mag > 0.0L)) {
        throw std::invalid_argument(
            "wave_equation_residual: field vanishes at the evaluation point");
    }

    const cld d2x = (field(x + h, z, t) - 2.0L * centre + field(x - h, z, t)) / (h * h);
    const cld d2z = (field(x, z + h, t) - 2.0L * centre + field(x, z - h, t)) / (h * h);
    // Harmonic time dependence: -(1/c^2) d^2/dt^2 -> +(omega/c)^2.
    const long double w_over_c = static_cast<long double>(omega_rad_s) /
                                 static_cast<long double>(k.c);
    const cld residual = d2x + d2z + w_over_c * w_over_c * centre;
    return static_cast<double>(std::abs(residual) / centre_mag);
}

double wave_equation_residual(const NearFieldSpec& spec,
                              double x_m, double z_m, double t_s, double h_m,
                              const PhysicalConstants& k) {
    validate(spec, k);
    const long double omega = spec.omega_rad_s;
    const long double omega_c = spec.omega_c_rad_s;
    const long double kappa = std::sqrt((omega_c - omega) * (omega_c + omega)) /
                              static_cast<long double>(k.c);
    const long double inv_a = 1.0L / static_cast<long double>(spec.a_m);
    const long double e0 = spec.e0;
    const FieldFn analytic = [=](long double x, long double z, long double t) -> cld {
        const long double mag = e0 * std::sin(kPiL * x * inv_a) * std::exp(-kappa * z);
        return mag * std::polar(1.0L, omega * t);
    };
    return wave_equation_residual_of(analytic, spec.omega_rad_s, x_m, z_m, t_s, h_m,
                                     0.0, spec.a_m, k);
}

} // namespace spacelike::nearfield
