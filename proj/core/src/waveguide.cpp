#include "spacelike/waveguide.hpp"

#include <cmath>
#include <stdexcept>

namespace spacelike::waveguide {

namespace {

using cd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

void validate_waveguide(const RectWaveguide& wg) {
    if (!std::isfinite(wg.a_m) || !std::isfinite(wg.b_m) ||
        !(wg.a_m > wg.b_m) || !(wg.b_m > 0.0)) {
        throw std::invalid_argument("RectWaveguide: requires a > b > 0");
    }
}

void validate_mode(const ModeIndex& m) {
    if (m.n < 0 || m.l < 0 || (m.n == 0 && m.l == 0)) {
        throw std::invalid_argument(
            "ModeIndex: indices must be non-negative and not both zero");
    }
}

} // namespace

double cutoff_angular_frequency(const RectWaveguide& wg, const ModeIndex& m,
                                const PhysicalConstants& k) {
    validate_waveguide(wg);
    validate_mode(m);
    const double k_x = m.n * kPi / wg.a_m;
    const double k_y = m.l * kPi / wg.b_m;
    return k.c * std::hypot(k_x, k_y);
}

ModeCharacter classify_mode(double omega_rad_s, double omega_c_rad_s) {
    if (!std::isfinite(omega_rad_s) || !(omega_rad_s > 0.0) ||
        !std::isfinite(omega_c_rad_s) || !(omega_c_rad_s > 0.0)) {
        throw std::invalid_argument(
            "classify_mode: frequencies must be finite and positive");
    }
    const double scale = std::max(omega_rad_s, omega_c_rad_s);
    if (std::abs(omega_rad_s - omega_c_rad_s) <= 1e-12 * scale) {
        return AtCutoff{};
    }
    const double c = kCodata2018.c;
    if (omega_rad_s > omega_c_rad_s) {
        const double k_z = std::sqrt((omega_rad_s - omega_c_rad_s) *
                                     (omega_rad_s + omega_c_rad_s)) / c;
        return Propagating{k_z};
    }
    const double kappa = std::sqrt((omega_c_rad_s - omega_rad_s) *
                                   (omega_c_rad_s + omega_rad_s)) / c;
    return Evanescent{kappa};
}

std::complex<double> longitudinal_factor(const ModeCharacter& character,
                                         double omega_rad_s,
                                         double z_m, double t_s) {
    return std::visit(
        [&](const auto& c) -> cd {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Propagating>) {
                return std::polar(1.0, omega_rad_s * t_s - c.k_z * z_m);
            } else if constexpr (std::is_same_v<T, Evanescent>) {
                return std::exp(-c.kappa * z_m) *
                       std::polar(1.0, omega_rad_s * t_s);
            } else {
                return std::polar(1.0, omega_rad_s * t_s);
            }
        },
        character);
}

std::complex<double> field_Ex(const RectWaveguide& wg, const ModeIndex& m,
                              double omega_rad_s,
                              double x_m, double y_m, double z_m,
                              double t_s, double amplitude,
                              const PhysicalConstants& k) {
    validate_waveguide(wg);
    validate_mode(m);
    if (!(x_m >= 0.0 && x_m <= wg.a_m && y_m >= 0.0 && y_m <= wg.b_m)) {
        throw std::invalid_argument("field_Ex: point outside the cross-section");
    }
    const double k_x = m.n * kPi / wg.a_m;
    const double k_y = m.l * kPi / wg.b_m;
    // The walls y = 0, b carry an exactly vanishing E_x; evaluating
    // sin(l pi) would leave ~1e-16 of noise instead.
    const double standing = (y_m == 0.0 || y_m == wg.b_m)
        ? 0.0
        : std::cos(k_x * x_m) * std::sin(k_y * y_m);
    const ModeCharacter character =
        classify_mode(omega_rad_s, cutoff_angular_frequency(wg, m, k));
    return amplitude * standing * longitudinal_factor(character, omega_rad_s, z_m, t_s);
}

FieldDecomposition decompose_field(const RectWaveguide& wg, const ModeIndex& m,
                                   double omega_rad_s,
                                   const PhysicalConstants& k) {
    validate_waveguide(wg);
    validate_mode(m);
    const double k_x = m.n * kPi / wg.a_m;
    const double k_y = m.l * kPi / wg.b_m;
    const double b = wg.b_m;
    return FieldDecomposition{
        [k_x, k_y, b](double x, double y) {
            // Same exact-wall-zero convention as field_Ex.
            return (y == 0.0 || y == b) ? 0.0
                                        : std::cos(k_x * x) * std::sin(k_y * y);
        },
        classify_mode(omega_rad_s, cutoff_angular_frequency(wg, m, k)),
    };
}

double observable_spacelike_bound(double omega_c_rad_s, const PhysicalConstants& k) {
    if (!std::isfinite(omega_c_rad_s) || !(omega_c_rad_s > 0.0)) {
        throw std::invalid_argument(
            "observable_spacelike_bound: cutoff must be finite and positive");
    }
    return k.c / omega_c_rad_s;
}

double dispersion_identity_check(double omega_rad_s,
                                 const ModeCharacter& character,
                                 double omega_c_rad_s,
                                 const PhysicalConstants& k) {
    const auto* prop = std::get_if<Propagating>(&character);
    if (prop == nullptr) {
        throw std::invalid_argument(
            "dispersion_identity_check: identity stated for propagating modes only");
    }
    const double energy = k.hbar * omega_rad_s;           // hbar omega
    const double rest = k.hbar * omega_c_rad_s;           // m_eff c^2
    const double momentum = k.hbar * prop->k_z * k.c;     // hbar k_z c
    return std::abs(energy * energy - rest * rest - momentum * momentum) /
           (energy * energy);
}

} // namespace spacelike::waveguide
