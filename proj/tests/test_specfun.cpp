#include "doctest.h"

#include "spacelike/specfun.hpp"
#include "test_util.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace {

using spacelike::specfun::bessel_k0;
using spacelike::specfun::bessel_k0_integral_oracle;
using spacelike::specfun::hankel2_0_imag;
using spacelike::specfun::hankel2_0_series;
using spacelike::testing::rel_err;

/// Reference values computed independently at 40 significant digits.
struct K0Point {
    double x;
    double k0;
};

const std::vector<K0Point> kK0Reference = {
    {1e-6, 13.931442073626419413},
    {0.1, 2.4270690247020166125},
    {0.5, 0.92441907122766586178},
    {1.0, 0.42102443824070833334},
    {2.0, 0.11389387274953343565},
    {5.0, 0.0036910983340425942747},
    {10.0, 1.7780062316167651811e-5},
    {50.0, 3.4101677497894955139e-23},
    {700.0, 4.669776431685376881e-306},
};

TEST_CASE("bessel_k0 reproduces high-precision reference values") {
    for (const auto& pt : kK0Reference) {
        CAPTURE(pt.x);
        const auto r = bessel_k0(pt.x);
        CHECK_FALSE(r.underflowed);
        CHECK(rel_err(r.value, pt.k0) < 1e-13);
    }
}

TEST_CASE("bessel_k0 agrees with the integral representation on a cross-check grid") {
    for (const double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
        CAPTURE(x);
        const double oracle = bessel_k0_integral_oracle(x, 4096);
        CHECK(rel_err(bessel_k0(x).value, oracle) < 1e-9);
    }
}

TEST_CASE("the integral oracle matches the reference values on its own") {
    CHECK(rel_err(bessel_k0_integral_oracle(0.1, 4096), 2.4270690247020166125) < 1e-12);
    CHECK(rel_err(bessel_k0_integral_oracle(1.0, 4096), 0.42102443824070833334) < 1e-12);
    CHECK(rel_err(bessel_k0_integral_oracle(10.0, 4096), 1.7780062316167651811e-5) < 1e-12);
}

TEST_CASE("the integral oracle refines towards the direct routine") {
    const double exact = 0.42102443824070833334;
    const double coarse = std::abs(bessel_k0_integral_oracle(1.0, 64) - exact);
    const double fine = std::abs(bessel_k0_integral_oracle(1.0, 4096) - exact);
    CHECK(fine <= coarse);
    CHECK(fine < 1e-13);
}

TEST_CASE("the integral oracle validates its node count") {
    CHECK_THROWS_AS((void)bessel_k0_integral_oracle(1.0, 32), std::invalid_argument);
    CHECK_THROWS_AS((void)bessel_k0_integral_oracle(1.0, 100), std::invalid_argument);
    CHECK_NOTHROW((void)bessel_k0_integral_oracle(1.0, 64));
}

TEST_CASE("bessel_k0 is strictly decreasing and convex") {
    // Log-spaced probe of the working range.
    std::vector<double> xs;
    for (int i = 0; i <= 40; ++i) {
        xs.push_back(0.01 * std::pow(10.0, 4.0 * i / 40.0));
    }
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        CAPTURE(xs[i]);
        CHECK(bessel_k0(xs[i]).value > bessel_k0(xs[i + 1]).value);
    }
    for (double x : {0.05, 0.5, 3.0, 20.0}) {
        CAPTURE(x);
        const double h = 0.01 * x;
        const double mid = bessel_k0(x).value;
        CHECK(bessel_k0(x - h).value + bessel_k0(x + h).value > 2.0 * mid);
    }
}

TEST_CASE("bessel_k0 signals underflow instead of returning denormal garbage") {
    const auto deep = bessel_k0(760.0);
    CHECK(deep.underflowed);
    CHECK(deep.value == 0.0);

    const auto edge = bessel_k0(700.0);
    CHECK_FALSE(edge.underflowed);
    CHECK(edge.value > 0.0);
}

TEST_CASE("bessel_k0 rejects non-positive arguments") {
    CHECK_THROWS_AS((void)bessel_k0(0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)bessel_k0(-1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)bessel_k0(std::nan("")), std::invalid_argument);
}

TEST_CASE("bessel_k0 approaches its large-argument asymptotic form") {
    // K0(x) ~ sqrt(pi/(2x)) e^{-x}; the scaled value at x = 50 must sit within
    // half a percent of sqrt(pi/2) and match the exact scaled reference.
    const double scaled = bessel_k0(50.0).value * std::sqrt(50.0) * std::exp(50.0);
    CHECK(rel_err(scaled, 1.2502153886909509143) < 1e-12);
    CHECK(rel_err(scaled, 1.2533141373155002512) < 5e-3);
}

TEST_CASE("hankel2_0_imag has no real part and a positive imaginary part") {
    for (double x : {0.3, 1.0, 4.0}) {
        CAPTURE(x);
        const auto h = hankel2_0_imag(x);
        CHECK(h.real() == 0.0);
        CHECK(h.imag() > 0.0);
    }
    CHECK(rel_err(hankel2_0_imag(1.0).imag(), 0.26803248203398854876) < 1e-13);
    CHECK(rel_err(hankel2_0_imag(10.0).imag(), 1.1319139224400061596e-5) < 1e-13);
}

TEST_CASE("the imaginary-rotation identity agrees with a direct complex series") {
    // H0^(2) evaluated by its power series at w = -i z must match the value
    // produced through the modified-Bessel route. The series terms grow like
    // cosh z before cancelling down to a result of size ~e^{-z}, so the
    // achievable absolute accuracy scales with cosh z.
    for (double z : {0.5, 1.0, 5.0}) {
        CAPTURE(z);
        const std::complex<double> via_series = hankel2_0_series({0.0, -z});
        const std::complex<double> via_k0 = hankel2_0_imag(z);
        const double bound = 1e-14 * std::cosh(z) + 1e-13 * std::abs(via_k0);
        CHECK(std::abs(via_series - via_k0) < bound);
    }
}

TEST_CASE("(-i/4) H0^(2)(-iz) collapses to the real closed form") {
    for (double z : {0.5, 1.0, 5.0}) {
        CAPTURE(z);
        const std::complex<double> amp = std::complex<double>(0.0, -0.25) * hankel2_0_imag(z);
        CHECK(amp.imag() == 0.0);
        const double pi = 3.14159265358979323846;
        CHECK(rel_err(amp.real(), bessel_k0(z).value / (2.0 * pi)) < 1e-14);
    }
}

TEST_CASE("hankel2_0_series reproduces known real-axis values") {
    // J0(1) - i Y0(1) with both components from independent references.
    const auto h = hankel2_0_series({1.0, 0.0});
    CHECK(rel_err(h.real(), 0.76519768655796655145) < 1e-12);
    CHECK(rel_err(h.imag(), -0.088256964215676957983) < 1e-11);
}

} // namespace
