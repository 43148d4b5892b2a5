// Microbenchmarks for the numerical kernels: the K0 evaluation regimes,
// the slow integral oracle, both propagator routes, and field sampling.

#include <benchmark/benchmark.h>

#include "spacelike/constants.hpp"
#include "spacelike/nearfield.hpp"
#include "spacelike/propagator.hpp"
#include "spacelike/specfun.hpp"
#include "spacelike/waveguide.hpp"

#include <cmath>

namespace {

using namespace spacelike;

const MassiveParticle kElectron = MassiveParticle::from_rest_mass(kCodata2018.m_e);

void BM_BesselK0_Series(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::bessel_k0(0.8).value);
    }
}
BENCHMARK(BM_BesselK0_Series);

void BM_BesselK0_ChebyshevMid(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::bessel_k0(5.0).value);
    }
}
BENCHMARK(BM_BesselK0_ChebyshevMid);

void BM_BesselK0_ChebyshevFar(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::bessel_k0(20.0).value);
    }
}
BENCHMARK(BM_BesselK0_ChebyshevFar);

void BM_BesselK0_IntegralOracle(benchmark::State& state) {
    const int nodes = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::bessel_k0_integral_oracle(1.0, nodes));
    }
}
BENCHMARK(BM_BesselK0_IntegralOracle)->Arg(256)->Arg(1024)->Arg(4096);

void BM_PropagatorClosedForm(benchmark::State& state) {
    const propagator::SpacetimeSeparation sep{0.0, kElectron.lambda_bar_m};
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagator::propagator_closed_form(sep, kElectron));
    }
}
BENCHMARK(BM_PropagatorClosedForm);

void BM_PropagatorQuadratureRest(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0)) / 10.0;
    const propagator::SpacetimeSeparation sep{0.0, z * kElectron.lambda_bar_m};
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagator::propagator_quadrature(sep, kElectron));
    }
}
BENCHMARK(BM_PropagatorQuadratureRest)->Arg(5)->Arg(10)->Arg(50);

void BM_PropagatorQuadratureBoosted(benchmark::State& state) {
    const double chi = 2.0;
    const double rho = kElectron.lambda_bar_m;
    const propagator::SpacetimeSeparation sep{rho * std::sinh(chi) / kCodata2018.c,
                                              rho * std::cosh(chi)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagator::propagator_quadrature(sep, kElectron));
    }
}
BENCHMARK(BM_PropagatorQuadratureBoosted);

void BM_WaveguideFieldSample(benchmark::State& state) {
    const waveguide::RectWaveguide wg{99.31e-3, 49.0e-3};
    const double wc = waveguide::cutoff_angular_frequency(wg, {1, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(waveguide::field_Ex(wg, {1, 1}, 0.6 * wc, 0.03,
                                                     0.02, 0.05, 1e-10, 1.0));
    }
}
BENCHMARK(BM_WaveguideFieldSample);

void BM_NearfieldResidual(benchmark::State& state) {
    const double a = 99.31e-3;
    const double omega_c = kCodata2018.c * 3.14159265358979323846 / a;
    const auto spec = nearfield::make_te10_spec(a, 0.6 * omega_c, 1.0);
    const double kappa = nearfield::replacement_kappa(spec.omega_rad_s,
                                                      spec.omega_c_rad_s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nearfield::wave_equation_residual(
            spec, 0.3 * a, 0.5 / kappa, 0.0, 3e-4 / kappa));
    }
}
BENCHMARK(BM_NearfieldResidual);

} // namespace

BENCHMARK_MAIN();
