#include <benchmark/benchmark.h>

#include "fourpi/crystal_optics.hpp"
#include "fourpi/interferometer.hpp"
#include "fourpi/magnetic_region.hpp"
#include "fourpi/schrodinger_oracle.hpp"

namespace {

using fourpi::magnetic::FieldProfile;
using fourpi::magnetic::NeutronKinematics;
using fourpi::magnetic::SpinSign;

void BM_PlateAmplitudes(benchmark::State& state) {
  double y = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourpi::crystal::plate_amplitudes(0.7, y));
    y = y > 5.0 ? -5.0 : y + 1e-3;
  }
}
BENCHMARK(BM_PlateAmplitudes);

void BM_BeamAmplitudes(benchmark::State& state) {
  const auto amps = fourpi::crystal::plate_amplitudes(0.785, 0.0);
  const auto spin = fourpi::Spinor::normalized({0.6, 0.1}, {0.3, -0.7});
  double alpha = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourpi::interferometer::beam_amplitudes(amps, alpha, spin));
    alpha += 1e-3;
  }
}
BENCHMARK(BM_BeamAmplitudes);

void BM_RotationAngleExact(benchmark::State& state) {
  const auto kin = NeutronKinematics::from_energy(50.0);
  const auto profile = FieldProfile::square(5.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourpi::magnetic::rotation_angle_exact(kin, profile));
  }
}
BENCHMARK(BM_RotationAngleExact);

void BM_SemiclassicalPhase(benchmark::State& state) {
  const auto kin = NeutronKinematics::from_wavenumber(100.0);
  const auto profile = FieldProfile::smooth(0.2 * kin.energy(), 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourpi::magnetic::semiclassical_phase(kin, profile));
  }
}
BENCHMARK(BM_SemiclassicalPhase);

void BM_OracleTransmission(benchmark::State& state) {
  const auto kin = NeutronKinematics::from_wavenumber(100.0);
  const auto profile = FieldProfile::smooth(0.2 * kin.energy(), 1.0, 1.0);
  const auto segments = fourpi::oracle::discretize_profile(
      profile, SpinSign::kUp, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fourpi::oracle::transfer_matrix_transmission(segments, kin.energy()));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleTransmission)->RangeMultiplier(10)->Range(10, 10000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
