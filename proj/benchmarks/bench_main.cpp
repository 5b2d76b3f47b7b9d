#include <benchmark/benchmark.h>

#include "qbphase/oracle.hpp"
#include "qbphase/phasedist.hpp"
#include "qbphase/quasiprob.hpp"
#include "qbphase/specfun.hpp"

using namespace qbphase;

namespace {

void BM_InCombo(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(i_n_combo(n, x, Branch::Plus));
    x = x < 50.0 ? x * 1.1 : 0.5;
  }
}
BENCHMARK(BM_InCombo)->Arg(1)->Arg(8)->Arg(64);

void BM_InComboKummer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(i_n_combo_kummer(n, x, Branch::Plus));
    x = x < 50.0 ? x * 1.1 : 0.5;
  }
}
BENCHMARK(BM_InComboKummer)->Arg(1)->Arg(8)->Arg(64);

void BM_BuildSpectrum(benchmark::State& state) {
  const double amplitude = static_cast<double>(state.range(0));
  const auto quasi_bell = make_preset(PresetKind::OddCat, amplitude, amplitude);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_spectrum(quasi_bell, 0.0, Branch::Minus));
  }
}
BENCHMARK(BM_BuildSpectrum)->Arg(1)->Arg(3)->Arg(6);

void BM_EvalPhaseDist(benchmark::State& state) {
  const double amplitude = static_cast<double>(state.range(0));
  const auto spectrum = build_spectrum(make_preset(PresetKind::EvenCat, amplitude, amplitude), 0.0,
                                       Branch::Plus);
  double phi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_phase_dist(spectrum, phi));
    phi += 0.01;
  }
  state.counters["terms"] = spectrum.n_used();
}
BENCHMARK(BM_EvalPhaseDist)->Arg(1)->Arg(3)->Arg(6);

void BM_WSymmetrized(benchmark::State& state) {
  const auto quasi_bell = make_preset(PresetKind::YurkeStolerPlus, 1.0, 1.0);
  double angle = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(w_symmetrized(quasi_bell, {0.8, 1.1, angle, 0.3}, 0.0));
    angle += 0.01;
  }
}
BENCHMARK(BM_WSymmetrized);

void BM_QuadraturePhaseDist(benchmark::State& state) {
  const auto quasi_bell = make_preset(PresetKind::OddCat, 1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadrature_phase_dist(quasi_bell, 0.0, Branch::Minus, 0.5));
  }
}
BENCHMARK(BM_QuadraturePhaseDist)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
