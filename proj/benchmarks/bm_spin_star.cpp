#include <benchmark/benchmark.h>

#include <cmath>

#include "dickesim/spin_star.hpp"

using namespace dickesim;

namespace {

StarParams params_for(int L) {
  StarParams p;
  p.omega_P = 1e9;
  p.omega_A = 1e9 + 25.0 * 1e5 * std::sqrt(double(L));
  p.lambda = 1e5;
  p.lambda_d = 1e7;
  const double chi = p.lambda * p.lambda / (p.omega_A - p.omega_P);
  p.lambda_dp = 2.0 * chi / 50.0;
  p.omega_d = p.omega_A;
  p.omega_dp = p.omega_P + chi;
  return p;
}

}  // namespace

static void BM_prepare_dicke_ideal(benchmark::State& state) {
  const int L = int(state.range(0));
  const StarParams p = params_for(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prepare_dicke(L, p, true).fidelity_x);
  }
}
BENCHMARK(BM_prepare_dicke_ideal)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_build_u_read_ideal(benchmark::State& state) {
  const int L = int(state.range(0));
  const StarParams p = params_for(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_u_read(L, p, true).fidelity);
  }
}
BENCHMARK(BM_build_u_read_ideal)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_soft_pulse_calibration(benchmark::State& state) {
  const int L = int(state.range(0));
  const StarParams p = params_for(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(calibrate_soft_pulse_duration(L, p));
  }
}
BENCHMARK(BM_soft_pulse_calibration)->Arg(8)->Unit(benchmark::kMillisecond);
