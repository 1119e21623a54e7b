#include <benchmark/benchmark.h>

#include <cmath>

#include "dickesim/dicke.hpp"
#include "dickesim/evolution.hpp"
#include "dickesim/geometry.hpp"

using namespace dickesim;

namespace {

DephasingChannel channel_for(int L) {
  const Geometry g{1.0, 1.0, 2.0};
  const SpinLattice lat = generate_lattice(
      g, double(L) / constants::pi * 1e12, LatticeMode::UniformRandom, Couplings{}, 7);
  return make_channel(lat, Couplings{}, 0.357 / std::sqrt(double(L)), 1.0);
}

}  // namespace

static void BM_exact_p(benchmark::State& state) {
  const int L = int(state.range(0));
  const DephasingChannel ch = channel_for(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_p(ch).p);
  }
}
BENCHMARK(BM_exact_p)->DenseRange(4, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_exact_p_direct(benchmark::State& state) {
  const int L = int(state.range(0));
  const DephasingChannel ch = channel_for(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_p_direct(ch).p);
  }
}
BENCHMARK(BM_exact_p_direct)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_dicke_x(benchmark::State& state) {
  const int L = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dicke_x(L, L / 2).amps[0]);
  }
}
BENCHMARK(BM_dicke_x)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

static void BM_walsh_hadamard(benchmark::State& state) {
  const int L = int(state.range(0));
  std::vector<std::complex<double>> a(std::size_t{1} << L, {1.0, 0.5});
  for (auto _ : state) {
    walsh_hadamard(a);
    benchmark::DoNotOptimize(a[0]);
  }
}
BENCHMARK(BM_walsh_hadamard)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);
