// Serial reference vs OpenMP kernels on dense statevectors.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qai/sim/circuit.hpp"

using namespace qai;
using namespace qai::sim;

namespace {

StateVector uniform(int q) {
  StateVector s(q);
  apply_hadamard_layer(s, {0, q});
  return s;
}

Backend backend_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Backend::kSerial : Backend::kParallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_HadamardLayer(benchmark::State& state) {
  const int q = int(state.range(0));
  StateVector s = uniform(q);
  const Gate g = HadamardLayer{{0, q}};
  for (auto _ : state) {
    apply_gate(s, g, backend_of(state));
    benchmark::DoNotOptimize(s.mutable_amplitudes().data());
  }
  label(state);
}

void BM_PhaseLadder(benchmark::State& state) {
  const int q = int(state.range(0));
  StateVector s = uniform(q);
  const Gate g = PhaseLadder{{0, q - 2}, 0.731, std::uint64_t{1} << (q - 1)};
  for (auto _ : state) {
    apply_gate(s, g, backend_of(state));
    benchmark::DoNotOptimize(s.mutable_amplitudes().data());
  }
  label(state);
}

void BM_InverseQft(benchmark::State& state) {
  const int q = int(state.range(0));
  StateVector s = uniform(q);
  const Gate g = Qft{{0, q}, true};
  for (auto _ : state) {
    apply_gate(s, g, backend_of(state));
    benchmark::DoNotOptimize(s.mutable_amplitudes().data());
  }
  label(state);
}

void BM_Reflection(benchmark::State& state) {
  const int q = int(state.range(0));
  StateVector s = uniform(q);
  const int w = 8;
  std::vector<Complex> axis(std::size_t{1} << w, Complex(1.0 / std::sqrt(double(1 << w)), 0.0));
  const Gate g = Reflection{{q - w, w}, axis, Complex(0.0, 1.0)};
  for (auto _ : state) {
    apply_gate(s, g, backend_of(state));
    benchmark::DoNotOptimize(s.mutable_amplitudes().data());
  }
  label(state);
}

void BM_NormSquared(benchmark::State& state) {
  const StateVector s = uniform(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(1) == 0 ? serial::norm_squared(s.amplitudes())
                                                 : parallel::norm_squared(s.amplitudes()));
  }
  label(state);
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int q : {16, 18, 20, 22}) {
    for (int backend : {0, 1}) b->Args({q, backend});
  }
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_HadamardLayer)->Apply(sizes);
BENCHMARK(BM_PhaseLadder)->Apply(sizes);
BENCHMARK(BM_InverseQft)->Apply(sizes);
BENCHMARK(BM_Reflection)->Apply(sizes);
BENCHMARK(BM_NormSquared)->Apply(sizes);

BENCHMARK_MAIN();
