// Serial reference (workers = 0) vs OpenMP kernels, per variant.
#include <benchmark/benchmark.h>
#include <omp.h>
#include "mglpa/generate.hpp"
#include "mglpa/lpa.hpp"
#include "mglpa/metrics.hpp"

using namespace mglpa;

namespace {

const Graph& bench_graph() {
  static const Graph g = planted_partition(40, 250, 0.08, 0.0005, 42);
  return g;
}

std::size_t workers_arg(const benchmark::State& state) {
  return state.range(1) < 0 ? static_cast<std::size_t>(omp_get_max_threads()) : static_cast<std::size_t>(state.range(1));
}


void BM_Lpa(benchmark::State& state) {
  const Graph& g = bench_graph();
  LpaConfig cfg;
  cfg.variant = static_cast<Variant>(state.range(0));
  cfg.worker_count = workers_arg(state);
  std::size_t iterations = 0;
  for (auto _ : state) {
    LpaResult r = lpa_run(g, cfg);
    iterations = r.iterations;
    benchmark::DoNotOptimize(r.labels.data());
  }
  state.SetLabel(std::string(to_string(cfg.variant)) + (cfg.worker_count ? " omp" : " serial"));
  state.counters["iterations"] = static_cast<double>(iterations);
  state.counters["aux_bytes"] = static_cast<double>(aux_memory_estimate(g, cfg));
  state.counters["edges/s"] = benchmark::Counter(static_cast<double>(g.num_arcs() * iterations), benchmark::Counter::kIsIterationInvariantRate);
}


void BM_Modularity(benchmark::State& state) {
  const Graph& g = bench_graph();
  LpaConfig cfg;
  cfg.variant = Variant::mg;
  const std::vector<Vertex> labels = lpa_run(g, cfg).labels;
  std::size_t workers = workers_arg(state);
  for (auto _ : state) {
    double q = workers ? modularity_parallel(g, labels, workers) : modularity(g, labels);
    benchmark::DoNotOptimize(q);
  }
  state.SetLabel(workers ? "omp" : "serial");
}

}  // namespace

// range(0): variant, range(1): workers (0 = serial reference, -1 = all threads).
BENCHMARK(BM_Lpa)
    ->ArgsProduct({{static_cast<long>(Variant::exact), static_cast<long>(Variant::bm), static_cast<long>(Variant::mg)}, {0, -1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Modularity)->ArgsProduct({{0}, {0, -1}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
