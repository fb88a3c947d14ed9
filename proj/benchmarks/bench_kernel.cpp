#include <benchmark/benchmark.h>

#include "minilb/cases.hpp"
#include "minilb/engine.hpp"
#include "minilb/perfport.hpp"

using namespace minilb;

namespace {

SimState tgvState(std::size_t n, Precision p, Layout l) {
  CaseSpec spec;
  spec.kind = CaseKind::TGV;
  spec.nx = spec.ny = n;
  spec.u0 = 0.05;
  return makeState(spec, l, p);
}

// Args: grid size, precision code, layout code, tile edge (0 = auto).
void BM_Step(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto precision = static_cast<Precision>(st.range(1));
  const auto layout = static_cast<Layout>(st.range(2));
  const auto tile = static_cast<std::size_t>(st.range(3));
  SimState s = tgvState(n, precision, layout);
  const Execution exec{tile == 0 ? Schedule::automatic() : Schedule::tiled(tile, tile), 0};

  for (auto _ : st) {
    step(s, exec);
    benchmark::ClobberMemory();
  }
  const double cells = static_cast<double>(n * n);
  st.counters["MLUPs"] = benchmark::Counter(cells * 1e-6, benchmark::Counter::kIsIterationInvariantRate);
  st.counters["GFLOPs"] = benchmark::Counter(cells * static_cast<double>(flopsPerCell(precision)) * 1e-9,
                                             benchmark::Counter::kIsIterationInvariantRate);
  st.counters["GBs"] = benchmark::Counter(
      cells * static_cast<double>(bytesPerCell(storagePrecision(precision))) * 1e-9,
      benchmark::Counter::kIsIterationInvariantRate);
  st.SetLabel(std::string(toString(precision)) + "/" + std::string(toString(layout)) +
              (tile == 0 ? "/auto" : "/tiled" + std::to_string(tile)));
}

void tuningMatrix(benchmark::internal::Benchmark* b) {
  for (const int64_t n : {256, 1024}) {
    for (const int64_t p : {0, 1, 2, 3}) {
      for (const int64_t l : {0, 1}) {
        for (const int64_t tile : {0, 16}) {
          b->Args({n, p, l, tile});
        }
      }
    }
  }
}

} // namespace

BENCHMARK(BM_Step)->Apply(tuningMatrix)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
