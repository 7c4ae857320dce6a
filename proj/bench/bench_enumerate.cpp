// Serial reference vs OpenMP triple enumeration.

#include <benchmark/benchmark.h>

#include "trisurf/ske.hpp"

using namespace trisurf;

namespace {

TriangleSignature sig_for(FamilyKind kind, int p) {
  return kind == FamilyKind::DpxZp ? TriangleSignature{{2 * p, 2 * p, p}}
                                   : TriangleSignature{{2 * p * p, 2 * p * p, p * p}};
}

template <bool Parallel>
void BM_Enumerate(benchmark::State& state) {
  const auto kind = static_cast<FamilyKind>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  auto g = build_group(kind, p);
  auto sig = sig_for(kind, p);
  std::size_t n = 0;
  for (auto _ : state) {
    auto ts = Parallel ? enumerate_triples(*g, sig) : enumerate_triples_serial(*g, sig);
    n = ts.size();
    benchmark::DoNotOptimize(ts.data());
  }
  state.counters["triples"] = static_cast<double>(n);
  state.counters["order"] = g->order();
  state.SetLabel(g->family().tag() + " " + sig.str());
}

void args(benchmark::internal::Benchmark* b) {
  for (auto kind : {FamilyKind::DpxZp, FamilyKind::Z2p2})
    for (int p : {5, 7, 11, 13}) b->Args({static_cast<long>(kind), p});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Enumerate<false>)->Name("serial")->Apply(args);
BENCHMARK(BM_Enumerate<true>)->Name("openmp")->Apply(args)->UseRealTime();

BENCHMARK_MAIN();
