#include <benchmark/benchmark.h>

#include "c4book/canon.hpp"
#include "c4book/enumerate.hpp"
#include "c4book/geometry.hpp"
#include "c4book/ramsey.hpp"

using namespace c4book;

namespace {

Graph er(std::uint64_t q) {
  gf::PrimePower pp{};
  gf::prime_power(q, pp);
  return geometry::er_graph(gf::Field(static_cast<gf::Residue>(pp.p), pp.e));
}

void BM_ErGraph(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(er(q));
}
BENCHMARK(BM_ErGraph)->Arg(7)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_IsC4Free(benchmark::State& state) {
  const Graph g = er(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_c4_free(g));
  state.SetLabel(std::to_string(g.order()) + " vertices");
}
BENCHMARK(BM_IsC4Free)->Arg(13)->Arg(31)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ComplementBookNumber(benchmark::State& state) {
  const Graph g = er(static_cast<std::uint64_t>(state.range(0)));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(complement_book_number(g, k));
}
BENCHMARK(BM_ComplementBookNumber)->Args({7, 2})->Args({8, 3})->Args({11, 2})->Unit(benchmark::kMillisecond);

void BM_CanonicalLabeling(benchmark::State& state) {
  const SmallGraph g = SmallGraph::from_graph(er(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_labeling(g));
}
BENCHMARK(BM_CanonicalLabeling)->Arg(3)->Arg(5)->Arg(7);

void BM_EnumerateC4Free(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  std::uint64_t count = 0;
  for (auto _ : state) {
    const auto r = enumerate_c4_free(order, nullptr, [](const SmallGraph&) { return false; });
    count = r.graphs_examined;
  }
  state.counters["classes"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateC4Free)->Arg(8)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
