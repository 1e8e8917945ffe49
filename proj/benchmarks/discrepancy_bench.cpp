#include <benchmark/benchmark.h>

#include "kltgraph/discrepancy.hpp"

namespace {

using namespace kltgraph;

DualGraph star_chain(std::size_t n) {
  // (-2)-fork with two leaves and a long arm of weight-3 curves.
  std::vector<int> w(n, 3);
  w[0] = w[1] = 2;
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 2}, {1, 2}};
  for (Vertex v = 3; v < n; ++v) edges.emplace_back(v - 1, v);
  return DualGraph(w, edges);
}

void BM_PathDeterminants(benchmark::State& state) {
  const DualGraph g = star_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(PathDeterminants(g));
}
BENCHMARK(BM_PathDeterminants)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_LcTest(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const DualGraph g = star_chain(n);
  std::vector<std::int64_t> c(n, 0);
  c.back() = 1;
  const CurveAttachment curve(c);
  const Rational d(1, 10);
  for (auto _ : state) benchmark::DoNotOptimize(lc_test(g, curve, d));
}
BENCHMARK(BM_LcTest)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
