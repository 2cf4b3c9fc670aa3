#include <benchmark/benchmark.h>

#include "camfan/bridges.hpp"
#include "camfan/verify.hpp"

using namespace camfan;

namespace {

std::vector<std::vector<int>> chain(std::initializer_list<int> bonds) {
  int n = static_cast<int>(bonds.size()) + 1;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  int i = 0;
  for (int b : bonds) {
    m[i][i + 1] = m[i + 1][i] = b;
    ++i;
  }
  return m;
}

const CoxeterGroup& b3() {
  static CoxeterGroup g = CoxeterGroup::build(chain({4, 3}));
  return g;
}

const CoxeterGroup& f4() {
  static CoxeterGroup g = CoxeterGroup::build(chain({3, 4, 3}));
  return g;
}

const CoxeterGroup& h3() {
  static CoxeterGroup g = CoxeterGroup::build(chain({5, 3}));
  return g;
}

}  // namespace

static void BM_BuildGroupB3(benchmark::State& state) {
  auto m = chain({4, 3});
  for (auto _ : state) benchmark::DoNotOptimize(CoxeterGroup::build(m).order());
}
BENCHMARK(BM_BuildGroupB3)->Unit(benchmark::kMillisecond);

static void BM_BuildGroupF4(benchmark::State& state) {
  auto m = chain({3, 4, 3});
  for (auto _ : state) benchmark::DoNotOptimize(CoxeterGroup::build(m).order());
}
BENCHMARK(BM_BuildGroupF4)->Unit(benchmark::kMillisecond);

static void BM_SortableEnumF4(benchmark::State& state) {
  const auto& g = f4();
  CoxWord c({0, 1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(sortable_elements(g, c).size());
}
BENCHMARK(BM_SortableEnumF4)->Unit(benchmark::kMillisecond);

static void BM_PiDownAll_B3(benchmark::State& state) {
  const auto& g = b3();
  CoxWord c({0, 1, 2});
  for (auto _ : state) {
    ElementId acc = 0;
    for (ElementId w = 0; w < g.order(); ++w) acc ^= pi_down(g, c, w);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PiDownAll_B3)->Unit(benchmark::kMillisecond);

static void BM_ClusterEnumH3(benchmark::State& state) {
  const auto& g = h3();
  CoxWord c({0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_clusters(g, c).size());
}
BENCHMARK(BM_ClusterEnumH3)->Unit(benchmark::kMillisecond);

static void BM_VerifySpanB3(benchmark::State& state) {
  const auto& g = b3();
  CoxWord c({0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(verify_span(g, c).ok);
}
BENCHMARK(BM_VerifySpanB3)->Unit(benchmark::kMillisecond);

static void BM_QuasiCartanB3(benchmark::State& state) {
  const auto& g = b3();
  CoxWord c({0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(verify_quasi_cartan(g, c).ok);
}
BENCHMARK(BM_QuasiCartanB3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
