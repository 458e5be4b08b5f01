#include <benchmark/benchmark.h>

#include "legknot/bounds.hpp"
#include "legknot/cables.hpp"

using namespace legknot;

namespace {

const KnotRecord& rec(const char* name) {
  static const auto recs = load_records(LEGKNOT_BENCH_RECORDS);
  return find_record(recs, name);
}

void BM_GridInvariants(benchmark::State& st) {
  const auto g = random_grid(static_cast<int>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(grid_invariants(g));
}
BENCHMARK(BM_GridInvariants)->Arg(10)->Arg(40);

void BM_Kauffman(benchmark::State& st, const char* name) {
  const auto d = rec(name).diagram();
  for (auto _ : st) benchmark::DoNotOptimize(kauffman_F(d));
}
BENCHMARK_CAPTURE(BM_Kauffman, 8_19, "8_19");
BENCHMARK_CAPTURE(BM_Kauffman, 11n19, "11n19");

void BM_Homfly(benchmark::State& st, const char* name) {
  const auto d = rec(name).diagram();
  for (auto _ : st) benchmark::DoNotOptimize(homfly(d));
}
BENCHMARK_CAPTURE(BM_Homfly, 11n19, "11n19");

void BM_KhScan(benchmark::State& st, const char* name) {
  const auto d = rec(name).diagram();
  for (auto _ : st) benchmark::DoNotOptimize(khovanov(d));
}
BENCHMARK_CAPTURE(BM_KhScan, 8_19, "8_19");
BENCHMARK_CAPTURE(BM_KhScan, 10_124, "10_124");

void BM_KhNaive(benchmark::State& st, const char* name) {
  const auto d = rec(name).diagram();
  KhOptions o;
  o.mode = KhMode::Naive;
  for (auto _ : st) benchmark::DoNotOptimize(khovanov(d, o));
}
BENCHMARK_CAPTURE(BM_KhNaive, 8_19, "8_19");

void BM_KhDouble(benchmark::State& st) {
  const auto d = diagram_double(rec("3_1").diagram(), -3);
  for (auto _ : st) benchmark::DoNotOptimize(khovanov(d));
}
BENCHMARK(BM_KhDouble);

void BM_Certify(benchmark::State& st, const char* name) {
  const auto& r = rec(name);
  for (auto _ : st) benchmark::DoNotOptimize(certify(r));
}
BENCHMARK_CAPTURE(BM_Certify, 3_1, "3_1");
BENCHMARK_CAPTURE(BM_Certify, 11n126, "11n126");

}  // namespace

BENCHMARK_MAIN();
