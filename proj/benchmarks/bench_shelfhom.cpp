#include <benchmark/benchmark.h>

#include <random>

#include "shelfhom/canonical.hpp"
#include "shelfhom/chain_complex.hpp"
#include "shelfhom/smith.hpp"

using namespace shelfhom;

namespace {

BinaryOpTable exceptional4() {
  return BinaryOpTable::from_rows({{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {1, 0, 0, 3}});
}

void BM_BoundaryMatrix(benchmark::State& state) {
  const auto ms = validate_multishelf({exceptional4()});
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boundary_matrix(ms, {{1}}, degree, true));
}
BENCHMARK(BM_BoundaryMatrix)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_SmithBoundary(benchmark::State& state) {
  const auto ms = validate_multishelf({exceptional4()});
  const auto m = boundary_matrix(ms, {{1}}, static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
  state.counters["nnz"] = static_cast<double>(m.nnz());
}
BENCHMARK(BM_SmithBoundary)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_SmithBoundaryBigint(benchmark::State& state) {
  const auto ms = validate_multishelf({exceptional4()});
  const auto m = boundary_matrix(ms, {{1}}, static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form_bigint(m));
}
BENCHMARK(BM_SmithBoundaryBigint)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SmithRandomDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> v(-9, 9);
  std::vector<std::vector<Integer>> d(n, std::vector<Integer>(n));
  for (auto& row : d)
    for (auto& x : row) x = v(rng);
  const auto m = SparseIntMatrix::from_dense(d);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandomDense)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_EnumerateShelves(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_shelves(n));
}
BENCHMARK(BM_EnumerateShelves)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto t = BinaryOpTable::from_function(static_cast<std::size_t>(state.range(0)),
                                              [](Element x, Element) { return x; });
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 8, 2);

void BM_PresetHomology(benchmark::State& state) {
  const auto shelf = validate_shelf(exceptional4());
  const int maxdeg = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(preset_homology(shelf, HomologyKind::Shelf, maxdeg));
}
BENCHMARK(BM_PresetHomology)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_AllFourElementProfiles(benchmark::State& state) {
  const auto keys = enumerate_shelves(4);
  for (auto _ : state)
    for (const auto& k : keys)
      benchmark::DoNotOptimize(preset_homology(validate_shelf(k.table), HomologyKind::Shelf, 3));
}
BENCHMARK(BM_AllFourElementProfiles)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
