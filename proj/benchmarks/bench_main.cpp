#include <benchmark/benchmark.h>

#include <random>

#include "clusterkit/polytope.hpp"
#include "clusterkit/verify.hpp"

using namespace clusterkit;

namespace {

const std::vector<std::string> kTypes = {"A4", "B4", "D4", "F4", "D5", "E6"};

Word identity_word(int n) {
  Word c;
  for (int s = 1; s <= n; ++s) c.letters.push_back(s);
  return c;
}

void BM_EnumerateFacets(benchmark::State& state) {
  const CartanMatrix a = cartan_of_type(kTypes[state.range(0)]);
  const Complex k(a, identity_word(a.rank()));
  std::size_t count = 0;
  for (auto _ : state) {
    count = enumerate_facets_with_tables(k, static_cast<unsigned>(state.range(1))).facets.size();
    benchmark::DoNotOptimize(count);
  }
  state.SetLabel(kTypes[state.range(0)] + " " + std::to_string(count) + " facets");
}

void BM_EnumerateSeeds(benchmark::State& state) {
  const CartanMatrix a = cartan_of_type(kTypes[state.range(0)]);
  const Word c = identity_word(a.rank());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_seeds(a, c, static_cast<unsigned>(state.range(1))));
  state.SetLabel(kTypes[state.range(0)]);
}

void BM_Correspondence(benchmark::State& state) {
  const CartanMatrix a = cartan_of_type(kTypes[state.range(0)]);
  const Word c = identity_word(a.rank());
  for (auto _ : state) benchmark::DoNotOptimize(build_correspondence(a, c, static_cast<unsigned>(state.range(1))));
  state.SetLabel(kTypes[state.range(0)]);
}

void BM_NewtonCheck(benchmark::State& state) {
  const CartanMatrix a = cartan_of_type(kTypes[state.range(0)]);
  const Correspondence k = build_correspondence(a, identity_word(a.rank()));
  for (auto _ : state) benchmark::DoNotOptimize(check_newton_conjecture(k, static_cast<unsigned>(state.range(1))));
  state.SetLabel(kTypes[state.range(0)]);
}

void BM_Hull(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> coord(-20, 20);
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::vector<Point> pts(static_cast<std::size_t>(state.range(1)), Point(dim));
  for (Point& p : pts)
    for (Int& x : p) x = coord(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hull(pts));
}

void BM_MinkowskiBrick(benchmark::State& state) {
  const CartanMatrix a = cartan_of_type(kTypes[state.range(0)]);
  const Correspondence k = build_correspondence(a, identity_word(a.rank()));
  for (auto _ : state) benchmark::DoNotOptimize(check_minkowski_brick(k));
  state.SetLabel(kTypes[state.range(0)]);
}

}  // namespace

// range(0): index into kTypes, range(1): jobs.
BENCHMARK(BM_EnumerateFacets)->ArgsProduct({{0, 1, 2, 3, 4, 5}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSeeds)->ArgsProduct({{0, 1, 2, 3}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Correspondence)->ArgsProduct({{0, 1, 2, 3, 4}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NewtonCheck)->ArgsProduct({{0, 2, 3}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hull)->ArgsProduct({{3, 4}, {100, 400}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinkowskiBrick)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
