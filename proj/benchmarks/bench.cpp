#include <benchmark/benchmark.h>

#include <random>

#include "flatlat/flats.hpp"
#include "flatlat/graphcheck.hpp"
#include "flatlat/realize.hpp"

using namespace flatlat;

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

SimpleGraph random_graph(std::size_t n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(p);
  SimpleGraph g(names(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (edge(rng)) g.add_edge(a, b);
  return g;
}

}  // namespace

static void BM_FlatsUniform(benchmark::State& state) {
  const auto c = uniform_complex(names(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(all_flats(c).size());
}
BENCHMARK(BM_FlatsUniform)->DenseRange(6, 14, 2);

static void BM_TransversalComplexBoolean(benchmark::State& state) {
  const auto l = boolean_lattice(names(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transversal_complex(l).complex.facets().size());
}
BENCHMARK(BM_TransversalComplexBoolean)->DenseRange(3, 8);

static void BM_RealizableGeneral(benchmark::State& state) {
  const auto l = boolean_lattice(names(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_realizable(l, MethodChoice::kGeneral).realizable);
}
BENCHMARK(BM_RealizableGeneral)->DenseRange(3, 7);

static void BM_SupercliquesFast(benchmark::State& state) {
  const auto g = random_graph(state.range(0), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_supercliques(g).size());
}
BENCHMARK(BM_SupercliquesFast)->DenseRange(6, 16, 2);

static void BM_SupercliquesNaive(benchmark::State& state) {
  const auto g = random_graph(state.range(0), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(naive_supercliques(g).size());
}
BENCHMARK(BM_SupercliquesNaive)->DenseRange(6, 16, 2);

static void BM_EnumerateLattices(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattices(state.range(0)).size());
}
BENCHMARK(BM_EnumerateLattices)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
