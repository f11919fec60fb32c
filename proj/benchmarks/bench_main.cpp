#include <benchmark/benchmark.h>

#include "assemblies/assembly.hpp"
#include "assemblies/census.hpp"
#include "assemblies/constructions.hpp"
#include "assemblies/morphisms.hpp"

using namespace assemblies;

static void BM_EnumerateCanonical(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_canonical_tables(n));
  }
}
BENCHMARK(BM_EnumerateCanonical)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Census(benchmark::State& state) {
  CensusOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_semigroups(4, opts));
  }
}
BENCHMARK(BM_Census)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CheckAxiomsRees(benchmark::State& state) {
  auto const t = rees_paper();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_axioms(t));
  }
}
BENCHMARK(BM_CheckAxiomsRees);

static void BM_CosetAssembly(benchmark::State& state) {
  auto const g = cyclic_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coset_assembly(g));
  }
}
BENCHMARK(BM_CosetAssembly)->Arg(8)->Arg(16)->Arg(32);

// chain(n) -> chain(n): every order-preserving map and more
static void BM_HomChain(benchmark::State& state) {
  auto const c = check_axioms(chain_assembly(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_homomorphisms(c, c));
  }
}
BENCHMARK(BM_HomChain)->DenseRange(3, 6);

static void BM_HomCosetToGroup(benchmark::State& state) {
  auto const a = check_axioms(coset_assembly(cyclic_group(8)));
  auto const g = check_axioms(cyclic_group(4).base());
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_homomorphisms(a, g));
  }
}
BENCHMARK(BM_HomCosetToGroup);
BENCHMARK_MAIN();
