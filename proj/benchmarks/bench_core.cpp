#include <benchmark/benchmark.h>

#include "twistlab/catalog.hpp"
#include "twistlab/congruence.hpp"
#include "twistlab/term.hpp"
#include "twistlab/twist.hpp"
#include "twistlab/varieties.hpp"

namespace {

using namespace twistlab;

void BM_TwistProduct(benchmark::State& state) {
  FiniteAlgebra base = wajsberg_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FiniteAlgebra k = twist_product(base);
    benchmark::DoNotOptimize(k.mul_tab.data());
  }
}
BENCHMARK(BM_TwistProduct)->Arg(4)->Arg(8);

void BM_BklProfile(benchmark::State& state) {
  FiniteAlgebra k = twist_product(wajsberg_chain(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    bool ok = satisfies_profile(k, Profile::BKL);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_BklProfile)->Arg(3)->Arg(5);

void BM_EnumerateAdmissible(benchmark::State& state) {
  FiniteAlgebra base = nm_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto adm = enumerate_admissible(base);
    benchmark::DoNotOptimize(adm.size());
  }
}
BENCHMARK(BM_EnumerateAdmissible)->Arg(5)->Arg(7);

void BM_CongruenceLattice(benchmark::State& state) {
  FiniteAlgebra k = twist_product(godel_chain(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto lat = congruence_lattice(k);
    benchmark::DoNotOptimize(lat.size());
  }
}
BENCHMARK(BM_CongruenceLattice)->Arg(3)->Arg(4);

void BM_SubvarietyLattice(benchmark::State& state) {
  std::vector<FiniteAlgebra> gens = {twist_product(dp_chain(4))};
  for (auto _ : state) {
    VarietyLattice l = subvariety_lattice(gens);
    benchmark::DoNotOptimize(l.nodes.size());
  }
}
BENCHMARK(BM_SubvarietyLattice);

}  // namespace

BENCHMARK_MAIN();
