#include <benchmark/benchmark.h>

#include <random>

#include "zg/classifier.hpp"
#include "zg/group.hpp"
#include "zg/matrix.hpp"
#include "zg/ring.hpp"
#include "zg/units.hpp"

namespace {

zg::RingElement random_element(const zg::GroupPtr& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-3, 3);
  zg::RingElement w(g);
  for (zg::Element e = 0; e < g->order(); ++e) w[e] = coef(rng);
  return w;
}

void BM_Multiply(benchmark::State& state) {
  const auto g = zg::quaternion_cyclic_group(static_cast<long long>(state.range(0)));
  std::mt19937_64 rng(7);
  const auto x = random_element(g, rng), y = random_element(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Multiply)->Arg(3)->Arg(5)->Arg(7)->Arg(13);

void BM_Determinant(benchmark::State& state) {
  const auto g = zg::quaternion_cyclic_group(static_cast<long long>(state.range(0)));
  std::mt19937_64 rng(11);
  const auto m = zg::regular_matrix(random_element(g, rng));
  for (auto _ : state) benchmark::DoNotOptimize(zg::determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(3)->Arg(5)->Arg(7);

void BM_TryInverseHoechsmann(benchmark::State& state) {
  const auto pair = zg::quaternion_cyclic_pair(static_cast<long long>(state.range(0)));
  const auto& u = pair.s1.unit();
  for (auto _ : state) benchmark::DoNotOptimize(zg::try_inverse(u));
}
BENCHMARK(BM_TryInverseHoechsmann)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_QuaternionCyclicPair(benchmark::State& state) {
  const long long p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(zg::quaternion_cyclic_pair(p));
}
BENCHMARK(BM_QuaternionCyclicPair)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_UnitSearch(benchmark::State& state) {
  const auto g = zg::quaternion8();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zg::bounded_unit_search(g, 1, threads));
}
BENCHMARK(BM_UnitSearch)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SubgroupLattice(benchmark::State& state) {
  const auto g = zg::dihedral(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zg::all_subgroups(*g));
}
BENCHMARK(BM_SubgroupLattice)->Arg(4)->Arg(12)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
