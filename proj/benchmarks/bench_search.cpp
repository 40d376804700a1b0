#include <benchmark/benchmark.h>

#include "powerlambda/constructive.hpp"
#include "powerlambda/power_graph.hpp"
#include "powerlambda/search.hpp"

using namespace powerlambda;

namespace {

FiniteGroup group_for(int id) {
  switch (id) {
    case 0: return make_quaternion(16);
    case 1: return make_semidihedral(32);
    case 2: return make_direct_product(make_cyclic(4), make_cyclic(8));
    case 3: return make_cyclic(20);
    default: return make_direct_product(make_cyclic(2), make_cyclic(10));
  }
}

void BM_ExactLambda(benchmark::State& state) {
  const auto group = group_for(static_cast<int>(state.range(0)));
  const auto graph = build_power_graph(group).graph;
  for (auto _ : state) benchmark::DoNotOptimize(exact_lambda(graph).lambda);
  state.SetLabel(std::to_string(group.order()) + " vertices");
}
BENCHMARK(BM_ExactLambda)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ComplementPath(benchmark::State& state) {
  const auto group = make_elementary_abelian(2, static_cast<std::size_t>(state.range(0)));
  const auto rest = delete_vertex(build_power_graph(group).graph, group.identity());
  const auto graph = complement(rest.graph);
  for (auto _ : state) benchmark::DoNotOptimize(find_hamiltonian_path(graph).found());
}
BENCHMARK(BM_ComplementPath)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_PowerGraph(benchmark::State& state) {
  const auto group = make_dihedral(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_power_graph(group).graph.edge_count());
}
BENCHMARK(BM_PowerGraph)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_LambdaPGroup(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sd = make_semidihedral(n);
  const auto q = make_quaternion(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_p_group(sd).lambda);
    benchmark::DoNotOptimize(lambda_p_group(q).lambda);
  }
  state.SetLabel("SD and Q of order " + std::to_string(n));
}
BENCHMARK(BM_LambdaPGroup)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Heisenberg(benchmark::State& state) {
  const auto group = make_heisenberg(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_p_group(group).lambda);
}
BENCHMARK(BM_Heisenberg)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
