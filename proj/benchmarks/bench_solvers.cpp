#include <benchmark/benchmark.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fairmatch/fpt.hpp"
#include "fairmatch/gen.hpp"
#include "fairmatch/matchflow.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/oracle.hpp"
#include "fairmatch/poly.hpp"

namespace {

using namespace fairmatch;

// Complete bipartite instance with `groups` colors of 40 left vertices each.
Instance planted(int groups, int k, int ell) {
  std::vector<int> colors;
  for (int c = 0; c < groups; ++c) colors.insert(colors.end(), 40, c);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < static_cast<int>(colors.size()); ++u) {
    for (int v = 0; v < k; ++v) edges.emplace_back(u, v);
  }
  return make_instance(groups, std::move(colors), k, std::move(edges), ell,
                       Measure::kMaxMin);
}

Instance random_case(int n, int k, int colors, Measure measure,
                     std::optional<int> right_cap, std::uint64_t seed) {
  RandomInstanceSpec spec;
  spec.n = n;
  spec.k = k;
  spec.num_colors = colors;
  spec.edge_prob = 0.5;
  spec.max_right_degree = right_cap;
  spec.ell = 1;
  spec.measure = measure;
  spec.seed = seed;
  return random_instance(spec);
}

void BM_maxmin_k_planted(benchmark::State& state) {
  Instance inst = planted(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_maxmin_k(inst).status);
  }
  state.SetComplexityN(state.range(0) * 40);
}
BENCHMARK(BM_maxmin_k_planted)->Arg(5)->Arg(15)->Arg(50)->Complexity();

void BM_kc_small(benchmark::State& state) {
  Instance inst = random_case(10, 3, 4, Measure::kMaxMin, {}, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_kc(inst).status);
  }
}
BENCHMARK(BM_kc_small);

void BM_two_colors(benchmark::State& state) {
  Instance inst = random_case(static_cast<int>(state.range(0)), 4, 2,
                              Measure::kMaxMin, {}, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_two_colors(inst).status);
  }
}
BENCHMARK(BM_two_colors)->Arg(64)->Arg(256)->Arg(512);

void BM_mov_deg4(benchmark::State& state) {
  Instance inst = random_case(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(0)) / 2, 3,
                              Measure::kMov, 4, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_mov_deg4(inst).status);
  }
}
BENCHMARK(BM_mov_deg4)->Arg(16)->Arg(48);

void BM_oracle_small(benchmark::State& state) {
  Instance inst = random_case(10, 3, 3, Measure::kMaxMin, {}, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force(inst, 50'000'000).status);
  }
}
BENCHMARK(BM_oracle_small);

void BM_construct_exact(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Instance inst = random_case(n, 8, 1, Measure::kMaxMin, {}, 19);
  BipGraph g;
  g.n_left = inst.n();
  g.n_right = inst.k;
  g.adj = inst.left_adj;
  std::vector<int> targets(8, n / 8);
  targets[0] += n % 8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_exact(g, targets).has_value());
  }
}
BENCHMARK(BM_construct_exact)->Arg(256)->Arg(1024);

void BM_reduce_3dm(benchmark::State& state) {
  ThreeDMInstance t = random_3dm(20, 20, 20, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_3dm_maxmin24(t).n());
  }
}
BENCHMARK(BM_reduce_3dm);

}  // namespace

BENCHMARK_MAIN();
