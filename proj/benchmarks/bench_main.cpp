// Copyright 2026 The hradius Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "hradius/bounds.hpp"
#include "hradius/enumerate.hpp"
#include "hradius/formats.hpp"
#include "hradius/indices.hpp"

namespace {

using namespace hradius;

void BM_HarmonicIndexPath(benchmark::State& state) {
  const Graph g = Graph::path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_index(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HarmonicIndexPath)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_RandicIndexComplete(benchmark::State& state) {
  const Graph g = Graph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(randic_index(g));
}
BENCHMARK(BM_RandicIndexComplete)->Arg(16)->Arg(128);

void BM_DistanceProfile(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distance_profile(g).radius);
}
BENCHMARK(BM_DistanceProfile)->Arg(64)->Arg(512);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const std::string s = to_graph6(Graph::complete(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(to_graph6(parse_graph6(s)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(10)->Arg(100);

void BM_CheckClaim(benchmark::State& state) {
  const Graph g = Graph::complete(6);
  for (auto _ : state) benchmark::DoNotOptimize(check_claim(Claim::kTheorem3, g));
}
BENCHMARK(BM_CheckClaim);

void BM_Lemma2Grid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lemma2_minimize(n, n).min_value);
}
BENCHMARK(BM_Lemma2Grid)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

// Throughput of the sweep engine in graphs per second.
void BM_Sweep(benchmark::State& state, Family family, std::vector<Claim> claims) {
  const FamilySpec spec{family, static_cast<std::size_t>(state.range(0))};
  std::uint64_t graphs = 0;
  for (auto _ : state) graphs += sweep(spec, claims).graphs_examined;
  state.counters["graphs/s"] =
      benchmark::Counter(static_cast<double>(graphs), benchmark::Counter::kIsRate);
}
BENCHMARK_CAPTURE(BM_Sweep, connected_all, Family::kConnectedGraphs,
                  std::vector<Claim>(kAllClaims.begin() + 2, kAllClaims.end()))
    ->Arg(6)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, trees_theorem1, Family::kLabeledTrees,
                  std::vector<Claim>{Claim::kTheorem1})
    ->Arg(8)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, unicyclic_theorem2, Family::kUnicyclicGraphs,
                  std::vector<Claim>{Claim::kTheorem2})
    ->Arg(7)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
