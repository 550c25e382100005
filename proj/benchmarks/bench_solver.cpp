// Copyright 2026 The sdpaths Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "sdp/descend_graph.hpp"
#include "sdp/discretize.hpp"
#include "sdp/errors.hpp"
#include "sdp/generators.hpp"
#include "sdp/query.hpp"
#include "sdp/sssp.hpp"

namespace {

using namespace sdp;

double eps_of(const benchmark::State& state) { return 1.0 / state.range(0); }

void BM_PlaceSteiner(benchmark::State& state) {
  const Terrain t = make_random(4, 4, 7);
  const GeomParams gp = geometry_params(t);
  const double eps = eps_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(discretize(t, gp, eps));
  }
}
BENCHMARK(BM_PlaceSteiner)->Arg(1)->Arg(4)->Arg(16);

void BM_Dijkstra(benchmark::State& state) {
  const Terrain t = make_random(4, 4, 7);
  const GeomParams gp = geometry_params(t);
  const Discretization d = discretize(t, gp, eps_of(state));
  const DescendGraph g(t, d);
  const int s = highest_vertex(t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dijkstra(g, s));
  }
  state.counters["nodes"] = d.node_count();
}
BENCHMARK(BM_Dijkstra)->Arg(1)->Arg(4)->Arg(8);

void BM_Bushwhack(benchmark::State& state) {
  const Terrain t = make_random(4, 4, 7);
  const GeomParams gp = geometry_params(t);
  const Discretization d = discretize(t, gp, eps_of(state));
  const DescendGraph g(t, d);
  const int s = highest_vertex(t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bushwhack(g, s));
  }
  state.counters["nodes"] = d.node_count();
}
BENCHMARK(BM_Bushwhack)->Arg(1)->Arg(4)->Arg(8)->Arg(16);

void BM_InteriorQuery(benchmark::State& state) {
  const Terrain t = make_random(4, 4, 7);
  const GeomParams gp = geometry_params(t);
  const Discretization d = discretize(t, gp, eps_of(state));
  const DescendGraph g(t, d);
  const int s = highest_vertex(t);
  const ShortestPathTree tree = dijkstra(g, s);
  const auto& tri = t.triangles()[t.face_count() / 2];
  const Vec3 v = (t.vertex(tri[0]) + t.vertex(tri[1]) + t.vertex(tri[2])) / 3.0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(query(t, d, tree, v));
    } catch (const NoDescendingPathError&) {
    }
  }
}
BENCHMARK(BM_InteriorQuery)->Arg(1)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
