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

#include <cmath>
#include <set>

#include <doctest.h>

#include "sdp/errors.hpp"
#include "sdp/generators.hpp"
#include "sdp/oracle.hpp"
#include "sdp/query.hpp"
#include "test_util.hpp"

using namespace sdp;
using namespace sdp::test;

namespace {

struct RampFixture {
  Terrain t = unit_ramp();
  GeomParams gp = geometry_params(t);
  Discretization d;
  DescendGraph g;
  ShortestPathTree tree;

  explicit RampFixture(double eps)
      : d(discretize(t, gp, eps)), g(t, d), tree(dijkstra(g, 0)) {}
};

}  // namespace

TEST_CASE("candidate sets match the spec counts on the eps=1 ramp") {
  const RampFixture fx(1.0);

  Location inside;
  inside.kind = LocationKind::face_interior;
  inside.id = 0;
  const auto face_cands = candidate_nodes(fx.t, fx.d, inside);
  CHECK(face_cands.size() == 88);  // 19 + 33 + 33 interior plus A, B, C

  Location on_bc;
  on_bc.kind = LocationKind::edge_interior;
  on_bc.id = fx.t.find_edge(1, 2);
  on_bc.edge_param = 0.37;
  const auto edge_cands = candidate_nodes(fx.t, fx.d, on_bc);
  const std::set<int> cand_set(edge_cands.begin(), edge_cands.end());
  for (int v = 0; v < 4; ++v) CHECK(cand_set.count(v) == 1);
  for (size_t i = 1; i + 1 < fx.d.edge_nodes[on_bc.id].size(); ++i) {
    CHECK(cand_set.count(fx.d.edge_nodes[on_bc.id][i]) == 0);  // BC interior excluded
  }

  Location vert;
  vert.kind = LocationKind::vertex;
  vert.id = 0;
  CHECK_THROWS_AS(candidate_nodes(fx.t, fx.d, vert), WrongKindError);
}

TEST_CASE("candidate enumeration matches brute-force face membership") {
  const RampFixture fx(1.0);
  Location inside;
  inside.kind = LocationKind::face_interior;
  inside.id = 1;
  const auto cands = candidate_nodes(fx.t, fx.d, inside);
  std::set<int> brute;
  for (int id = 0; id < fx.d.node_count(); ++id) {
    const Node& n = fx.d.nodes[id];
    bool member = false;
    if (n.vertex >= 0) {
      member = fx.t.face_has_vertex(1, n.vertex);
    } else {
      for (int e : fx.t.face_edge_ids(1)) member = member || e == n.edge;
    }
    if (member) brute.insert(id);
  }
  CHECK(std::set<int>(cands.begin(), cands.end()) == brute);
}

TEST_CASE("node queries equal extract_path") {
  const RampFixture fx(0.1);
  const QueryAnswer ans = query(fx.t, fx.d, fx.tree, fx.t.vertex(3));
  CHECK(ans.terminal == QueryAnswer::Terminal::tree_node);
  CHECK(ans.last_hop == -1);
  const Path direct = extract_path(fx.d, fx.tree, 3);
  CHECK(ans.length == direct.length);
  CHECK(ans.length >= std::sqrt(3.0) - 1e-9);
  CHECK(ans.length <= 1.1 * std::sqrt(3.0) + 1e-9);
}

TEST_CASE("face centroid below the source is answered exactly") {
  const RampFixture fx(0.5);
  const Vec3 centroid{1.0 / 3, 1.0 / 3, 2.0 / 3};
  const QueryAnswer ans = query(fx.t, fx.d, fx.tree, centroid);
  CHECK(ans.terminal == QueryAnswer::Terminal::interior_point);
  CHECK(ans.last_hop == 0);
  const double expect = std::sqrt(1.0 / 3);
  CHECK(std::abs(ans.length - expect) <= 1e-12 * expect);
}

TEST_CASE("edge-interior query across BC is the straight segment from A") {
  const RampFixture fx(0.1);
  const QueryAnswer ans = query(fx.t, fx.d, fx.tree, {0.5, 0.5, 0.5});
  CHECK(ans.length == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
  CHECK(ans.last_hop == 0);
}

TEST_CASE("query errors") {
  const RampFixture fx(0.5);
  CHECK_THROWS_AS(query(fx.t, fx.d, fx.tree, {5, 5, 5}), OffSurfaceError);

  // From the global minimum D nothing above is feasible.
  const ShortestPathTree from_d = dijkstra(fx.g, 3);
  CHECK_THROWS_AS(query(fx.t, fx.d, from_d, {1.0 / 3, 1.0 / 3, 2.0 / 3}),
                  NoDescendingPathError);
}

TEST_CASE("answers respect the Euclidean lower bound and verify as descending") {
  std::mt19937_64 rng(23);
  const Terrain t = make_random(3, 4, 77);
  const GeomParams gp = geometry_params(t);
  const Discretization d = discretize(t, gp, 0.5);
  const DescendGraph g(t, d);
  const int s = highest_vertex(t);
  const ShortestPathTree tree = dijkstra(g, s);
  int answered = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int f = static_cast<int>(rng() % t.face_count());
    const Vec3 v = random_point_in_face(t, f, rng);
    try {
      const QueryAnswer ans = query(t, d, tree, v);
      ++answered;
      CHECK(ans.length >= euclid_lower_bound(t.vertex(s), v) - 1e-9);
      CHECK(verify_descending(t, ans.path).pass);
      CHECK(ans.length == doctest::Approx(ans.path.length).epsilon(1e-12));
    } catch (const NoDescendingPathError&) {
      // Uphill targets are legitimately infeasible.
    }
  }
  CHECK(answered > 0);
}

TEST_CASE("refinement inequality between coarse and fine epsilons") {
  const Terrain t = unit_ramp();
  const std::vector<Vec3> targets{t.vertex(3), {0.6, 0.55, 0.45}};
  const RefineTable table = refine_study(t, 0, targets, {1.0, 0.5, 0.1});
  CHECK(table.ok());
  for (double eps : {1.0, 0.5, 0.1}) {
    CHECK(table.length_of(0, eps) >= std::sqrt(3.0) - 1e-9);
  }
}
