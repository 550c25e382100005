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

#include "sdp/query.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sdp/errors.hpp"

namespace sdp {

namespace {

// Node id of v when its location coincides with a graph node, else -1.
int node_of_location(const Terrain& t, const Discretization& d, const Location& loc) {
  if (loc.kind == LocationKind::vertex) return loc.id;
  if (loc.kind != LocationKind::edge_interior) return -1;
  const double tol = 1e-9 * t.bbox_diag();
  const double len = t.edge_length(loc.id);
  const auto& list = d.edge_nodes[loc.id];
  // Nodes are sorted by parameter; find the closest one.
  const auto it = std::lower_bound(list.begin(), list.end(), loc.edge_param,
                                   [&](int id, double param) {
                                     const Node& n = d.nodes[id];
                                     const double p = n.vertex >= 0
                                                          ? (n.vertex == t.edges()[loc.id].a ? 0.0 : 1.0)
                                                          : n.param;
                                     return p < param;
                                   });
  for (const auto cand : {it, it == list.begin() ? list.end() : std::prev(it)}) {
    if (cand == list.end()) continue;
    const Node& n = d.nodes[*cand];
    const double p = n.vertex >= 0 ? (n.vertex == t.edges()[loc.id].a ? 0.0 : 1.0) : n.param;
    if (std::abs(p - loc.edge_param) * len <= tol) return *cand;
  }
  return -1;
}

}  // namespace

std::vector<int> candidate_nodes(const Terrain& t, const Discretization& d,
                                 const Location& loc) {
  std::vector<int> out;
  if (loc.kind == LocationKind::face_interior) {
    for (int e : t.face_edge_ids(loc.id)) {
      const auto& en = d.edge_nodes[e];
      out.insert(out.end(), en.begin(), en.end());
    }
  } else if (loc.kind == LocationKind::edge_interior) {
    for (int f : t.edges()[loc.id].faces) {
      if (f < 0) continue;
      for (int e : t.face_edge_ids(f)) {
        if (e == loc.id) continue;
        const auto& en = d.edge_nodes[e];
        out.insert(out.end(), en.begin(), en.end());
      }
    }
  } else {
    throw WrongKindError("candidate_nodes needs a face- or edge-interior location");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QueryAnswer query(const Terrain& t, const Discretization& d, const ShortestPathTree& tree,
                  const Vec3& v) {
  const Location loc = locate(t, v);
  if (loc.kind == LocationKind::off_surface) {
    throw OffSurfaceError("query point is not on the terrain surface");
  }

  if (const int node = node_of_location(t, d, loc); node >= 0) {
    QueryAnswer ans;
    ans.path = extract_path(d, tree, node);
    ans.length = ans.path.length;
    ans.terminal = QueryAnswer::Terminal::tree_node;
    return ans;
  }

  const double hv = v.z;
  int best = -1;
  double best_total = std::numeric_limits<double>::infinity();
  for (int u : candidate_nodes(t, d, loc)) {
    if (!tree.reachable(u)) continue;
    if (d.nodes[u].height < hv) continue;
    const double total = tree.dist[u] + dist(d.nodes[u].pos, v);
    if (total < best_total) {
      best_total = total;
      best = u;
    }
  }
  if (best < 0) {
    throw NoDescendingPathError("no feasible last hop for the query point");
  }

  QueryAnswer ans;
  ans.path = extract_path(d, tree, best);
  ans.path.points.push_back(v);
  ans.path.length += dist(d.nodes[best].pos, v);
  ans.length = ans.path.length;
  ans.terminal = QueryAnswer::Terminal::interior_point;
  ans.last_hop = best;
  return ans;
}

}  // namespace sdp
