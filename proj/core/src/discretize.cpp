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

#include "sdp/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sdp/errors.hpp"

namespace sdp {

double compute_delta(const GeomParams& params, double epsilon, int vertex_count) {
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw DomainError("epsilon must be in (0, 1], got " + std::to_string(epsilon));
  }
  if (vertex_count < 3) {
    throw DomainError("terrain must have at least 3 vertices");
  }
  return epsilon * params.clearance / (4.0 * vertex_count * params.sec_steepness);
}

Discretization place_steiner(const Terrain& t, double delta, const GeomParams& params) {
  if (!(delta > 0)) throw DomainError("delta must be positive");

  Discretization d;
  d.delta = delta;
  d.vertex_count = t.vertex_count();
  d.nodes.reserve(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) {
    d.nodes.push_back(Node{t.vertex(v), t.height(v), v, -1, 0});
  }

  // Distinct vertex heights, for the z = height(x) planes.
  std::vector<double> vertex_heights;
  vertex_heights.reserve(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) vertex_heights.push_back(t.height(v));
  std::sort(vertex_heights.begin(), vertex_heights.end());
  vertex_heights.erase(std::unique(vertex_heights.begin(), vertex_heights.end()),
                       vertex_heights.end());

  const double level_step = delta * params.sec_steepness;

  d.edge_nodes.assign(t.edge_count(), {});
  for (int e = 0; e < t.edge_count(); ++e) {
    const Edge& ed = t.edges()[e];
    const Vec3 &va = t.vertex(ed.a), &vb = t.vertex(ed.b);
    std::vector<double> params_on_edge;

    if (t.edge_is_level(e)) {
      const double len = dist(va, vb);
      const int parts = static_cast<int>(std::ceil(len / level_step));
      for (int i = 1; i < parts; ++i) {
        params_on_edge.push_back(static_cast<double>(i) / parts);
      }
    } else {
      const double za = va.z, zb = vb.z;
      const double lo = std::min(za, zb), hi = std::max(za, zb);
      // Planes z = j*delta for positive j intersecting [lo, hi].
      long long j = std::max(1LL, static_cast<long long>(std::ceil(lo / delta)));
      while (j > 1 && (j - 1) * delta >= lo) --j;
      while (j * delta < lo) ++j;
      for (; j * delta <= hi; ++j) {
        params_on_edge.push_back((j * delta - za) / (zb - za));
      }
      // Planes through vertex heights strictly inside the edge's range.
      for (double zx : vertex_heights) {
        if (zx > lo && zx < hi) params_on_edge.push_back((zx - za) / (zb - za));
      }
      std::sort(params_on_edge.begin(), params_on_edge.end());
    }

    // Merge within 1e-12 of a neighbor or an endpoint; endpoints win.
    std::vector<double> merged;
    for (double p : params_on_edge) {
      if (p <= 1e-12 || p >= 1.0 - 1e-12) continue;
      if (!merged.empty() && p - merged.back() <= 1e-12) continue;
      merged.push_back(p);
    }

    auto& list = d.edge_nodes[e];
    list.reserve(merged.size() + 2);
    list.push_back(ed.a);
    for (double p : merged) {
      const int id = d.node_count();
      const Vec3 pos = lerp(va, vb, p);
      d.nodes.push_back(Node{pos, pos.z, -1, e, p});
      list.push_back(id);
    }
    list.push_back(ed.b);
  }
  return d;
}

Discretization place_steiner(const Terrain& t, double delta) {
  return place_steiner(t, delta, geometry_params(t));
}

Discretization discretize(const Terrain& t, const GeomParams& params, double epsilon) {
  const double delta = compute_delta(params, epsilon, t.vertex_count());
  Discretization d = place_steiner(t, delta, params);
  d.node_bound = 5.0 * t.vertex_count() * (params.longest_edge / params.clearance) *
                 (1.0 / epsilon) * params.sec_steepness;
  return d;
}

NodeInfo node_at(const Terrain& t, const Discretization& d, int id) {
  if (id < 0 || id >= d.node_count()) {
    throw IndexError("unknown node id " + std::to_string(id));
  }
  const Node& n = d.nodes[id];
  NodeInfo info;
  info.pos = n.pos;
  info.height = n.height;
  info.is_vertex = n.vertex >= 0;
  info.vertex = n.vertex;
  info.edge = n.edge;
  info.param = n.param;
  if (info.is_vertex) {
    info.incident_edges = t.vertex_edges(n.vertex);
  } else {
    info.incident_edges = {n.edge};
  }
  return info;
}

}  // namespace sdp
