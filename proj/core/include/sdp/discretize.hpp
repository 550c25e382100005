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

#pragma once

#include <limits>
#include <vector>

#include "sdp/terrain.hpp"
#include "sdp/vec3.hpp"

namespace sdp {

/// One search node: a terrain vertex or a Steiner point on an edge.
struct Node {
  Vec3 pos;
  double height = 0;
  /// Vertex id, or -1 for Steiner points.
  int vertex = -1;
  /// Owning edge for Steiner points; -1 for vertices.
  int edge = -1;
  /// Position along the owning edge, measured from its endpoint a.
  double param = 0;
};

/// Steiner nodes for every edge of a terrain. Node ids are contiguous:
/// vertices occupy 0..n-1 in input order, Steiner points follow grouped by
/// edge in edge-id order and sorted by edge parameter.
///
/// Immutable after construction.
struct Discretization {
  /// Vertical plane spacing used for non-level edges.
  double delta = 0;
  /// Per-edge node-count bound (strict); +inf when built without an epsilon.
  double node_bound = std::numeric_limits<double>::infinity();
  int vertex_count = 0;
  std::vector<Node> nodes;
  /// Per edge: node ids sorted by parameter, endpoints included.
  std::vector<std::vector<int>> edge_nodes;

  int node_count() const { return static_cast<int>(nodes.size()); }
  bool is_vertex(int id) const { return id < vertex_count; }
};

/// Facts about one node, resolved against the terrain.
struct NodeInfo {
  Vec3 pos;
  double height = 0;
  bool is_vertex = false;
  int vertex = -1;
  int edge = -1;
  double param = 0;
  /// All incident edges for vertices; the owning edge for Steiner points.
  std::vector<int> incident_edges;
};

/// Plane spacing epsilon * clearance * cos(steepness) / (4n).
/// Throws DomainError unless epsilon is in (0,1] and n >= 3.
double compute_delta(const GeomParams& params, double epsilon, int vertex_count);

/// Places Steiner points on every edge: non-level edges are cut by the
/// horizontal planes z = j*delta (j >= 1) and z = height(x) for every vertex
/// x, with cuts landing within 1e-12 of an existing node (in edge-parameter
/// units) merged into it; level edges are split into ceil(len / (delta *
/// sec_steepness)) equal parts. Deterministic for identical inputs.
Discretization place_steiner(const Terrain& t, double delta, const GeomParams& params);
Discretization place_steiner(const Terrain& t, double delta);

/// compute_delta + place_steiner, with the per-edge node bound
/// 5n (L/h) (1/epsilon) sec(steepness) recorded in the result.
Discretization discretize(const Terrain& t, const GeomParams& params, double epsilon);

/// Lookup with provenance. Throws IndexError for unknown ids.
NodeInfo node_at(const Terrain& t, const Discretization& d, int id);

}  // namespace sdp
