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

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "sdp/discretize.hpp"
#include "sdp/terrain.hpp"

namespace sdp {

/// The implicit directed graph over vertices and Steiner points. A link
/// x -> y exists iff x and y are boundary nodes of a common face,
/// height(x) >= height(y), and x, y do not lie on a common edge unless both
/// are terrain vertices. Link weight is the 3D segment length. Links are
/// enumerated lazily; the edge set is never materialized.
///
/// Immutable; all queries are pure and may run concurrently.
class DescendGraph {
 public:
  /// When edge_chords is set, links between consecutive nodes of one edge
  /// are added as well (an engineering extension; off reproduces the plain
  /// link rule exactly).
  DescendGraph(const Terrain& t, const Discretization& d, bool edge_chords = false);

  const Terrain& terrain() const { return *t_; }
  const Discretization& discretization() const { return *d_; }
  int node_count() const { return d_->node_count(); }
  bool edge_chords() const { return edge_chords_; }

  /// Boundary nodes of face f (the three edges' nodes plus the vertices,
  /// deduplicated), sorted by node id.
  const std::vector<int>& face_nodes(int f) const { return face_nodes_[f]; }

  /// Faces incident to a node, ascending: the owning edge's faces for
  /// Steiner points, all incident faces for vertices.
  std::span<const int> faces_of(int x) const {
    const Node& n = d_->nodes[x];
    if (n.vertex >= 0) {
      const auto& vf = t_->vertex_faces(n.vertex);
      return {vf.data(), vf.size()};
    }
    const Edge& e = t_->edges()[n.edge];
    return {e.faces.data(), e.faces[1] >= 0 ? size_t{2} : size_t{1}};
  }

  bool link_exists(int x, int y) const;

  /// Neighbors in deterministic order (face id, then node id), deduplicated.
  std::vector<std::pair<int, double>> out_neighbors(int x) const;

  /// Calls f(y, weight) for every out-neighbor, in the out_neighbors order.
  template <class F>
  void for_each_out_neighbor(int x, F&& f) const {
    check_id(x);
    const Node& nx = d_->nodes[x];
    const double hx = nx.height;
    for (const int fid : faces_of(x)) {
      for (const int y : face_nodes_[fid]) {
        if (y == x) continue;
        const Node& ny = d_->nodes[y];
        if (ny.height > hx) continue;
        if (excluded_same_edge(nx, ny)) continue;
        if (duplicate_face_pair(nx, ny, fid)) continue;
        f(y, dist(nx.pos, ny.pos));
      }
    }
    if (edge_chords_) emit_chords(x, f);
  }

  /// DOT or JSON dump of the materialized graph, for debugging small
  /// instances only. Throws DomainError above 500 nodes.
  void dump(std::ostream& os, bool dot) const;

 private:
  void check_id(int x) const;
  bool excluded_same_edge(const Node& nx, const Node& ny) const;
  bool duplicate_face_pair(const Node& nx, const Node& ny, int fid) const;

  template <class F>
  void emit_chords(int x, F&& f) const {
    const Node& nx = d_->nodes[x];
    auto emit_on_edge = [&](int e) {
      const auto& list = d_->edge_nodes[e];
      for (size_t i = 0; i + 1 < list.size(); ++i) {
        int other = -1;
        if (list[i] == x) other = list[i + 1];
        if (list[i + 1] == x) other = list[i];
        if (other < 0) continue;
        const Node& ny = d_->nodes[other];
        if (ny.height > nx.height) continue;
        if (!excluded_same_edge(nx, ny)) continue;  // plain links already emitted
        f(other, dist(nx.pos, ny.pos));
      }
    };
    if (nx.vertex >= 0) {
      for (int e : t_->vertex_edges(nx.vertex)) emit_on_edge(e);
    } else {
      emit_on_edge(nx.edge);
    }
  }

  const Terrain* t_;
  const Discretization* d_;
  bool edge_chords_;
  std::vector<std::vector<int>> face_nodes_;
};

}  // namespace sdp
