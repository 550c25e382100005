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

#include <vector>

#include "sdp/discretize.hpp"
#include "sdp/path.hpp"
#include "sdp/sssp.hpp"
#include "sdp/terrain.hpp"

namespace sdp {

/// An approximate-SDP answer for one query point.
struct QueryAnswer {
  enum class Terminal { tree_node, interior_point };
  Path path;
  double length = 0;
  Terminal terminal = Terminal::tree_node;
  /// The tree node the last segment leaves from; -1 for tree-node answers.
  int last_hop = -1;
};

/// Candidate last-hop nodes for an interior query location: for a point
/// inside face f, all nodes on f's three edges plus f's vertices; for a
/// point inside edge e, all nodes on the other edges of the faces adjacent
/// to e plus those faces' vertices (nodes interior to e are excluded).
/// Throws WrongKindError for vertex or off-surface locations.
std::vector<int> candidate_nodes(const Terrain& t, const Discretization& d,
                                 const Location& loc);

/// Answers an approximate-SDP query from the tree's root to v. Node queries
/// return the tree path; interior queries minimize dist(u) + |uv| over
/// candidate nodes u with height(u) >= height(v), ties toward the smaller
/// node id. Throws OffSurfaceError or NoDescendingPathError.
QueryAnswer query(const Terrain& t, const Discretization& d, const ShortestPathTree& tree,
                  const Vec3& v);

}  // namespace sdp
