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

#include "sdp/descend_graph.hpp"
#include "sdp/path.hpp"

namespace sdp {

/// Shortest-path tree over the descending graph, rooted at one node.
/// Immutable after the solver returns.
struct ShortestPathTree {
  int root = -1;
  /// Per-node distance from the root; +inf when unreachable.
  std::vector<double> dist;
  /// Per-node predecessor; -1 for the root and unreachable nodes.
  std::vector<int> parent;
  /// Nodes in the order they were settled (distances non-decreasing).
  std::vector<int> settle_order;

  bool reachable(int v) const { return dist[v] < std::numeric_limits<double>::infinity(); }
};

enum class Solver { dijkstra, bushwhack };

/// Plain Dijkstra with lazy neighbor enumeration; binary heap with lazy
/// deletion, ties broken toward the smaller node id.
ShortestPathTree dijkstra(const DescendGraph& g, int source);

/// Inspection data for the bushwhack interval lists (testing aid): for one
/// (edge, edge') pair of a face, the claimed candidate intervals per settled
/// owner, restricted to not-yet-settled nodes at snapshot time.
struct BushwhackTrace {
  struct Interval {
    int owner = -1;  // settled node owning the interval
    int lo = 0, hi = 0;  // index range into the target edge's node sequence
  };
  struct PairSnapshot {
    int face = -1;
    int source_edge = -1;
    int target_edge = -1;
    std::vector<Interval> intervals;  // ordered along the target sequence
  };
  /// One entry per snapshot moment.
  std::vector<std::vector<PairSnapshot>> snapshots;
};

struct BushwhackOptions {
  /// frozen (default): an owner keeps the interval it claimed when settled;
  /// later owners may claim overlapping ranges. Distances provably equal
  /// dijkstra's. pruned: ownership follows the live nearest-settled-owner
  /// rule, so intervals stay disjoint, but a stolen candidate can lose a
  /// better offer; distances are then admissible upper bounds only.
  enum class Claims { frozen, pruned };
  Claims claims = Claims::frozen;
  /// When nonzero, capture a trace snapshot every N settles.
  int trace_every = 0;
  BushwhackTrace* trace = nullptr;
};

/// Dijkstra variant that maintains, for every (edge, edge') pair of a face,
/// interval lists of candidate target nodes per settled source node, and
/// enqueues only the nearest candidate of each interval. With the default
/// options it produces the same distances as dijkstra (gated by the test
/// suite); parents may differ among equal-length alternatives.
ShortestPathTree bushwhack(const DescendGraph& g, int source,
                           const BushwhackOptions& options = {});

ShortestPathTree solve(const DescendGraph& g, int source, Solver solver);

/// Root-to-target polyline. Throws NoDescendingPathError when the target is
/// unreachable, IndexError for bad ids.
Path extract_path(const Discretization& d, const ShortestPathTree& tree, int target);

}  // namespace sdp
