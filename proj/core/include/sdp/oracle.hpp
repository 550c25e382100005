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
//
// Verification machinery kept independent of the solver: a descending-path
// checker, the snap construction that moves path nodes up to discretization
// nodes, straight-line lower bounds, an exact two-face oracle via unfolding,
// and an epsilon-refinement study.

#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sdp/descend_graph.hpp"
#include "sdp/discretize.hpp"
#include "sdp/path.hpp"
#include "sdp/sssp.hpp"
#include "sdp/terrain.hpp"

namespace sdp {

struct DescendReport {
  bool pass = true;
  int segment = -1;  // first offending segment, -1 when passing
  std::string reason;
};

/// Passes iff consecutive heights never increase (1e-9 absolute tolerance)
/// and every segment lies within a single face (endpoints and midpoint
/// within the locate tolerance).
DescendReport verify_descending(const Terrain& t, const Path& p);

struct SnapResult {
  /// The path with every interior point moved to the nearest node at equal
  /// or greater height on its edge (consecutive duplicates removed).
  Path snapped;
  /// Per input point: distance moved (0 for endpoints).
  std::vector<double> displacement;
  /// snapped.length - input length (may be negative).
  double excess = 0;
  /// Per input point: the node id the point maps to, -1 when it is not a
  /// node of the discretization (endpoints in particular).
  std::vector<int> node_ids;
};

/// The upward snap: endpoints stay, vertices stay, and every other interior
/// point (which must lie on a terrain edge) moves to the nearest node of its
/// edge at equal or greater height. Throws MalformedPathError when an
/// interior point is not on an edge.
SnapResult snap_path(const Terrain& t, const Discretization& d, const Path& p);

/// Straight-line 3D distance; a lower bound for any surface path.
inline double euclid_lower_bound(const Vec3& s, const Vec3& v) { return dist(s, v); }

/// Exact SDP oracle for two faces sharing the given edge: unfolds the target
/// face into the source face's plane; when the straight unfolded segment
/// crosses the shared edge strictly between its endpoints and both halves
/// are non-ascending, that two-segment path is the exact SDP and is
/// returned. Returns nullopt when the oracle does not apply (no claim is
/// made). Throws NotAdjacentError when s and v are not in faces sharing e.
std::optional<Path> two_face_exact(const Terrain& t, const Vec3& s, const Vec3& v,
                                   int shared_edge);

struct RefineRow {
  int target = -1;  // index into the targets argument
  double epsilon = 0;
  bool feasible = false;
  double length = 0;
};

struct RefineTable {
  std::vector<RefineRow> rows;
  /// Violated refinement inequalities, human-readable; empty when all hold.
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  double length_of(int target, double epsilon) const;
};

/// Solves the terrain at each epsilon (strictly decreasing, within (0,1])
/// and records every target's answer length, checking that
/// len(eps_i) <= (1 + eps_i) * len(eps_j) + 1e-9 for every finer eps_j.
RefineTable refine_study(const Terrain& t, int source_vertex, const std::vector<Vec3>& targets,
                         const std::vector<double>& epsilons,
                         Solver solver = Solver::bushwhack);

/// A random descending walk through the given (typically very fine) graph:
/// starts at source_node, repeatedly follows a uniformly chosen unvisited
/// out-link, and usually appends one face-interior endpoint. The result is a
/// genuine descending surface path whose interior points lie on edges,
/// independent of any solver.
Path sample_descending_path(const Terrain& t, const Discretization& d, const DescendGraph& g,
                            int source_node, int max_steps, std::mt19937_64& rng);

}  // namespace sdp
