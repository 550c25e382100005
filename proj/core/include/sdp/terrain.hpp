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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdp/vec3.hpp"

namespace sdp {

/// An undirected terrain edge. Vertex indices satisfy a < b; faces[1] is -1
/// for boundary edges. Extra incident faces beyond two (non-manifold input)
/// are recorded separately for validation.
struct Edge {
  int a = -1, b = -1;
  std::array<int, 2> faces{{-1, -1}};
};

/// A triangulated terrain: an indexed triangle mesh whose xy-projections are
/// expected to tile the plane region they cover (every vertical line meets
/// the surface at most once). Adjacency is derived at construction;
/// geometric validity is checked separately by validate().
///
/// Immutable after construction; safe to share across threads.
class Terrain {
 public:
  Terrain() = default;

  /// Builds edges and adjacency. Throws IndexError for out-of-range or
  /// repeated vertex indices in a triangle, DomainError for non-finite
  /// coordinates.
  Terrain(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles,
          std::optional<int> source = std::nullopt);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int face_count() const { return static_cast<int>(triangles_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const Vec3& vertex(int v) const { return vertices_[v]; }
  double height(int v) const { return vertices_[v].z; }

  /// Edge ids of face f, in corner order: {v0v1, v1v2, v2v0}.
  const std::array<int, 3>& face_edge_ids(int f) const { return face_edges_[f]; }
  const std::vector<int>& vertex_faces(int v) const { return vertex_faces_[v]; }
  const std::vector<int>& vertex_edges(int v) const { return vertex_edges_[v]; }

  /// Face ids incident to edges beyond the two stored ones (non-manifold
  /// input); empty for well-formed terrains. Pairs are (edge id, face id).
  const std::vector<std::pair<int, int>>& extra_edge_faces() const { return extra_edge_faces_; }

  std::optional<int> source() const { return source_; }

  /// An edge is level iff its endpoint heights are exactly equal.
  bool edge_is_level(int e) const {
    return vertices_[edges_[e].a].z == vertices_[edges_[e].b].z;
  }
  double edge_length(int e) const { return dist(vertices_[edges_[e].a], vertices_[edges_[e].b]); }

  int find_edge(int a, int b) const;

  Vec3 bbox_min() const { return bbox_min_; }
  Vec3 bbox_max() const { return bbox_max_; }
  double bbox_diag() const { return dist(bbox_min_, bbox_max_); }

  /// Whether face f contains vertex v.
  bool face_has_vertex(int f, int v) const {
    const auto& t = triangles_[f];
    return t[0] == v || t[1] == v || t[2] == v;
  }

 private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::optional<int> source_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> face_edges_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<std::vector<int>> vertex_edges_;
  std::vector<std::pair<int, int>> extra_edge_faces_;
  Vec3 bbox_min_, bbox_max_;
};

/// Geometric parameters of a terrain used to size the discretization.
struct GeomParams {
  /// Length of the longest edge.
  double longest_edge = 0;
  /// Smallest 3D distance from a vertex to the opposite edge of one of its
  /// faces (true point-to-segment distance).
  double clearance = 0;
  /// Largest acute angle (radians) between a non-level edge and the
  /// vertical; 0 when every edge is level.
  double steepness = 0;
  /// 1 / cos(steepness).
  double sec_steepness = 1;
  /// (longest_edge / clearance) * sec_steepness.
  double geometry_factor = 0;
};

enum class LocationKind { vertex, edge_interior, face_interior, off_surface };

/// Classification of a 3D point against the terrain surface.
struct Location {
  LocationKind kind = LocationKind::off_surface;
  /// Vertex, edge, or face index depending on kind; -1 off surface.
  int id = -1;
  /// For edge_interior: parameter in (0,1) from the edge's endpoint a.
  double edge_param = 0;
  /// For face_interior: barycentric coordinates over the face's corners.
  std::array<double, 3> bary{{0, 0, 0}};
};

struct Violation {
  enum class Kind { degenerate_face, xy_overlap, nonmanifold_edge, count_bound, nonfinite };
  Kind kind;
  int a = -1, b = -1;  // offending face/edge ids where applicable
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks the terrain invariants: positive-area faces (3D and xy), no
/// overlapping xy-projections, edges bordering at most two faces, and the
/// Euler count bounds. Violations are report entries, never exceptions.
ValidationReport validate(const Terrain& t);

/// Extracts the discretization parameters. Throws DomainError if a face has
/// zero area.
GeomParams geometry_params(const Terrain& t);

/// Locates p against the surface with tolerance 1e-9 * bbox diagonal.
/// Vertex beats edge beats face when several are within tolerance.
Location locate(const Terrain& t, const Vec3& p);

/// The 3D point a Location describes.
Vec3 reconstruct(const Terrain& t, const Location& loc);

/// Height of the surface above (x, y). Throws OffSurfaceError when (x, y) is
/// outside the terrain's xy extent.
double surface_z(const Terrain& t, double x, double y);

/// Adds p as a terrain vertex, splitting the containing face or edge as
/// needed; returns the (possibly unchanged) terrain with its source field set
/// and the vertex id. Throws OffSurfaceError when p is not on the surface.
std::pair<Terrain, int> insert_source(const Terrain& t, const Vec3& p);

/// Vertex with the maximum height (smallest id on ties).
int highest_vertex(const Terrain& t);

}  // namespace sdp
