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

#include "sdp/terrain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "sdp/errors.hpp"

namespace sdp {

namespace {

double tri_area3d(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * norm(cross(b - a, c - a));
}

double tri_area_xy(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * std::abs((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

}  // namespace

double point_triangle_dist(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
  // Project onto the triangle plane; fall back to edges when outside.
  const Vec3 n = cross(b - a, c - a);
  const double n2 = norm2(n);
  if (n2 == 0) {
    return std::min({point_segment_dist(p, a, b), point_segment_dist(p, b, c),
                     point_segment_dist(p, c, a)});
  }
  const Vec3 q = p - n * (dot(p - a, n) / n2);
  // Barycentric coordinates of the projection.
  const Vec3 v0 = b - a, v1 = c - a, v2 = q - a;
  const double d00 = dot(v0, v0), d01 = dot(v0, v1), d11 = dot(v1, v1);
  const double d20 = dot(v2, v0), d21 = dot(v2, v1);
  const double den = d00 * d11 - d01 * d01;
  const double l1 = (d11 * d20 - d01 * d21) / den;
  const double l2 = (d00 * d21 - d01 * d20) / den;
  if (l1 >= 0 && l2 >= 0 && l1 + l2 <= 1) return dist(p, q);
  return std::min({point_segment_dist(p, a, b), point_segment_dist(p, b, c),
                   point_segment_dist(p, c, a)});
}

Terrain::Terrain(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles,
                 std::optional<int> source)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)), source_(source) {
  const int n = vertex_count();
  for (int v = 0; v < n; ++v) {
    if (!finite(vertices_[v])) {
      throw DomainError("non-finite coordinate at vertex " + std::to_string(v));
    }
  }
  if (source_ && (*source_ < 0 || *source_ >= n)) {
    throw IndexError("source vertex " + std::to_string(*source_) + " out of range");
  }

  vertex_faces_.assign(n, {});
  vertex_edges_.assign(n, {});
  face_edges_.assign(triangles_.size(), {-1, -1, -1});

  std::map<std::pair<int, int>, int> edge_ids;
  for (int f = 0; f < face_count(); ++f) {
    const auto& tri = triangles_[f];
    for (int m = 0; m < 3; ++m) {
      const int v = tri[m];
      if (v < 0 || v >= n) {
        throw IndexError("triangle " + std::to_string(f) + " references vertex " +
                         std::to_string(v) + " of " + std::to_string(n));
      }
      if (tri[m] == tri[(m + 1) % 3]) {
        throw IndexError("triangle " + std::to_string(f) + " repeats vertex " +
                         std::to_string(v));
      }
      vertex_faces_[v].push_back(f);
    }
    for (int m = 0; m < 3; ++m) {
      const int i = tri[m], j = tri[(m + 1) % 3];
      const std::pair<int, int> key{std::min(i, j), std::max(i, j)};
      auto it = edge_ids.find(key);
      int e;
      if (it == edge_ids.end()) {
        e = edge_count();
        edge_ids.emplace(key, e);
        edges_.push_back(Edge{key.first, key.second, {-1, -1}});
        vertex_edges_[key.first].push_back(e);
        vertex_edges_[key.second].push_back(e);
      } else {
        e = it->second;
      }
      face_edges_[f][m] = e;
      if (edges_[e].faces[0] < 0) {
        edges_[e].faces[0] = f;
      } else if (edges_[e].faces[1] < 0) {
        edges_[e].faces[1] = f;
      } else {
        extra_edge_faces_.emplace_back(e, f);
      }
    }
  }
  for (auto& vf : vertex_faces_) std::sort(vf.begin(), vf.end());
  for (auto& ve : vertex_edges_) std::sort(ve.begin(), ve.end());

  bbox_min_ = bbox_max_ = n ? vertices_[0] : Vec3{};
  for (const auto& v : vertices_) {
    bbox_min_ = {std::min(bbox_min_.x, v.x), std::min(bbox_min_.y, v.y), std::min(bbox_min_.z, v.z)};
    bbox_max_ = {std::max(bbox_max_.x, v.x), std::max(bbox_max_.y, v.y), std::max(bbox_max_.z, v.z)};
  }
}

int Terrain::find_edge(int a, int b) const {
  const int lo = std::min(a, b), hi = std::max(a, b);
  for (int e : vertex_edges_[lo]) {
    if (edges_[e].a == lo && edges_[e].b == hi) return e;
  }
  return -1;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations) os << v.detail << "\n";
  return os.str();
}

namespace {

// Area of the xy-intersection of two triangles via Sutherland-Hodgman.
double xy_overlap_area(const Terrain& t, int fa, int fb) {
  using P2 = std::pair<double, double>;
  auto poly_of = [&](int f) {
    std::vector<P2> p;
    for (int m = 0; m < 3; ++m) {
      const Vec3& v = t.vertex(t.triangles()[f][m]);
      p.emplace_back(v.x, v.y);
    }
    // Ensure counterclockwise orientation.
    const double cr = (p[1].first - p[0].first) * (p[2].second - p[0].second) -
                      (p[2].first - p[0].first) * (p[1].second - p[0].second);
    if (cr < 0) std::swap(p[1], p[2]);
    return p;
  };
  std::vector<P2> subject = poly_of(fa);
  const std::vector<P2> clip = poly_of(fb);
  for (size_t i = 0; i < clip.size() && !subject.empty(); ++i) {
    const P2 ca = clip[i], cb = clip[(i + 1) % clip.size()];
    auto inside = [&](const P2& q) {
      return (cb.first - ca.first) * (q.second - ca.second) -
                 (cb.second - ca.second) * (q.first - ca.first) >=
             0;
    };
    auto intersect = [&](const P2& p, const P2& q) {
      const double a1 = cb.second - ca.second, b1 = ca.first - cb.first;
      const double c1 = a1 * ca.first + b1 * ca.second;
      const double a2 = q.second - p.second, b2 = p.first - q.first;
      const double c2 = a2 * p.first + b2 * p.second;
      const double det = a1 * b2 - a2 * b1;
      if (det == 0) return p;
      return P2{(b2 * c1 - b1 * c2) / det, (a1 * c2 - a2 * c1) / det};
    };
    std::vector<P2> out;
    for (size_t j = 0; j < subject.size(); ++j) {
      const P2 cur = subject[j], prev = subject[(j + subject.size() - 1) % subject.size()];
      const bool cin = inside(cur), pin = inside(prev);
      if (cin) {
        if (!pin) out.push_back(intersect(prev, cur));
        out.push_back(cur);
      } else if (pin) {
        out.push_back(intersect(prev, cur));
      }
    }
    subject = std::move(out);
  }
  double area = 0;
  for (size_t j = 1; j + 1 < subject.size(); ++j) {
    area += 0.5 * std::abs((subject[j].first - subject[0].first) *
                               (subject[j + 1].second - subject[0].second) -
                           (subject[j + 1].first - subject[0].first) *
                               (subject[j].second - subject[0].second));
  }
  return area;
}

}  // namespace

ValidationReport validate(const Terrain& t) {
  ValidationReport report;
  const int n = t.vertex_count();
  const double diag_xy = std::hypot(t.bbox_max().x - t.bbox_min().x,
                                    t.bbox_max().y - t.bbox_min().y);
  const double area_tol = 1e-14 * diag_xy * diag_xy;

  for (int v = 0; v < n; ++v) {
    const Vec3& p = t.vertex(v);
    if (!(std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z))) {
      report.violations.push_back(
          {Violation::Kind::nonfinite, v, -1, "non-finite vertex " + std::to_string(v)});
    }
  }

  std::vector<double> areas(t.face_count());
  for (int f = 0; f < t.face_count(); ++f) {
    const auto& tri = t.triangles()[f];
    const Vec3 &a = t.vertex(tri[0]), &b = t.vertex(tri[1]), &c = t.vertex(tri[2]);
    areas[f] = tri_area_xy(a, b, c);
    if (areas[f] <= area_tol || tri_area3d(a, b, c) <= area_tol) {
      report.violations.push_back({Violation::Kind::degenerate_face, f, -1,
                                   "face " + std::to_string(f) + " is degenerate"});
    }
  }

  // Pairwise xy-overlap (vertical-line property); adjacent faces touch with
  // zero intersection area, which is fine.
  for (int fa = 0; fa < t.face_count(); ++fa) {
    for (int fb = fa + 1; fb < t.face_count(); ++fb) {
      if (areas[fa] <= area_tol || areas[fb] <= area_tol) continue;
      const double overlap = xy_overlap_area(t, fa, fb);
      if (overlap > 1e-10 * std::min(areas[fa], areas[fb])) {
        report.violations.push_back({Violation::Kind::xy_overlap, fa, fb,
                                     "faces " + std::to_string(fa) + " and " +
                                         std::to_string(fb) + " overlap in xy"});
      }
    }
  }

  for (const auto& [e, f] : t.extra_edge_faces()) {
    report.violations.push_back({Violation::Kind::nonmanifold_edge, e, f,
                                 "edge " + std::to_string(e) + " borders more than 2 faces"});
  }

  if (t.edge_count() > 3 * n || t.face_count() > 2 * n) {
    report.violations.push_back({Violation::Kind::count_bound, -1, -1,
                                 "edge/face counts exceed the 3n/2n bounds"});
  }
  return report;
}

GeomParams geometry_params(const Terrain& t) {
  GeomParams gp;
  gp.longest_edge = 0;
  gp.clearance = std::numeric_limits<double>::infinity();
  double min_cos = 1.0;  // cos of the steepest allowed angle seen so far
  bool any_nonlevel = false;

  for (int e = 0; e < t.edge_count(); ++e) {
    const Edge& ed = t.edges()[e];
    const Vec3 &a = t.vertex(ed.a), &b = t.vertex(ed.b);
    const double len = dist(a, b);
    gp.longest_edge = std::max(gp.longest_edge, len);
    if (!t.edge_is_level(e)) {
      any_nonlevel = true;
      if (len > 0) min_cos = std::min(min_cos, std::abs(b.z - a.z) / len);
    }
  }

  for (int f = 0; f < t.face_count(); ++f) {
    const auto& tri = t.triangles()[f];
    const Vec3 &a = t.vertex(tri[0]), &b = t.vertex(tri[1]), &c = t.vertex(tri[2]);
    if (tri_area3d(a, b, c) <= 0) {
      throw DomainError("degenerate face " + std::to_string(f));
    }
    gp.clearance = std::min(gp.clearance, point_segment_dist(a, b, c));
    gp.clearance = std::min(gp.clearance, point_segment_dist(b, c, a));
    gp.clearance = std::min(gp.clearance, point_segment_dist(c, a, b));
  }

  if (any_nonlevel) {
    gp.steepness = std::acos(std::clamp(min_cos, 0.0, 1.0));
    gp.sec_steepness = 1.0 / min_cos;
  } else {
    gp.steepness = 0;
    gp.sec_steepness = 1;
  }
  gp.geometry_factor = gp.longest_edge / gp.clearance * gp.sec_steepness;
  return gp;
}

Location locate(const Terrain& t, const Vec3& p) {
  const double tol = 1e-9 * t.bbox_diag();

  // Vertex beats edge beats face.
  int best_v = -1;
  double best_vd = tol;
  for (int v = 0; v < t.vertex_count(); ++v) {
    const double d = dist(p, t.vertex(v));
    if (d < best_vd) {
      best_v = v;
      best_vd = d;
    }
  }
  if (best_v >= 0) return Location{LocationKind::vertex, best_v, 0, {}};

  int best_e = -1;
  double best_ed = tol, best_param = 0;
  for (int e = 0; e < t.edge_count(); ++e) {
    const Vec3 &a = t.vertex(t.edges()[e].a), &b = t.vertex(t.edges()[e].b);
    const double param = segment_param(p, a, b);
    const double d = dist(p, lerp(a, b, param));
    if (d < best_ed) {
      best_e = e;
      best_ed = d;
      best_param = param;
    }
  }
  if (best_e >= 0) return Location{LocationKind::edge_interior, best_e, best_param, {}};

  int best_f = -1;
  double best_fd = tol;
  for (int f = 0; f < t.face_count(); ++f) {
    const auto& tri = t.triangles()[f];
    const double d = point_triangle_dist(p, t.vertex(tri[0]), t.vertex(tri[1]), t.vertex(tri[2]));
    if (d < best_fd) {
      best_f = f;
      best_fd = d;
    }
  }
  if (best_f >= 0) {
    const auto& tri = t.triangles()[best_f];
    const Vec3 &a = t.vertex(tri[0]), &b = t.vertex(tri[1]), &c = t.vertex(tri[2]);
    // xy barycentric coordinates (the surface is a height field).
    const double den = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    const double l1 = ((p.x - a.x) * (c.y - a.y) - (c.x - a.x) * (p.y - a.y)) / den;
    const double l2 = ((b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)) / den;
    return Location{LocationKind::face_interior, best_f, 0, {1.0 - l1 - l2, l1, l2}};
  }
  return Location{};
}

Vec3 reconstruct(const Terrain& t, const Location& loc) {
  switch (loc.kind) {
    case LocationKind::vertex:
      return t.vertex(loc.id);
    case LocationKind::edge_interior: {
      const Edge& e = t.edges()[loc.id];
      return lerp(t.vertex(e.a), t.vertex(e.b), loc.edge_param);
    }
    case LocationKind::face_interior: {
      const auto& tri = t.triangles()[loc.id];
      return loc.bary[0] * t.vertex(tri[0]) + loc.bary[1] * t.vertex(tri[1]) +
             loc.bary[2] * t.vertex(tri[2]);
    }
    default:
      throw WrongKindError("cannot reconstruct an off-surface location");
  }
}

double surface_z(const Terrain& t, double x, double y) {
  const double diag_xy = std::hypot(t.bbox_max().x - t.bbox_min().x,
                                    t.bbox_max().y - t.bbox_min().y);
  const double tol = 1e-9 * diag_xy;
  for (int f = 0; f < t.face_count(); ++f) {
    const auto& tri = t.triangles()[f];
    const Vec3 &a = t.vertex(tri[0]), &b = t.vertex(tri[1]), &c = t.vertex(tri[2]);
    const double den = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    if (den == 0) continue;
    const double l1 = ((x - a.x) * (c.y - a.y) - (c.x - a.x) * (y - a.y)) / den;
    const double l2 = ((b.x - a.x) * (y - a.y) - (x - a.x) * (b.y - a.y)) / den;
    const double l0 = 1.0 - l1 - l2;
    const double lmax = std::max({std::hypot(b.x - a.x, b.y - a.y),
                                  std::hypot(c.x - b.x, c.y - b.y),
                                  std::hypot(a.x - c.x, a.y - c.y)});
    const double slack = tol * lmax / std::abs(den);
    if (l0 >= -slack && l1 >= -slack && l2 >= -slack) {
      return l0 * a.z + l1 * b.z + l2 * c.z;
    }
  }
  throw OffSurfaceError("no face above (" + std::to_string(x) + ", " + std::to_string(y) + ")");
}

std::pair<Terrain, int> insert_source(const Terrain& t, const Vec3& p) {
  const Location loc = locate(t, p);
  if (loc.kind == LocationKind::off_surface) {
    throw OffSurfaceError("source point is not on the terrain surface");
  }
  if (loc.kind == LocationKind::vertex) {
    Terrain out(t.vertices(), t.triangles(), loc.id);
    return {std::move(out), loc.id};
  }

  std::vector<Vec3> verts = t.vertices();
  std::vector<std::array<int, 3>> tris = t.triangles();
  const int nv = static_cast<int>(verts.size());
  verts.push_back(reconstruct(t, loc));

  if (loc.kind == LocationKind::face_interior) {
    const auto tri = tris[loc.id];
    tris[loc.id] = {tri[0], tri[1], nv};
    tris.push_back({tri[1], tri[2], nv});
    tris.push_back({tri[2], tri[0], nv});
  } else {
    const Edge& e = t.edges()[loc.id];
    for (int which = 0; which < 2; ++which) {
      const int f = e.faces[which];
      if (f < 0) continue;
      const auto tri = t.triangles()[f];
      for (int m = 0; m < 3; ++m) {
        const int i = tri[m], j = tri[(m + 1) % 3], k = tri[(m + 2) % 3];
        if ((i == e.a && j == e.b) || (i == e.b && j == e.a)) {
          tris[f] = {i, nv, k};
          tris.push_back({nv, j, k});
          break;
        }
      }
    }
  }
  Terrain out(std::move(verts), std::move(tris), nv);
  return {std::move(out), nv};
}

int highest_vertex(const Terrain& t) {
  int best = 0;
  for (int v = 1; v < t.vertex_count(); ++v) {
    if (t.height(v) > t.height(best)) best = v;
  }
  return best;
}

}  // namespace sdp
