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

#include "sdp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sdp/errors.hpp"
#include "sdp/query.hpp"

namespace sdp {

namespace {

bool on_face(const Terrain& t, int f, const Vec3& p, double tol) {
  const auto& tri = t.triangles()[f];
  return point_triangle_dist(p, t.vertex(tri[0]), t.vertex(tri[1]), t.vertex(tri[2])) <= tol;
}

}  // namespace

DescendReport verify_descending(const Terrain& t, const Path& p) {
  DescendReport report;
  const double height_tol = 1e-9;
  const double face_tol = 1e-9 * t.bbox_diag();

  for (size_t i = 0; i + 1 < p.points.size(); ++i) {
    const Vec3 &a = p.points[i], &b = p.points[i + 1];
    if (b.z > a.z + height_tol) {
      report.pass = false;
      report.segment = static_cast<int>(i);
      std::ostringstream os;
      os << "segment " << i << " ascends from z=" << a.z << " to z=" << b.z;
      report.reason = os.str();
      return report;
    }
    const Vec3 mid = lerp(a, b, 0.5);
    bool in_one_face = false;
    for (int f = 0; f < t.face_count() && !in_one_face; ++f) {
      in_one_face = on_face(t, f, a, face_tol) && on_face(t, f, b, face_tol) &&
                    on_face(t, f, mid, face_tol);
    }
    if (!in_one_face) {
      report.pass = false;
      report.segment = static_cast<int>(i);
      report.reason = "segment " + std::to_string(i) + " does not lie in any single face";
      return report;
    }
  }
  return report;
}

SnapResult snap_path(const Terrain& t, const Discretization& d, const Path& p) {
  SnapResult result;
  const size_t k = p.points.size();
  result.displacement.assign(k, 0.0);
  result.node_ids.assign(k, -1);

  std::vector<Vec3> snapped(p.points);
  for (size_t i = 0; i < k; ++i) {
    const Location loc = locate(t, p.points[i]);
    if (i == 0 || i + 1 == k) {  // endpoints stay put
      if (loc.kind == LocationKind::vertex) result.node_ids[i] = loc.id;
      continue;
    }
    if (loc.kind == LocationKind::vertex) {
      snapped[i] = t.vertex(loc.id);
      result.node_ids[i] = loc.id;  // vertices are nodes 0..n-1
      result.displacement[i] = dist(p.points[i], snapped[i]);
      continue;
    }
    if (loc.kind != LocationKind::edge_interior) {
      throw MalformedPathError("interior path point " + std::to_string(i) +
                               " is not on a terrain edge");
    }

    const int e = loc.id;
    const Edge& ed = t.edges()[e];
    const Vec3 &va = t.vertex(ed.a), &vb = t.vertex(ed.b);
    const Vec3 on_edge = lerp(va, vb, loc.edge_param);
    const auto& list = d.edge_nodes[e];
    auto param_of = [&](int id) {
      const Node& n = d.nodes[id];
      if (n.vertex < 0) return n.param;
      return n.vertex == ed.a ? 0.0 : 1.0;
    };

    // Nodes are sorted by parameter and heights vary monotonically along it,
    // so the nearest node at >= height is found by parameter alone.
    size_t idx;
    if (t.edge_is_level(e)) {
      // All nodes share the height; take the nearest by parameter.
      size_t lo = 0, hi = list.size() - 1;
      while (lo < hi) {
        const size_t m = (lo + hi) / 2;
        if (param_of(list[m]) < loc.edge_param) lo = m + 1;
        else hi = m;
      }
      idx = lo;
      if (idx > 0 && loc.edge_param - param_of(list[idx - 1]) <
                         param_of(list[idx]) - loc.edge_param) {
        idx = idx - 1;
      }
    } else {
      const bool ascends = vb.z > va.z;  // height vs parameter direction
      if (ascends) {
        size_t lo = 0, hi = list.size() - 1;
        while (lo < hi) {
          const size_t m = (lo + hi) / 2;
          if (param_of(list[m]) < loc.edge_param) lo = m + 1;
          else hi = m;
        }
        idx = lo;  // first node at parameter >= ours, i.e. nearest above
      } else {
        size_t lo = 0, hi = list.size() - 1;
        while (lo < hi) {
          const size_t m = (lo + hi + 1) / 2;
          if (param_of(list[m]) <= loc.edge_param) lo = m;
          else hi = m - 1;
        }
        idx = lo;  // last node at parameter <= ours
      }
    }
    const int id = list[idx];
    snapped[i] = d.nodes[id].pos;
    result.node_ids[i] = id;
    result.displacement[i] = dist(on_edge, snapped[i]);
  }

  std::vector<Vec3> deduped;
  deduped.reserve(snapped.size());
  for (const Vec3& q : snapped) {
    if (deduped.empty() || !(deduped.back() == q)) deduped.push_back(q);
  }
  result.snapped = Path::from_points(std::move(deduped));
  result.excess = result.snapped.length - p.length;
  return result;
}

std::optional<Path> two_face_exact(const Terrain& t, const Vec3& s, const Vec3& v,
                                   int shared_edge) {
  if (shared_edge < 0 || shared_edge >= t.edge_count()) {
    throw IndexError("unknown edge id " + std::to_string(shared_edge));
  }
  const Edge& e = t.edges()[shared_edge];
  const double tol = 1e-9 * t.bbox_diag();

  const int f0 = e.faces[0], f1 = e.faces[1];
  const bool s0 = f0 >= 0 && on_face(t, f0, s, tol);
  const bool s1 = f1 >= 0 && on_face(t, f1, s, tol);
  const bool v0 = f0 >= 0 && on_face(t, f0, v, tol);
  const bool v1 = f1 >= 0 && on_face(t, f1, v, tol);

  // Degenerate same-face case: the straight segment, when descending.
  if ((s0 && v0) || (s1 && v1)) {
    if (s.z >= v.z) return Path::from_points({s, v});
    return std::nullopt;
  }
  if (!((s0 && v1) || (s1 && v0))) {
    throw NotAdjacentError("s and v are not on faces sharing the given edge");
  }

  // Unfold about the shared edge: both faces mapped isometrically into a
  // plane with the edge on the x-axis and s, v on opposite sides.
  const Vec3 &a = t.vertex(e.a), &b = t.vertex(e.b);
  const double len = dist(a, b);
  if (len == 0) return std::nullopt;
  const Vec3 u = (b - a) / len;
  const double xs = dot(s - a, u), xv = dot(v - a, u);
  const double ys = norm((s - a) - u * xs);
  const double yv = norm((v - a) - u * xv);
  if (ys + yv == 0) return std::nullopt;

  const double cross_x = xs + (xv - xs) * (ys / (ys + yv));
  if (!(cross_x > 0 && cross_x < len)) return std::nullopt;

  const Vec3 q = lerp(a, b, cross_x / len);
  if (!(s.z >= q.z && q.z >= v.z)) return std::nullopt;
  return Path::from_points({s, q, v});
}

double RefineTable::length_of(int target, double epsilon) const {
  for (const auto& row : rows) {
    if (row.target == target && row.epsilon == epsilon) {
      return row.feasible ? row.length : std::numeric_limits<double>::infinity();
    }
  }
  return std::numeric_limits<double>::infinity();
}

RefineTable refine_study(const Terrain& t, int source_vertex, const std::vector<Vec3>& targets,
                         const std::vector<double>& epsilons, Solver solver) {
  for (size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0) || epsilons[i] > 1) {
      throw DomainError("epsilons must lie in (0, 1]");
    }
    if (i > 0 && epsilons[i] >= epsilons[i - 1]) {
      throw DomainError("epsilons must be strictly decreasing");
    }
  }
  if (source_vertex < 0 || source_vertex >= t.vertex_count()) {
    throw IndexError("source vertex out of range");
  }

  RefineTable table;
  const GeomParams gp = geometry_params(t);
  for (double eps : epsilons) {
    const Discretization d = discretize(t, gp, eps);
    const DescendGraph g(t, d);
    const ShortestPathTree tree = sdp::solve(g, source_vertex, solver);
    for (size_t ti = 0; ti < targets.size(); ++ti) {
      RefineRow row;
      row.target = static_cast<int>(ti);
      row.epsilon = eps;
      try {
        const QueryAnswer ans = query(t, d, tree, targets[ti]);
        row.feasible = true;
        row.length = ans.length;
      } catch (const NoDescendingPathError&) {
        row.feasible = false;
      }
      table.rows.push_back(row);
    }
  }

  for (size_t ti = 0; ti < targets.size(); ++ti) {
    for (size_t i = 0; i < epsilons.size(); ++i) {
      for (size_t j = i + 1; j < epsilons.size(); ++j) {
        const double li = table.length_of(static_cast<int>(ti), epsilons[i]);
        const double lj = table.length_of(static_cast<int>(ti), epsilons[j]);
        const bool fi = std::isfinite(li), fj = std::isfinite(lj);
        std::ostringstream os;
        if (fi != fj) {
          os << "target " << ti << ": feasibility differs between eps=" << epsilons[i]
             << " and eps=" << epsilons[j];
          table.violations.push_back(os.str());
        } else if (fi && li > (1 + epsilons[i]) * lj + 1e-9) {
          os << "target " << ti << ": len(" << epsilons[i] << ")=" << li << " > (1+eps)*len("
             << epsilons[j] << ")=" << (1 + epsilons[i]) * lj;
          table.violations.push_back(os.str());
        }
      }
    }
  }
  return table;
}

Path sample_descending_path(const Terrain& t, const Discretization& d, const DescendGraph& g,
                            int source_node, int max_steps, std::mt19937_64& rng) {
  std::vector<Vec3> points;
  std::vector<char> visited(d.node_count(), 0);
  int cur = source_node;
  visited[cur] = 1;
  points.push_back(d.nodes[cur].pos);

  const int steps = 1 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, max_steps)));
  std::vector<int> choices;
  for (int s = 0; s < steps; ++s) {
    choices.clear();
    g.for_each_out_neighbor(cur, [&](int y, double) {
      if (!visited[y]) choices.push_back(y);
    });
    if (choices.empty()) break;
    cur = choices[rng() % choices.size()];
    visited[cur] = 1;
    points.push_back(d.nodes[cur].pos);
  }

  // Usually finish with a face-interior endpoint below the last node.
  const auto faces = g.faces_of(cur);
  const int f = faces[rng() % faces.size()];
  const auto& tri = t.triangles()[f];
  const double hcur = d.nodes[cur].height;
  for (int attempt = 0; attempt < 64; ++attempt) {
    double l0 = std::uniform_real_distribution<>(0.02, 0.98)(rng);
    double l1 = std::uniform_real_distribution<>(0.02, 0.98)(rng);
    if (l0 + l1 > 0.98) {
      l0 = 0.98 - l0;
      l1 = 0.98 - l1;
    }
    const double l2 = 1.0 - l0 - l1;
    if (l0 < 0.02 || l1 < 0.02 || l2 < 0.02) continue;
    const Vec3 q = l0 * t.vertex(tri[0]) + l1 * t.vertex(tri[1]) + l2 * t.vertex(tri[2]);
    if (q.z <= hcur && !(q == points.back())) {
      points.push_back(q);
      break;
    }
  }
  return Path::from_points(std::move(points));
}

}  // namespace sdp
