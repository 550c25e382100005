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
// Acceptance suite: end-to-end checks of the solver guarantees on a fixed
// terrain battery. Prints one pass/fail line per criterion; the exit code is
// the number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sdp/descend_graph.hpp"
#include "sdp/discretize.hpp"
#include "sdp/errors.hpp"
#include "sdp/generators.hpp"
#include "sdp/oracle.hpp"
#include "sdp/query.hpp"
#include "sdp/sssp.hpp"
#include "sdp/terrain.hpp"

using namespace sdp;

namespace {

// Shared knobs for the battery. Criterion 5 compares each epsilon in
// kCoarse against epsilon/8, so the sweep carries both halves; kEps1 is the
// epsilon used for the feasibility/equivalence runs.
constexpr double kEps1 = 0.8;
const std::vector<double> kSweep{0.8, 0.4, 0.2, 0.1, 0.05, 0.025};
const std::vector<double> kCoarse{0.8, 0.4, 0.2};
constexpr int kTargetsPerTerrain = 50;
constexpr int kWalksPerTerrain = 100;

struct Criterion {
  std::string name;
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first reason
    pass = false;
  }
};

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::vector<Criterion> crit(11);  // 1-indexed

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

struct NamedTerrain {
  std::string name;
  Terrain t;
};

std::vector<NamedTerrain> build_battery() {
  std::vector<NamedTerrain> suite;
  suite.push_back({"ramp", make_ramp(1.0)});
  suite.push_back({"skinny(10)", make_skinny(10.0)});
  suite.push_back({"nearlevel(0.05)", make_nearlevel(0.05)});
  int idx = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed, ++idx) {
    const int rows = idx < 8 ? 3 : (idx < 14 ? 3 : 4);
    const int cols = idx < 8 ? 3 : 4;
    suite.push_back({"random(" + std::to_string(rows) + "x" + std::to_string(cols) +
                         ", seed " + std::to_string(seed) + ")",
                     make_random(rows, cols, seed)});
  }
  return suite;
}

std::vector<Vec3> pick_targets(const Terrain& t, std::mt19937_64& rng) {
  std::vector<Vec3> targets;
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  while (static_cast<int>(targets.size()) < kTargetsPerTerrain - 10) {
    const int f = static_cast<int>(rng() % t.face_count());
    double l0 = unit(rng), l1 = unit(rng);
    if (l0 + l1 > 0.95) {
      l0 = 0.95 - l0;
      l1 = 0.95 - l1;
    }
    if (l0 < 0.05 || l1 < 0.05 || 1 - l0 - l1 < 0.05) continue;
    const auto& tri = t.triangles()[f];
    targets.push_back(l0 * t.vertex(tri[0]) + l1 * t.vertex(tri[1]) +
                      (1 - l0 - l1) * t.vertex(tri[2]));
  }
  while (static_cast<int>(targets.size()) < kTargetsPerTerrain) {
    targets.push_back(t.vertex(static_cast<int>(rng() % t.vertex_count())));
  }
  return targets;
}

void check_node_bounds(const std::string& name, const Terrain& t, const Discretization& d) {
  for (int e = 0; e < t.edge_count(); ++e) {
    if (!(static_cast<double>(d.edge_nodes[e].size()) < d.node_bound)) {
      crit[4].fail(name + ": edge " + std::to_string(e) + " holds " +
                   std::to_string(d.edge_nodes[e].size()) + " nodes, bound " +
                   std::to_string(d.node_bound));
    }
  }
  if (!(static_cast<double>(d.node_count()) <= 3.0 * t.vertex_count() * d.node_bound)) {
    crit[4].fail(name + ": total node count exceeds 3*n*c");
  }
}

void check_lower_bound(const std::string& name, const Vec3& s, const Vec3& v, double length) {
  if (length < euclid_lower_bound(s, v) - 1e-9) {
    crit[7].fail(name + ": answer shorter than the straight-line bound");
  }
}

// Criterion 3 on one terrain: sampled descending walks, the snap bounds, and
// the solver-vs-snap comparison on each walk's snap-realizable prefix.
void run_snap_checks(const std::string& name, const Terrain& t, const GeomParams& gp,
                     const Discretization& d, const DescendGraph& g,
                     const ShortestPathTree& tree, int source, std::mt19937_64& rng) {
  const Discretization aux = discretize(t, gp, kEps1 / 16);
  const DescendGraph aux_graph(t, aux);
  const double disp_bound = d.delta * gp.sec_steepness + 1e-12;

  int sampled = 0;
  for (int attempt = 0; attempt < 3 * kWalksPerTerrain && sampled < kWalksPerTerrain;
       ++attempt) {
    const Path walk = sample_descending_path(t, aux, aux_graph, source, 12, rng);
    if (walk.points.size() < 2) continue;
    ++sampled;

    const SnapResult snap = snap_path(t, d, walk);
    if (!verify_descending(t, snap.snapped).pass) {
      crit[3].fail(name + ": snapped walk is not descending");
    }
    for (double disp : snap.displacement) {
      if (disp > disp_bound) crit[3].fail(name + ": snap displacement exceeds delta*sec");
    }

    // Longest prefix whose snapped interior nodes are linked in the graph.
    const size_t last = walk.points.size() - 1;
    size_t j = 1;
    int prev = snap.node_ids[0] >= 0 ? snap.node_ids[0] : source;
    while (j < last) {
      const int id = snap.node_ids[j];
      if (id < 0 || (id != prev && !g.link_exists(prev, id))) break;
      prev = id;
      ++j;
    }
    const Path trimmed =
        Path::from_points({walk.points.begin(), walk.points.begin() + j + 1});
    const SnapResult snap2 = snap_path(t, d, trimmed);
    try {
      const QueryAnswer ans = query(t, d, tree, trimmed.points.back());
      if (ans.length > snap2.snapped.length + 1e-9) {
        crit[3].fail(name + ": solver exceeds the snapped walk length");
      }
    } catch (const NoDescendingPathError&) {
      crit[3].fail(name + ": solver missed a target the snap construction reaches");
    }
  }
  if (sampled < kWalksPerTerrain) {
    crit[3].fail(name + ": could not sample enough descending walks");
  }
}

double crit1_seconds = 0;

void run_terrain(const std::string& name, const Terrain& base, std::mt19937_64& rng) {
  Terrain t = base;
  const int source = highest_vertex(t);
  const GeomParams gp = geometry_params(t);
  const std::vector<Vec3> targets = pick_targets(t, rng);
  const Vec3 spos = t.vertex(source);

  // Answer lengths per (target, epsilon) for the refinement criterion.
  std::map<double, std::vector<double>> lengths;  // +inf when infeasible

  ShortestPathTree dij_tree;
  const Discretization* d_eps1 = nullptr;
  Discretization d_store;

  for (double eps : kSweep) {
    const Discretization d = discretize(t, gp, eps);
    check_node_bounds(name, t, d);
    const DescendGraph g(t, d);
    const ShortestPathTree bush = bushwhack(g, source);

    auto& len = lengths[eps];
    len.assign(targets.size(), std::numeric_limits<double>::infinity());
    for (size_t ti = 0; ti < targets.size(); ++ti) {
      try {
        const QueryAnswer ans = query(t, d, bush, targets[ti]);
        len[ti] = ans.length;
        check_lower_bound(name, spos, targets[ti], ans.length);
      } catch (const NoDescendingPathError&) {
      }
    }

    if (eps == kEps1) {
      // Criterion 1: feasibility invariant, timed.
      Clock c1;
      dij_tree = dijkstra(g, source);
      int returned = 0;
      for (const Vec3& v : targets) {
        try {
          const QueryAnswer ans = query(t, d, dij_tree, v);
          ++returned;
          if (!verify_descending(t, ans.path).pass) {
            crit[1].fail(name + ": returned path failed verify_descending");
          }
        } catch (const NoDescendingPathError&) {
        }
      }
      crit1_seconds += c1.seconds();
      if (returned == 0) crit[1].fail(name + ": no target was reachable at all");

      // Criterion 6: identical distances.
      for (int v = 0; v < g.node_count(); ++v) {
        const bool ra = dij_tree.reachable(v), rb = bush.reachable(v);
        if (ra != rb) {
          crit[6].fail(name + ": reachability differs at node " + std::to_string(v));
          break;
        }
        if (ra && rel_gap(dij_tree.dist[v], bush.dist[v]) > 1e-9) {
          crit[6].fail(name + ": dist differs at node " + std::to_string(v));
          break;
        }
      }

      // Criterion 9: in-face query exactness at the source face's centroid.
      const int f = t.vertex_faces(source).front();
      const auto& tri = t.triangles()[f];
      const Vec3 centroid =
          (t.vertex(tri[0]) + t.vertex(tri[1]) + t.vertex(tri[2])) / 3.0;
      const QueryAnswer ans = query(t, d, dij_tree, centroid);
      const double expect = dist(spos, centroid);
      if (std::abs(ans.length - expect) > 1e-12 * std::max(1.0, expect)) {
        crit[9].fail(name + ": centroid query is not the straight segment");
      }

      // Criterion 3 rides on the eps1 structures.
      run_snap_checks(name, t, gp, d, g, dij_tree, source, rng);
      d_store = d;
      d_eps1 = &d_store;
    }
  }
  (void)d_eps1;

  // Criterion 5: len(eps) <= (1+eps) * len(eps/8) + 1e-9, and feasibility is
  // epsilon-independent.
  for (double eps : kCoarse) {
    const auto& coarse = lengths[eps];
    const auto& fine = lengths[eps / 8];
    for (size_t ti = 0; ti < targets.size(); ++ti) {
      const bool fc = std::isfinite(coarse[ti]), ff = std::isfinite(fine[ti]);
      if (fc != ff) {
        crit[5].fail(name + ": feasibility differs between eps and eps/8");
      } else if (fc && coarse[ti] > (1 + eps) * fine[ti] + 1e-9) {
        crit[5].fail(name + ": refinement factor violated at target " + std::to_string(ti));
      }
    }
  }
}

// Criterion 2: the exact two-face oracle against the solver.
void run_two_face() {
  // Part 1: the unit ramp at the prescribed epsilons.
  const Terrain ramp = make_ramp(1.0);
  const GeomParams gp = geometry_params(ramp);
  const double exact = std::sqrt(3.0);
  {
    const auto oracle = two_face_exact(ramp, ramp.vertex(0), ramp.vertex(3),
                                       ramp.find_edge(1, 2));
    if (!oracle || std::abs(oracle->length - exact) > 1e-9) {
      crit[2].fail("ramp: two_face_exact disagrees with sqrt(3)");
      return;
    }
  }
  for (double eps : {1.0, 0.5, 0.1, 0.05}) {
    const Discretization d = discretize(ramp, gp, eps);
    check_node_bounds("ramp eps=" + std::to_string(eps), ramp, d);
    const DescendGraph g(ramp, d);
    const ShortestPathTree tree = dijkstra(g, 0);
    const double len = tree.dist[3];
    if (!(len >= exact - 1e-9 && len <= (1 + eps) * exact + 1e-9)) {
      crit[2].fail("ramp eps=" + std::to_string(eps) + ": length outside the band");
    }
    check_lower_bound("ramp", ramp.vertex(0), ramp.vertex(3), len);
  }

  // Part 2: random two-face instances where the oracle applies.
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double eps = 0.5;
  int built = 0;
  for (int attempt = 0; attempt < 500 && built < 10; ++attempt) {
    const double z0 = 0.5 + 0.9 * unit(rng), z1 = 0.5 + 0.9 * unit(rng);
    const Vec3 p0{0, 0, z0};
    const Vec3 p1{1, 0.4 * (unit(rng) - 0.5), z1};
    const Vec3 p2{0.2 + 0.6 * unit(rng), 0.4 + 0.8 * unit(rng), 1.6 + unit(rng)};
    const Vec3 p3{0.2 + 0.6 * unit(rng), -0.4 - 0.8 * unit(rng), 0.45 * unit(rng)};
    Terrain t({p0, p1, p2, p3}, {{0, 1, 2}, {0, 3, 1}});
    if (!validate(t).ok()) continue;
    const auto oracle = two_face_exact(t, p2, p3, t.find_edge(0, 1));
    if (!oracle) continue;
    ++built;

    const GeomParams tgp = geometry_params(t);
    const Discretization d = discretize(t, tgp, eps);
    check_node_bounds("two-face", t, d);
    const DescendGraph g(t, d);
    const ShortestPathTree tree = dijkstra(g, 2);
    const double len = tree.dist[3];
    if (!(len >= oracle->length - 1e-9 && len <= (1 + eps) * oracle->length + 1e-9)) {
      crit[2].fail("two-face instance " + std::to_string(built) +
                   ": length outside the oracle band");
    }
    check_lower_bound("two-face", p2, p3, len);
  }
  if (built < 10) crit[2].fail("could not build 10 applicable two-face instances");
}

// Criterion 8: the staircase channel where a shortest descending path must
// thread three consecutive edges while losing almost no height. Plane
// placement provides equal-height nodes across those edges; the solver must
// find a path within (1+eps) of the snapped reference.
void run_channel_regression() {
  const Terrain t({{0, 2, 3.4},    // 0: upper rim, source
                   {0, 0, 0.4},    // 1: lower rim
                   {1, 2, 3.2},    // 2
                   {1, 0, 0.2},    // 3
                   {2, 2, 3.0},    // 4
                   {2, 0, 0.0}},   // 5
                  {{0, 1, 2}, {1, 3, 2}, {2, 3, 4}, {3, 5, 4}});
  if (!validate(t).ok()) {
    crit[8].fail("channel terrain failed validation");
    return;
  }
  const double eps = 0.2;
  const GeomParams gp = geometry_params(t);
  const Discretization d = discretize(t, gp, eps);
  const DescendGraph g(t, d);
  const ShortestPathTree tree = dijkstra(g, 0);

  const Vec3 v = 0.02 * t.vertex(3) + 0.08 * t.vertex(5) + 0.90 * t.vertex(4);

  // Hand reference path crossing the three interior edges near-level.
  auto on_edge = [&](int a, int b, double z) {
    const Vec3 &pa = t.vertex(a), &pb = t.vertex(b);
    return lerp(pa, pb, (z - pa.z) / (pb.z - pa.z));
  };
  const Path ref = Path::from_points(
      {t.vertex(0), on_edge(1, 2, 3.1), on_edge(2, 3, 3.0), on_edge(3, 4, 2.9), v});
  if (!verify_descending(t, ref).pass) {
    crit[8].fail("reference channel path is not descending");
    return;
  }
  const SnapResult snap = snap_path(t, d, ref);
  if (!verify_descending(t, snap.snapped).pass) {
    crit[8].fail("snapped channel reference is not descending");
  }

  try {
    const QueryAnswer ans = query(t, d, tree, v);
    if (!verify_descending(t, ans.path).pass) {
      crit[8].fail("channel answer failed verify_descending");
    }
    if (ans.length > (1 + eps) * snap.snapped.length + 1e-9) {
      crit[8].fail("channel answer exceeds (1+eps) * snap oracle length");
    }
  } catch (const NoDescendingPathError&) {
    crit[8].fail("no descending path found through the channel");
  }
}

// Criterion 10: node counts against the a + b/eps model.
void run_scaling_fit() {
  const Terrain t = make_ramp(1.0);
  const GeomParams gp = geometry_params(t);
  const std::vector<double> epsilons{1.0, 0.5, 0.25, 0.125};
  std::vector<double> counts;
  for (double eps : epsilons) {
    counts.push_back(static_cast<double>(discretize(t, gp, eps).node_count()));
  }
  // Least squares for counts ~ a + b/eps.
  double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (size_t i = 0; i < epsilons.size(); ++i) {
    const double x = 1.0 / epsilons[i], y = counts[i];
    s1 += 1;
    sx += x;
    sxx += x * x;
    sy += y;
    sxy += x * y;
  }
  const double det = s1 * sxx - sx * sx;
  const double a = (sxx * sy - sx * sxy) / det;
  const double b = (s1 * sxy - sx * sy) / det;
  double resid2 = 0, norm2 = 0;
  for (size_t i = 0; i < epsilons.size(); ++i) {
    const double pred = a + b / epsilons[i];
    resid2 += (pred - counts[i]) * (pred - counts[i]);
    norm2 += counts[i] * counts[i];
  }
  const double rel = std::sqrt(resid2 / norm2);
  if (!(rel < 0.10)) {
    crit[10].fail("relative residual " + std::to_string(rel) + " >= 0.10");
  }
  crit[10].detail = "relative residual " + std::to_string(rel);
}

}  // namespace

int main() {
  crit[1].name = "feasibility invariant (verify_descending on every returned path)";
  crit[2].name = "exact two-face oracle agreement";
  crit[3].name = "snap construction bounds and solver-vs-snap";
  crit[4].name = "per-edge and total node-count bounds";
  crit[5].name = "refinement factor len(eps) <= (1+eps) len(eps/8)";
  crit[6].name = "bushwhack distances equal dijkstra";
  crit[7].name = "straight-line lower bound";
  crit[8].name = "near-level channel regression";
  crit[9].name = "in-face query exactness";
  crit[10].name = "node-count scaling fits a + b/eps";

  Clock total;
  try {
    const auto battery = build_battery();
    for (size_t i = 0; i < battery.size(); ++i) {
      std::mt19937_64 rng(1000 + i);
      run_terrain(battery[i].name, battery[i].t, rng);
    }
    if (crit1_seconds >= 60.0) {
      crit[1].fail("criterion-1 runtime " + std::to_string(crit1_seconds) + "s >= 60s");
    } else if (crit[1].pass) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%zu terrains in %.1fs", battery.size(), crit1_seconds);
      crit[1].detail = buf;
    }
    run_two_face();
    run_channel_regression();
    run_scaling_fit();
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 99;
  }

  int failures = 0;
  for (int i = 1; i <= 10; ++i) {
    const bool pass = crit[i].pass;
    failures += pass ? 0 : 1;
    std::printf("criterion %2d: %s — %s%s%s\n", i, pass ? "PASS" : "FAIL",
                crit[i].name.c_str(), crit[i].detail.empty() ? "" : ": ",
                crit[i].detail.c_str());
  }
  std::printf("acceptance total: %.1fs, %d/10 passed\n", total.seconds(), 10 - failures);
  return failures;
}
