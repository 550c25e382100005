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

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "sdp/errors.hpp"
#include "sdp/sssp.hpp"

namespace sdp {

namespace {

// A settled node acting as a source for one (face, target edge) pair. Its
// claim is the index range [lo, hi) of the target node sequence; the cursor
// (nl, nr) walks the claim outward from the nearest index.
struct Owner {
  int node = -1;
  int pair = -1;
  int group = -1;
  int serial = -1;
  int lo = 0, hi = 0;
  int nl = -1, nr = 0;
  int pending = -1;
  bool club = false;  // dominates every target height; participates in claims
};

struct PairState {
  int face = -1;
  int target_edge = -1;
  const std::vector<int>* seq = nullptr;
  double hmax = 0;
  bool level = false;
  bool heights_ascend = false;
  // Source groups: 0/1 the two other edges of the face (ascending edge id),
  // 2 the face's vertices.
  std::array<int, 2> src_edges{{-1, -1}};
  std::array<std::map<double, int>, 2> edge_club;  // param along source edge -> owner
  std::vector<int> vertex_club;
};

struct Range {
  int lo = 0, hi = 0;
  bool empty() const { return lo >= hi; }
};

class Bushwhack {
 public:
  Bushwhack(const DescendGraph& g, int source, const BushwhackOptions& opt)
      : g_(g), d_(g.discretization()), t_(g.terrain()), opt_(opt), source_(source) {}

  ShortestPathTree run();

 private:
  const Node& node(int id) const { return d_.nodes[id]; }
  double target_height(const PairState& p, int i) const { return node((*p.seq)[i]).height; }

  void build_pairs();
  Range feasible_range(const PairState& p, double h) const;
  Range win_range(const PairState& p, const Vec3& apos, int aserial, const Vec3& bpos,
                  int bserial) const;
  bool beats(const PairState& p, int i, const Vec3& apos, int aserial, const Vec3& bpos,
             int bserial) const;

  void settle(int y, double dy, int from);
  void add_source(int u);
  void insert_owner(int pair_id, int group, int u);
  void advance(int oi);
  bool still_mine(const Owner& o, int i) const;
  bool offer_excluded(int u, int y) const;
  void snapshot();

  const DescendGraph& g_;
  const Discretization& d_;
  const Terrain& t_;
  BushwhackOptions opt_;
  int source_;

  std::vector<PairState> pairs_;
  std::vector<Owner> owners_;
  std::vector<std::vector<int>> waiters_;
  std::vector<char> settled_;
  ShortestPathTree tree_;
  int serial_ = 0;

  using HeapEntry = std::tuple<double, int, int>;  // key, node, predecessor
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap_;
};

void Bushwhack::build_pairs() {
  pairs_.resize(3 * t_.face_count());
  for (int f = 0; f < t_.face_count(); ++f) {
    const auto& fe = t_.face_edge_ids(f);
    for (int k = 0; k < 3; ++k) {
      PairState& p = pairs_[3 * f + k];
      p.face = f;
      p.target_edge = fe[k];
      p.seq = &d_.edge_nodes[fe[k]];
      const double h0 = node(p.seq->front()).height;
      const double h1 = node(p.seq->back()).height;
      p.level = t_.edge_is_level(fe[k]);
      p.hmax = std::max(h0, h1);
      p.heights_ascend = h1 > h0;
      int s0 = fe[(k + 1) % 3], s1 = fe[(k + 2) % 3];
      if (s0 > s1) std::swap(s0, s1);
      p.src_edges = {s0, s1};
    }
  }
}

Range Bushwhack::feasible_range(const PairState& p, double h) const {
  const int n = static_cast<int>(p.seq->size());
  if (p.level) {
    return h >= p.hmax ? Range{0, n} : Range{0, 0};
  }
  if (p.heights_ascend) {
    // Feasible targets form a prefix.
    int lo = 0, hi = n;
    while (lo < hi) {
      const int m = (lo + hi) / 2;
      if (target_height(p, m) <= h) lo = m + 1;
      else hi = m;
    }
    return Range{0, lo};
  }
  int lo = 0, hi = n;
  while (lo < hi) {
    const int m = (lo + hi) / 2;
    if (target_height(p, m) > h) lo = m + 1;
    else hi = m;
  }
  return Range{lo, n};
}

bool Bushwhack::beats(const PairState& p, int i, const Vec3& apos, int aserial,
                      const Vec3& bpos, int bserial) const {
  const Vec3& y = node((*p.seq)[i]).pos;
  const double da = dist2(apos, y), db = dist2(bpos, y);
  if (da != db) return da < db;
  return aserial < bserial;  // ties go to the earlier-settled owner
}

// Index range of the target sequence where a beats b. The squared-distance
// difference is affine along the edge, so the winner flips at most once.
Range Bushwhack::win_range(const PairState& p, const Vec3& apos, int aserial,
                           const Vec3& bpos, int bserial) const {
  const int n = static_cast<int>(p.seq->size());
  const bool w0 = beats(p, 0, apos, aserial, bpos, bserial);
  const bool w1 = beats(p, n - 1, apos, aserial, bpos, bserial);
  if (w0 && w1) return Range{0, n};
  if (!w0 && !w1) return Range{0, 0};
  int lo = 0, hi = n - 1;
  // Invariant: predicate differs between lo and hi.
  while (lo + 1 < hi) {
    const int m = (lo + hi) / 2;
    if (beats(p, m, apos, aserial, bpos, bserial) == w0) lo = m;
    else hi = m;
  }
  return w0 ? Range{0, hi} : Range{hi, n};
}

bool Bushwhack::offer_excluded(int u, int y) const {
  // A Steiner source must not link to the endpoint vertices of its own edge.
  const Node& nu = node(u);
  if (nu.vertex >= 0) return false;
  const Node& ny = node(y);
  if (ny.vertex < 0) return false;
  const Edge& e = t_.edges()[nu.edge];
  return e.a == ny.vertex || e.b == ny.vertex;
}

bool Bushwhack::still_mine(const Owner& o, int i) const {
  const PairState& p = pairs_[o.pair];
  const Vec3& mypos = node(o.node).pos;
  auto lose_to = [&](int other_oi) {
    const Owner& other = owners_[other_oi];
    return !beats(p, i, mypos, o.serial, node(other.node).pos, other.serial);
  };
  if (o.group < 2) {
    const auto& club = p.edge_club[o.group];
    const auto it = club.find(node(o.node).param);
    assert(it != club.end());
    if (it != club.begin() && lose_to(std::prev(it)->second)) return false;
    const auto nx = std::next(it);
    if (nx != club.end() && lose_to(nx->second)) return false;
    return true;
  }
  for (int other_oi : p.vertex_club) {
    if (other_oi != static_cast<int>(&o - owners_.data()) && lose_to(other_oi)) return false;
  }
  return true;
}

void Bushwhack::insert_owner(int pair_id, int group, int u) {
  PairState& p = pairs_[pair_id];
  const Node& nu = node(u);
  const Range feas = feasible_range(p, nu.height);
  const bool club = nu.height >= p.hmax;
  if (feas.empty() && !club) return;

  const int oi = static_cast<int>(owners_.size());
  Owner o;
  o.node = u;
  o.pair = pair_id;
  o.group = group;
  o.serial = serial_++;
  o.club = club;

  Range claim = club ? Range{0, static_cast<int>(p.seq->size())} : feas;
  if (club) {
    if (group < 2) {
      auto& club_map = p.edge_club[group];
      const auto [it, inserted] = club_map.emplace(nu.param, oi);
      assert(inserted);
      if (it != club_map.begin()) {
        const Owner& nb = owners_[std::prev(it)->second];
        const Range w = win_range(p, nu.pos, o.serial, node(nb.node).pos, nb.serial);
        claim.lo = std::max(claim.lo, w.lo);
        claim.hi = std::min(claim.hi, w.hi);
      }
      if (const auto nx = std::next(it); nx != club_map.end()) {
        const Owner& nb = owners_[nx->second];
        const Range w = win_range(p, nu.pos, o.serial, node(nb.node).pos, nb.serial);
        claim.lo = std::max(claim.lo, w.lo);
        claim.hi = std::min(claim.hi, w.hi);
      }
    } else {
      for (int other_oi : p.vertex_club) {
        const Owner& nb = owners_[other_oi];
        const Range w = win_range(p, nu.pos, o.serial, node(nb.node).pos, nb.serial);
        claim.lo = std::max(claim.lo, w.lo);
        claim.hi = std::min(claim.hi, w.hi);
      }
      p.vertex_club.push_back(oi);
    }
  }

  o.lo = claim.lo;
  o.hi = std::max(claim.lo, claim.hi);
  if (o.lo < o.hi) {
    // Cursor starts at the index nearest the owner; distances are convex
    // along the sequence.
    int a = o.lo, b = o.hi - 1;
    while (a < b) {
      const int m = (a + b) / 2;
      if (dist2(nu.pos, node((*p.seq)[m]).pos) <= dist2(nu.pos, node((*p.seq)[m + 1]).pos)) {
        b = m;
      } else {
        a = m + 1;
      }
    }
    o.nr = a;
    o.nl = a - 1;
  }
  owners_.push_back(o);
  advance(oi);
}

void Bushwhack::advance(int oi) {
  Owner& o = owners_[oi];
  o.pending = -1;
  if (o.lo >= o.hi) return;
  const PairState& p = pairs_[o.pair];
  const Vec3& up = node(o.node).pos;
  const double du = tree_.dist[o.node];
  while (true) {
    const bool left_ok = o.nl >= o.lo;
    const bool right_ok = o.nr < o.hi;
    if (!left_ok && !right_ok) return;
    int i;
    if (left_ok && right_ok) {
      const double dl = dist2(up, node((*p.seq)[o.nl]).pos);
      const double dr = dist2(up, node((*p.seq)[o.nr]).pos);
      i = dr <= dl ? o.nr : o.nl;
    } else {
      i = left_ok ? o.nl : o.nr;
    }
    if (i == o.nl) --o.nl;
    else ++o.nr;

    const int y = (*p.seq)[i];
    if (settled_[y]) continue;
    if (offer_excluded(o.node, y)) continue;
    if (opt_.claims == BushwhackOptions::Claims::pruned && o.club && !still_mine(o, i)) {
      continue;
    }
    heap_.push({du + dist(up, node(y).pos), y, o.node});
    o.pending = y;
    waiters_[y].push_back(oi);
    return;
  }
}

void Bushwhack::add_source(int u) {
  const Node& nu = node(u);
  if (nu.vertex >= 0) {
    for (int f : t_.vertex_faces(nu.vertex)) {
      const auto& fe = t_.face_edge_ids(f);
      for (int k = 0; k < 3; ++k) {
        const Edge& te = t_.edges()[fe[k]];
        if (te.a != nu.vertex && te.b != nu.vertex) {
          insert_owner(3 * f + k, 2, u);
        }
      }
    }
    return;
  }
  const Edge& e = t_.edges()[nu.edge];
  for (int f : e.faces) {
    if (f < 0) continue;
    const auto& fe = t_.face_edge_ids(f);
    for (int k = 0; k < 3; ++k) {
      if (fe[k] == nu.edge) continue;
      const int pair_id = 3 * f + k;
      PairState& p = pairs_[pair_id];
      const int group = p.src_edges[0] == nu.edge ? 0 : 1;
      assert(p.src_edges[group] == nu.edge);
      insert_owner(pair_id, group, u);
    }
  }
}

void Bushwhack::settle(int y, double dy, int from) {
  settled_[y] = 1;
  tree_.dist[y] = dy;
  tree_.parent[y] = from;
  tree_.settle_order.push_back(y);
  if (opt_.trace && opt_.trace_every > 0 &&
      static_cast<int>(tree_.settle_order.size()) % opt_.trace_every == 0) {
    snapshot();
  }
  std::vector<int> woken;
  woken.swap(waiters_[y]);
  for (int oi : woken) {
    assert(owners_[oi].pending == y);
    advance(oi);
  }
  add_source(y);
}

void Bushwhack::snapshot() {
  std::vector<BushwhackTrace::PairSnapshot> snap;
  for (const PairState& p : pairs_) {
    for (int group = 0; group < 2; ++group) {
      const auto& club = p.edge_club[group];
      if (club.empty()) continue;
      BushwhackTrace::PairSnapshot ps;
      ps.face = p.face;
      ps.source_edge = p.src_edges[group];
      ps.target_edge = p.target_edge;
      const int n = static_cast<int>(p.seq->size());
      std::vector<std::pair<Range, int>> cells;
      for (const auto& [param, oi] : club) {
        const Owner& o = owners_[oi];
        Range cell{0, n};
        auto it = club.find(param);
        auto clip = [&](int other_oi) {
          const Owner& nb = owners_[other_oi];
          const Range w =
              win_range(p, node(o.node).pos, o.serial, node(nb.node).pos, nb.serial);
          cell.lo = std::max(cell.lo, w.lo);
          cell.hi = std::min(cell.hi, w.hi);
        };
        if (it != club.begin()) clip(std::prev(it)->second);
        if (const auto nx = std::next(it); nx != club.end()) clip(nx->second);
        if (!cell.empty()) cells.emplace_back(cell, o.node);
      }
      std::sort(cells.begin(), cells.end(),
                [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
      for (const auto& [cell, owner_node] : cells) {
        // Report maximal unsettled runs within the cell.
        int run_start = -1;
        for (int i = cell.lo; i <= cell.hi; ++i) {
          const bool live = i < cell.hi && !settled_[(*p.seq)[i]];
          if (live && run_start < 0) run_start = i;
          if (!live && run_start >= 0) {
            ps.intervals.push_back({owner_node, run_start, i});
            run_start = -1;
          }
        }
      }
      if (!ps.intervals.empty()) snap.push_back(std::move(ps));
    }
  }
  opt_.trace->snapshots.push_back(std::move(snap));
}

ShortestPathTree Bushwhack::run() {
  const int n = g_.node_count();
  if (source_ < 0 || source_ >= n) {
    throw IndexError("unknown source node id " + std::to_string(source_));
  }
  if (g_.edge_chords()) {
    // Chord links break the pairwise interval structure; fall back.
    return dijkstra(g_, source_);
  }
  build_pairs();
  tree_.root = source_;
  tree_.dist.assign(n, std::numeric_limits<double>::infinity());
  tree_.parent.assign(n, -1);
  settled_.assign(n, 0);
  waiters_.resize(n);
  owners_.reserve(64);

  settle(source_, 0.0, -1);
  while (!heap_.empty()) {
    const auto [key, y, from] = heap_.top();
    heap_.pop();
    if (settled_[y]) continue;
    settle(y, key, from);
  }
  return tree_;
}

}  // namespace

ShortestPathTree bushwhack(const DescendGraph& g, int source, const BushwhackOptions& options) {
  return Bushwhack(g, source, options).run();
}

}  // namespace sdp
