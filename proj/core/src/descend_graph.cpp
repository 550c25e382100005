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

#include "sdp/descend_graph.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "sdp/errors.hpp"

namespace sdp {

DescendGraph::DescendGraph(const Terrain& t, const Discretization& d, bool edge_chords)
    : t_(&t), d_(&d), edge_chords_(edge_chords) {
  face_nodes_.resize(t.face_count());
  for (int f = 0; f < t.face_count(); ++f) {
    auto& list = face_nodes_[f];
    for (int e : t.face_edge_ids(f)) {
      const auto& en = d.edge_nodes[e];
      list.insert(list.end(), en.begin(), en.end());
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

void DescendGraph::check_id(int x) const {
  if (x < 0 || x >= d_->node_count()) {
    throw IndexError("unknown node id " + std::to_string(x));
  }
}

bool DescendGraph::excluded_same_edge(const Node& nx, const Node& ny) const {
  if (nx.vertex >= 0 && ny.vertex >= 0) return false;  // two vertices are always fine
  if (nx.edge >= 0 && nx.edge == ny.edge) return true;
  if (nx.vertex >= 0) {
    const Edge& e = t_->edges()[ny.edge];
    return e.a == nx.vertex || e.b == nx.vertex;
  }
  if (ny.vertex >= 0) {
    const Edge& e = t_->edges()[nx.edge];
    return e.a == ny.vertex || e.b == ny.vertex;
  }
  return false;
}

bool DescendGraph::duplicate_face_pair(const Node& nx, const Node& ny, int fid) const {
  // Only two vertices joined by an edge share two faces; emit that link in
  // the lower-id face only.
  if (nx.vertex < 0 || ny.vertex < 0) return false;
  const int e = t_->find_edge(nx.vertex, ny.vertex);
  if (e < 0) return false;
  const Edge& ed = t_->edges()[e];
  return ed.faces[1] >= 0 && fid == std::max(ed.faces[0], ed.faces[1]);
}

bool DescendGraph::link_exists(int x, int y) const {
  check_id(x);
  check_id(y);
  if (x == y) return false;
  const Node &nx = d_->nodes[x], &ny = d_->nodes[y];
  if (edge_chords_) {
    // Consecutive nodes on one edge are linked when non-ascending.
    if (ny.height <= nx.height) {
      auto consecutive = [&](int e) {
        const auto& list = d_->edge_nodes[e];
        for (size_t i = 0; i + 1 < list.size(); ++i) {
          if ((list[i] == x && list[i + 1] == y) || (list[i] == y && list[i + 1] == x)) {
            return true;
          }
        }
        return false;
      };
      if (nx.edge >= 0 && nx.edge == ny.edge && consecutive(nx.edge)) return true;
      if (nx.vertex >= 0 && ny.edge >= 0 && consecutive(ny.edge)) return true;
      if (ny.vertex >= 0 && nx.edge >= 0 && consecutive(nx.edge)) return true;
    }
  }
  if (ny.height > nx.height) return false;
  if (excluded_same_edge(nx, ny)) return false;
  const auto fx = faces_of(x);
  const auto fy = faces_of(y);
  for (int a : fx) {
    for (int b : fy) {
      if (a == b) return true;
    }
  }
  return false;
}

std::vector<std::pair<int, double>> DescendGraph::out_neighbors(int x) const {
  std::vector<std::pair<int, double>> out;
  for_each_out_neighbor(x, [&](int y, double w) { out.emplace_back(y, w); });
  return out;
}

void DescendGraph::dump(std::ostream& os, bool dot) const {
  if (node_count() > 500) {
    throw DomainError("graph dump is limited to 500 nodes");
  }
  if (dot) {
    os << "digraph descend {\n";
    for (int x = 0; x < node_count(); ++x) {
      for_each_out_neighbor(x, [&](int y, double w) {
        os << "  n" << x << " -> n" << y << " [label=\"" << w << "\"];\n";
      });
    }
    os << "}\n";
  } else {
    os << "{\"links\": [";
    bool first = true;
    for (int x = 0; x < node_count(); ++x) {
      for_each_out_neighbor(x, [&](int y, double w) {
        os << (first ? "" : ",") << "[" << x << "," << y << "," << w << "]";
        first = false;
      });
    }
    os << "]}\n";
  }
}

}  // namespace sdp
