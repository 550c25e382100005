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

#include "sdp/sssp.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "sdp/errors.hpp"

namespace sdp {

ShortestPathTree dijkstra(const DescendGraph& g, int source) {
  const int n = g.node_count();
  if (source < 0 || source >= n) {
    throw IndexError("unknown source node id " + std::to_string(source));
  }

  ShortestPathTree tree;
  tree.root = source;
  tree.dist.assign(n, std::numeric_limits<double>::infinity());
  tree.parent.assign(n, -1);
  std::vector<char> settled(n, 0);

  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  tree.dist[source] = 0;
  heap.push({0.0, source});

  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    tree.settle_order.push_back(u);
    g.for_each_out_neighbor(u, [&](int y, double w) {
      const double nd = du + w;
      if (nd < tree.dist[y]) {
        tree.dist[y] = nd;
        tree.parent[y] = u;
        heap.push({nd, y});
      }
    });
  }
  return tree;
}

ShortestPathTree solve(const DescendGraph& g, int source, Solver solver) {
  return solver == Solver::dijkstra ? dijkstra(g, source) : bushwhack(g, source);
}

Path extract_path(const Discretization& d, const ShortestPathTree& tree, int target) {
  if (target < 0 || target >= static_cast<int>(tree.dist.size())) {
    throw IndexError("unknown target node id " + std::to_string(target));
  }
  if (!tree.reachable(target)) {
    throw NoDescendingPathError("no descending path to node " + std::to_string(target));
  }
  std::vector<int> chain;
  for (int v = target; v >= 0; v = tree.parent[v]) chain.push_back(v);
  std::reverse(chain.begin(), chain.end());

  Path p;
  p.points.reserve(chain.size());
  for (size_t i = 0; i < chain.size(); ++i) {
    p.points.push_back(d.nodes[chain[i]].pos);
    // Same left-to-right accumulation as the solver's dist values.
    if (i > 0) p.length += dist(p.points[i - 1], p.points[i]);
  }
  return p;
}

}  // namespace sdp
