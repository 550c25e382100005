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

#include "sdp/generators.hpp"

#include <cmath>
#include <random>
#include <string>

#include "sdp/errors.hpp"

namespace sdp {

Terrain make_ramp(double scale) {
  if (!(scale > 0)) throw DomainError("ramp scale must be positive");
  const double s = scale;
  return Terrain({{0, 0, s}, {s, 0, s}, {0, s, 0}, {s, s, 0}},
                 {{0, 1, 2}, {1, 3, 2}});
}

Terrain make_skinny(double aspect) {
  if (!(aspect >= 1)) throw DomainError("skinny aspect must be >= 1");
  // Stretching by 2*aspect along x gives longest_edge / clearance
  // = sqrt(2)*aspect + O(1/aspect) >= aspect.
  const double w = 2.0 * aspect;
  return Terrain({{0, 0, 1}, {w, 0, 1}, {0, 1, 0}, {w, 1, 0}},
                 {{0, 1, 2}, {1, 3, 2}});
}

Terrain make_nearlevel(double tilt) {
  if (!(tilt > 0) || !(tilt < std::asin(1.0))) {
    throw DomainError("nearlevel tilt must be in (0, pi/2)");
  }
  // Bands along y: steep drop, near-level middle (drop tan(tilt) over unit
  // length), steep drop. Faces stay well shaped so the geometry factor is
  // dominated by sec(steepness) alone.
  const double drop = std::tan(tilt);
  const double z0 = 2.0 + drop;
  std::vector<Vec3> v;
  const double zs[4] = {z0, 1.0 + drop, 1.0, 0.0};
  for (int row = 0; row < 4; ++row) {
    v.push_back({0, static_cast<double>(row), zs[row]});
    v.push_back({1, static_cast<double>(row), zs[row]});
  }
  std::vector<std::array<int, 3>> tris;
  for (int row = 0; row < 3; ++row) {
    const int a = 2 * row, b = 2 * row + 1, c = 2 * row + 2, d = 2 * row + 3;
    tris.push_back({a, b, c});
    tris.push_back({b, d, c});
  }
  return Terrain(std::move(v), std::move(tris));
}

Terrain make_random(int rows, int cols, std::uint64_t seed) {
  if (rows < 2 || cols < 2) throw DomainError("random terrain needs rows, cols >= 2");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const double spacing = 1.0 / (std::max(rows, cols) - 1);
  const double jitter = 0.22 * spacing;
  // Two exact terrace levels, step steep relative to the grid spacing.
  const double step = 1.4 * spacing;

  // A smooth seeded field thresholded into levels keeps the terraces
  // contiguous instead of salt-and-pepper.
  const double fa = 1.5 + 3.0 * unit(rng);
  const double fb = 1.5 + 3.0 * unit(rng);
  const double phase = 6.283185307179586 * unit(rng);
  const int levels = 2 + static_cast<int>(rng() % 2);  // 2 or 3 terraces

  std::vector<Vec3> verts;
  verts.reserve(static_cast<size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      double x = c * spacing, y = r * spacing;
      if (r > 0 && r + 1 < rows) y += jitter * (2 * unit(rng) - 1);
      if (c > 0 && c + 1 < cols) x += jitter * (2 * unit(rng) - 1);
      const double field =
          std::sin(fa * 6.0 * x + phase) + std::cos(fb * 6.0 * y) + 1.6 * (1.0 - x - y);
      int level = static_cast<int>(std::floor((field + 3.0) / 6.0 * (levels + 1)));
      level = std::clamp(level, 0, levels);
      verts.push_back({x, y, step * level});
    }
  }

  std::vector<std::array<int, 3>> tris;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      const int p00 = id(r, c), p01 = id(r, c + 1), p10 = id(r + 1, c), p11 = id(r + 1, c + 1);
      // Delaunay-style diagonal: pick the shorter xy-diagonal.
      const double d0 = std::hypot(verts[p00].x - verts[p11].x, verts[p00].y - verts[p11].y);
      const double d1 = std::hypot(verts[p01].x - verts[p10].x, verts[p01].y - verts[p10].y);
      if (d0 <= d1) {
        tris.push_back({p00, p01, p11});
        tris.push_back({p00, p11, p10});
      } else {
        tris.push_back({p00, p01, p10});
        tris.push_back({p01, p11, p10});
      }
    }
  }
  return Terrain(std::move(verts), std::move(tris));
}

}  // namespace sdp
