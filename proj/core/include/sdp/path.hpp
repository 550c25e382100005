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

#include <vector>

#include "sdp/vec3.hpp"

namespace sdp {

/// A polyline of surface points with its cached total length.
struct Path {
  std::vector<Vec3> points;
  double length = 0;
  /// Optional face id per segment (empty when unknown).
  std::vector<int> face_trace;

  static Path from_points(std::vector<Vec3> pts) {
    Path p;
    p.points = std::move(pts);
    for (size_t i = 1; i < p.points.size(); ++i) {
      p.length += dist(p.points[i - 1], p.points[i]);
    }
    return p;
  }
};

}  // namespace sdp
