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

#include <cstdint>

#include "sdp/terrain.hpp"

namespace sdp {

/// The two-face ramp: a unit square strip dropping from z = scale to 0
/// across the diagonal edge. scale = 1 gives vertices (0,0,1), (1,0,1),
/// (0,1,0), (1,1,0) with faces 012 and 132.
Terrain make_ramp(double scale = 1.0);

/// A ramp stretched along x so that longest_edge / clearance >= aspect.
/// Requires aspect >= 1.
Terrain make_skinny(double aspect);

/// A three-band strip whose middle band is tilted only `tilt` radians from
/// horizontal while the outer bands stay steep, so sec(steepness) >=
/// 1/sin(tilt) without skinny faces. Requires tilt in (0, pi/2).
Terrain make_nearlevel(double tilt);

/// Terraced random terrain: a jittered rows x cols grid, Delaunay-style
/// diagonal choice per cell, and heights snapped to a small set of exact
/// levels so every edge is either exactly level or decently steep.
/// Deterministic for identical (rows, cols, seed).
Terrain make_random(int rows, int cols, std::uint64_t seed);

}  // namespace sdp
