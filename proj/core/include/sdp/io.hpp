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

#include <iosfwd>
#include <optional>
#include <string>

#include "sdp/path.hpp"
#include "sdp/terrain.hpp"

namespace sdp {

enum class TerrainFormat { json, off };

/// Terrain JSON: {"vertices": [[x,y,z], ...], "triangles": [[i,j,k], ...],
/// "source": id?}. OFF: the standard ASCII format, triangular faces only.
/// Throws ParseError with position information, IndexError for bad indices.
Terrain load_terrain(std::istream& in, TerrainFormat format);

/// Loads from a file; the format defaults to the extension (.off -> OFF,
/// anything else JSON) unless given explicitly.
Terrain load_terrain_file(const std::string& path,
                          std::optional<TerrainFormat> format = std::nullopt);

void save_terrain(std::ostream& out, const Terrain& t, TerrainFormat format);
void save_terrain_file(const std::string& path, const Terrain& t,
                       std::optional<TerrainFormat> format = std::nullopt);

/// Path JSON: {"points": [[x,y,z], ...], "length": l?}. A missing length is
/// recomputed from the points.
Path load_path_json(std::istream& in);
void save_path_json(std::ostream& out, const Path& p);

}  // namespace sdp
