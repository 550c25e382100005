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

#include "sdp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sdp/errors.hpp"

namespace sdp {

namespace {

using nlohmann::json;

Terrain terrain_from_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("terrain JSON: ") + e.what());
  }
  try {
    std::vector<Vec3> verts;
    for (const auto& v : doc.at("vertices")) {
      if (!v.is_array() || v.size() != 3) {
        throw ParseError("terrain JSON: vertex " + std::to_string(verts.size()) +
                         " is not an [x,y,z] triple");
      }
      verts.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
    }
    std::vector<std::array<int, 3>> tris;
    for (const auto& f : doc.at("triangles")) {
      if (!f.is_array() || f.size() != 3) {
        throw ParseError("terrain JSON: triangle " + std::to_string(tris.size()) +
                         " is not an [i,j,k] triple");
      }
      tris.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    std::optional<int> source;
    if (doc.contains("source") && !doc["source"].is_null()) {
      source = doc["source"].get<int>();
    }
    return Terrain(std::move(verts), std::move(tris), source);
  } catch (const json::exception& e) {
    throw ParseError(std::string("terrain JSON: ") + e.what());
  }
}

Terrain terrain_from_off(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_tokens = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return line;
    }
    throw ParseError("OFF: unexpected end of file at line " + std::to_string(lineno));
  };

  std::string header = next_tokens();
  {
    std::istringstream hs(header);
    std::string word;
    hs >> word;
    if (word != "OFF") throw ParseError("OFF: missing OFF header on line 1");
  }
  int nv = 0, nf = 0, ne = 0;
  {
    std::istringstream cs(next_tokens());
    if (!(cs >> nv >> nf >> ne) || nv < 0 || nf < 0) {
      throw ParseError("OFF: bad counts on line " + std::to_string(lineno));
    }
  }
  std::vector<Vec3> verts;
  verts.reserve(nv);
  for (int i = 0; i < nv; ++i) {
    std::istringstream vs(next_tokens());
    Vec3 v;
    if (!(vs >> v.x >> v.y >> v.z)) {
      throw ParseError("OFF: bad vertex on line " + std::to_string(lineno));
    }
    verts.push_back(v);
  }
  std::vector<std::array<int, 3>> tris;
  tris.reserve(nf);
  for (int i = 0; i < nf; ++i) {
    std::istringstream fs(next_tokens());
    int cnt = 0;
    if (!(fs >> cnt)) throw ParseError("OFF: bad face on line " + std::to_string(lineno));
    if (cnt != 3) {
      throw ParseError("OFF: face on line " + std::to_string(lineno) +
                       " has " + std::to_string(cnt) + " vertices; only triangles supported");
    }
    std::array<int, 3> f{};
    if (!(fs >> f[0] >> f[1] >> f[2])) {
      throw ParseError("OFF: bad face indices on line " + std::to_string(lineno));
    }
    tris.push_back(f);
  }
  return Terrain(std::move(verts), std::move(tris));
}

}  // namespace

Terrain load_terrain(std::istream& in, TerrainFormat format) {
  return format == TerrainFormat::json ? terrain_from_json(in) : terrain_from_off(in);
}

namespace {

TerrainFormat format_for(const std::string& path, std::optional<TerrainFormat> format) {
  if (format) return *format;
  const auto dotpos = path.rfind('.');
  if (dotpos != std::string::npos && path.substr(dotpos) == ".off") return TerrainFormat::off;
  return TerrainFormat::json;
}

}  // namespace

Terrain load_terrain_file(const std::string& path, std::optional<TerrainFormat> format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_terrain(in, format_for(path, format));
}

void save_terrain(std::ostream& out, const Terrain& t, TerrainFormat format) {
  if (format == TerrainFormat::json) {
    json doc;
    doc["vertices"] = json::array();
    for (const Vec3& v : t.vertices()) doc["vertices"].push_back({v.x, v.y, v.z});
    doc["triangles"] = json::array();
    for (const auto& f : t.triangles()) doc["triangles"].push_back({f[0], f[1], f[2]});
    if (t.source()) doc["source"] = *t.source();
    out << doc.dump(2) << "\n";
  } else {
    out << "OFF\n" << t.vertex_count() << " " << t.face_count() << " " << t.edge_count()
        << "\n";
    out.precision(17);
    for (const Vec3& v : t.vertices()) out << v.x << " " << v.y << " " << v.z << "\n";
    for (const auto& f : t.triangles()) out << "3 " << f[0] << " " << f[1] << " " << f[2]
                                            << "\n";
  }
}

void save_terrain_file(const std::string& path, const Terrain& t,
                       std::optional<TerrainFormat> format) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  save_terrain(out, t, format_for(path, format));
}

Path load_path_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("path JSON: ") + e.what());
  }
  try {
    std::vector<Vec3> pts;
    for (const auto& p : doc.at("points")) {
      if (!p.is_array() || p.size() != 3) {
        throw ParseError("path JSON: point " + std::to_string(pts.size()) +
                         " is not an [x,y,z] triple");
      }
      pts.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
    }
    Path path = Path::from_points(std::move(pts));
    if (doc.contains("length")) path.length = doc["length"].get<double>();
    return path;
  } catch (const json::exception& e) {
    throw ParseError(std::string("path JSON: ") + e.what());
  }
}

void save_path_json(std::ostream& out, const Path& p) {
  json doc;
  doc["points"] = json::array();
  for (const Vec3& q : p.points) doc["points"].push_back({q.x, q.y, q.z});
  doc["length"] = p.length;
  out << doc.dump(2) << "\n";
}

}  // namespace sdp
