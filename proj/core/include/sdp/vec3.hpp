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

#include <algorithm>
#include <cmath>

namespace sdp {

/// A 3D point/vector. Heights are always the z coordinate.
struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double dist2(const Vec3& a, const Vec3& b) { return norm2(a - b); }
inline double dist(const Vec3& a, const Vec3& b) { return std::sqrt(dist2(a, b)); }

inline Vec3 lerp(const Vec3& a, const Vec3& b, double t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
}

/// Parameter in [0,1] of the point on segment ab closest to p.
inline double segment_param(const Vec3& p, const Vec3& a, const Vec3& b) {
  const double len2 = dist2(a, b);
  if (len2 == 0) return 0;
  return std::clamp(dot(p - a, b - a) / len2, 0.0, 1.0);
}

/// 3D distance from p to the closed segment ab.
inline double point_segment_dist(const Vec3& p, const Vec3& a, const Vec3& b) {
  return dist(p, lerp(a, b, segment_param(p, a, b)));
}

/// 3D distance from p to the closed triangle abc.
double point_triangle_dist(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace sdp
