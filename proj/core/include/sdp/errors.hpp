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

#include <stdexcept>
#include <string>

namespace sdp {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input data (bad JSON/OFF, non-finite coordinates, ...).
struct ParseError : Error {
  using Error::Error;
};

/// A vertex/edge/face/node index out of range.
struct IndexError : Error {
  using Error::Error;
};

/// A parameter outside its documented domain (e.g. epsilon not in (0,1]).
struct DomainError : Error {
  using Error::Error;
};

/// A query point that does not lie on the terrain surface.
struct OffSurfaceError : Error {
  using Error::Error;
};

/// No descending path exists to the requested target.
struct NoDescendingPathError : Error {
  using Error::Error;
};

/// A path that violates the structural preconditions of an operation.
struct MalformedPathError : Error {
  using Error::Error;
};

/// Two faces that were expected to share an edge do not.
struct NotAdjacentError : Error {
  using Error::Error;
};

/// A Location of the wrong kind for the requested operation.
struct WrongKindError : Error {
  using Error::Error;
};

}  // namespace sdp
