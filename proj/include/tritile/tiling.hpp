// Copyright 2026 The Tritile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tritile/arrangement.hpp"
#include "tritile/geometry.hpp"

namespace tritile {

// Simple polygon as a vertex cycle, counterclockwise.
using Polygon = std::vector<Point>;

Rational signed_area(const Polygon& poly);
// Strictly convex and counterclockwise (no three consecutive collinear).
bool is_strictly_convex(const Polygon& poly);

struct TilingPatch {
  std::vector<Triangle> tiles;  // index is the stable tile id
  std::optional<Polygon> region;
  std::vector<std::pair<std::string, std::string>> metadata;

  friend bool operator==(const TilingPatch&, const TilingPatch&) = default;
};

Rational total_area(const TilingPatch& p);

// TILING/1 text format.
TilingPatch parse_tiling(std::string_view text);
std::string serialize_tiling(const TilingPatch& p);

enum class ViolationKind {
  kEmpty,
  kOverlap,
  kEdgeConflict,    // an atomic edge with two tiles on the same side, or more than two tiles
  kUnmatchedEdge,   // single-tile atomic edge off the region boundary
  kAreaMismatch,
  kInvalidRegion,
  kNonSimpleBoundary,
  kHole,
  kDisconnected,
};

const char* to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::vector<TileId> tiles;
  std::optional<Point> vertex;
  std::string description;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  Polygon derived_region;  // empty unless the boundary is a single simple cycle

  bool has(ViolationKind k) const;
  std::string to_text() const;
};

ValidationReport validate_patch(const TilingPatch& p);

class TilingError : public std::runtime_error {
 public:
  TilingError(ViolationKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ViolationKind kind() const { return kind_; }

 private:
  ViolationKind kind_;
};

// Counterclockwise boundary polygon of the union, vertices only at direction
// changes, starting at the lexicographically smallest corner. Throws
// TilingError (kHole, kDisconnected, kNonSimpleBoundary, kEmpty).
Polygon derive_region(const TilingPatch& p);

// Directed boundary atomic edges (tile on the left) traced into cycles. Shared
// by validation, region derivation and hole filling.
struct BoundaryCycles {
  std::vector<std::vector<VertexId>> cycles;
  std::vector<Rational> signed_areas;
  std::vector<VertexId> pinch_vertices;  // more than one outgoing boundary edge
};

// `selected[t]` restricts the boundary to the union of the selected tiles;
// an edge is a boundary edge when exactly one incident tile is selected.
BoundaryCycles trace_boundary(const Arrangement& arr, const std::vector<bool>& selected);

struct SideLengthRange {
  Interval min;
  Interval max;
};

// Enclosures of the shortest and longest side over all tiles, each with
// relative width at most 2^-precision_bits.
SideLengthRange side_length_range(const TilingPatch& p, int precision_bits);

// x -> m * x + v
struct AffineMap {
  Rational m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  Rational v0 = 0, v1 = 0;

  Rational det() const { return m00 * m11 - m01 * m10; }
  Point operator()(const Point& p) const { return {m00 * p.x + m01 * p.y + v0, m10 * p.x + m11 * p.y + v1}; }
};

// Throws GeometryError on a singular matrix. Orientation reversing maps swap
// corners 1 and 2 of every tile and reverse the region so orientations are
// preserved.
TilingPatch apply_affine(const TilingPatch& p, const AffineMap& map);

}  // namespace tritile
