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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "tritile/geometry.hpp"

namespace tritile {

using TileId = std::size_t;
using VertexId = std::size_t;

// Side `index` of tile `tile`, running from corner index to corner index+1.
struct SideRef {
  TileId tile = 0;
  int index = 0;

  friend auto operator<=>(const SideRef&, const SideRef&) = default;
};

// Supporting line a*x + b*y = c, scaled so the first nonzero of (a, b) is 1.
struct LineKey {
  Rational a;
  Rational b;
  Rational c;

  static LineKey through(const Point& p, const Point& q);
  friend bool operator<(const LineKey& l, const LineKey& r);
  friend bool operator==(const LineKey& l, const LineKey& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
};

// A tile side lying on a support line. `half` is +1 when the tile is on the
// left of the line's canonical direction, -1 when on the right.
struct LineSide {
  SideRef side;
  int half = 0;
  std::size_t lo = 0;  // index into SupportLine::points
  std::size_t hi = 0;
};

struct EdgeIncidence {
  SideRef side;
  int half = 0;
};

// Maximal piece of a side with no vertex in its relative interior.
struct AtomicEdge {
  VertexId from = 0;  // lower line parameter
  VertexId to = 0;
  std::size_t line = 0;
  std::size_t pos = 0;  // points[pos] .. points[pos + 1] on the line
  std::vector<EdgeIncidence> incidences;
};

struct SupportLine {
  LineKey key;
  // Points are ordered by x, or by y when the line is vertical; the
  // canonical direction is the direction of increasing parameter.
  bool by_x = true;
  std::vector<VertexId> points;
  std::vector<LineSide> sides;       // sorted by (lo, half)
  std::vector<std::size_t> edges;    // atomic edge ids, increasing pos
};

// Sides of a set of triangles cut at every tile corner lying on them. This is
// the combinatorial skeleton shared by validation, the incidence graph and
// the stretch analysis. It is well defined for any tile set, valid or not.
struct Arrangement {
  std::vector<Point> vertices;                      // lexicographic order
  std::vector<std::array<VertexId, 3>> tile_corners;
  std::vector<std::vector<TileId>> corner_of;       // per vertex
  std::vector<std::vector<SideRef>> interior_of;    // sides containing the vertex in their interior
  std::vector<SupportLine> lines;                   // sorted by key
  std::vector<AtomicEdge> edges;
  std::vector<std::array<std::size_t, 3>> side_line;  // per tile, per side

  std::size_t tile_count() const { return tile_corners.size(); }
  VertexId vertex_id(const Point& p) const;  // throws std::out_of_range
  const LineSide& line_side(SideRef s) const;
  // Tiles with p as a corner or on the relative interior of one of their sides.
  std::vector<TileId> tiles_touching(VertexId v) const;
};

Arrangement build_arrangement(std::span<const Triangle> tiles);

}  // namespace tritile
