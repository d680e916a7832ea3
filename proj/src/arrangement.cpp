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

#include "tritile/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace tritile {
namespace {

int cmp_param(const Point& a, const Point& b, bool by_x) {
  return by_x ? cmp(a.x, b.x) : cmp(a.y, b.y);
}

struct DoublePoint {
  double x;
  double y;
};

}  // namespace

LineKey LineKey::through(const Point& p, const Point& q) {
  Rational a = q.y - p.y;
  Rational b = p.x - q.x;
  Rational c = a * p.x + b * p.y;
  const Rational scale = a != 0 ? a : b;
  a /= scale;
  b /= scale;
  c /= scale;
  return {a, b, c};
}

bool operator<(const LineKey& l, const LineKey& r) {
  if (int c = cmp(l.a, r.a); c != 0) return c < 0;
  if (int c = cmp(l.b, r.b); c != 0) return c < 0;
  return l.c < r.c;
}

VertexId Arrangement::vertex_id(const Point& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) throw std::out_of_range("not a vertex: " + to_string(p));
  return static_cast<VertexId>(it - vertices.begin());
}

const LineSide& Arrangement::line_side(SideRef s) const {
  const SupportLine& line = lines[side_line[s.tile][static_cast<std::size_t>(s.index)]];
  for (const LineSide& ls : line.sides) {
    if (ls.side == s) return ls;
  }
  throw std::logic_error("side missing from its support line");
}

std::vector<TileId> Arrangement::tiles_touching(VertexId v) const {
  std::vector<TileId> out = corner_of[v];
  for (const SideRef& s : interior_of[v]) out.push_back(s.tile);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Arrangement build_arrangement(std::span<const Triangle> tiles) {
  Arrangement arr;

  for (const Triangle& t : tiles) {
    for (const Point& p : t.corners()) arr.vertices.push_back(p);
  }
  std::sort(arr.vertices.begin(), arr.vertices.end());
  arr.vertices.erase(std::unique(arr.vertices.begin(), arr.vertices.end()), arr.vertices.end());
  const std::size_t nv = arr.vertices.size();
  arr.corner_of.resize(nv);
  arr.interior_of.resize(nv);

  arr.tile_corners.reserve(tiles.size());
  for (TileId t = 0; t < tiles.size(); ++t) {
    std::array<VertexId, 3> ids{};
    for (int i = 0; i < 3; ++i) {
      ids[static_cast<std::size_t>(i)] = arr.vertex_id(tiles[t][i]);
      arr.corner_of[ids[static_cast<std::size_t>(i)]].push_back(t);
    }
    arr.tile_corners.push_back(ids);
  }

  // Group sides by support line.
  std::map<LineKey, std::vector<SideRef>> by_line;
  for (TileId t = 0; t < tiles.size(); ++t) {
    for (int i = 0; i < 3; ++i) {
      const Segment s = tiles[t].side(i);
      by_line[LineKey::through(s.a, s.b)].push_back({t, i});
    }
  }

  // Candidate filter for vertices in side interiors: a double-precision
  // proximity screen with a generous margin. Every candidate is then decided
  // by the exact predicate.
  // Margins are relative to the magnitude of the side's own coordinates.
  std::vector<DoublePoint> approx(nv);
  bool finite = true;
  for (VertexId v = 0; v < nv; ++v) {
    approx[v] = {arr.vertices[v].x.get_d(), arr.vertices[v].y.get_d()};
    finite = finite && std::isfinite(approx[v].x) && std::isfinite(approx[v].y);
  }
  // Vertices are already sorted by exact x, so approx x is nondecreasing.

  arr.side_line.assign(tiles.size(), {0, 0, 0});
  arr.lines.reserve(by_line.size());
  for (auto& [key, sides] : by_line) {
    const std::size_t line_id = arr.lines.size();
    SupportLine line;
    line.key = key;
    line.by_x = key.b != 0;

    std::vector<VertexId> on_line;
    for (const SideRef& s : sides) {
      arr.side_line[s.tile][static_cast<std::size_t>(s.index)] = line_id;
      const Segment seg = tiles[s.tile].side(s.index);
      const VertexId va = arr.vertex_id(seg.a);
      const VertexId vb = arr.vertex_id(seg.b);
      on_line.push_back(va);
      on_line.push_back(vb);

      if (!finite) {
        for (VertexId v = 0; v < nv; ++v) {
          if (v != va && v != vb && point_on_segment_interior(seg, arr.vertices[v])) {
            arr.interior_of[v].push_back(s);
            on_line.push_back(v);
          }
        }
        continue;
      }
      const DoublePoint pa = approx[va];
      const DoublePoint pb = approx[vb];
      const double magnitude = std::max({1e-300, std::abs(pa.x), std::abs(pa.y), std::abs(pb.x), std::abs(pb.y)});
      const double margin = 1e-9 * magnitude;
      const double xlo = std::min(pa.x, pb.x) - margin;
      const double xhi = std::max(pa.x, pb.x) + margin;
      const double ylo = std::min(pa.y, pb.y) - margin;
      const double yhi = std::max(pa.y, pb.y) + margin;
      const double len = std::hypot(pb.x - pa.x, pb.y - pa.y);
      auto first = std::lower_bound(approx.begin(), approx.end(), xlo,
                                    [](const DoublePoint& p, double x) { return p.x < x; });
      for (auto it = first; it != approx.end() && it->x <= xhi; ++it) {
        if (it->y < ylo || it->y > yhi) continue;
        const double crossd = (pb.x - pa.x) * (it->y - pa.y) - (pb.y - pa.y) * (it->x - pa.x);
        if (std::abs(crossd) > margin * (2 * len + margin)) continue;
        const auto v = static_cast<VertexId>(it - approx.begin());
        if (v == va || v == vb) continue;
        if (point_on_segment_interior(seg, arr.vertices[v])) {
          arr.interior_of[v].push_back(s);
          on_line.push_back(v);
        }
      }
    }

    const bool by_x = line.by_x;
    std::sort(on_line.begin(), on_line.end(), [&](VertexId a, VertexId b) {
      return cmp_param(arr.vertices[a], arr.vertices[b], by_x) < 0;
    });
    on_line.erase(std::unique(on_line.begin(), on_line.end()), on_line.end());
    line.points = std::move(on_line);

    auto index_of = [&](const Point& p) {
      auto it = std::lower_bound(line.points.begin(), line.points.end(), p,
                                 [&](VertexId v, const Point& q) {
                                   return cmp_param(arr.vertices[v], q, by_x) < 0;
                                 });
      return static_cast<std::size_t>(it - line.points.begin());
    };

    for (const SideRef& s : sides) {
      const Triangle& tri = tiles[s.tile];
      const Segment seg = tri.side(s.index);
      std::size_t lo = index_of(seg.a);
      std::size_t hi = index_of(seg.b);
      const Point& low = lo < hi ? seg.a : seg.b;
      const Point& high = lo < hi ? seg.b : seg.a;
      if (lo > hi) std::swap(lo, hi);
      const int half = orient_sign(low, high, tri[(s.index + 2) % 3]);
      line.sides.push_back({s, half, lo, hi});
    }
    std::sort(line.sides.begin(), line.sides.end(), [](const LineSide& a, const LineSide& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      if (a.half != b.half) return a.half > b.half;
      return a.side < b.side;
    });

    if (!line.points.empty()) {
      std::vector<std::vector<EdgeIncidence>> cover(line.points.size() - 1);
      for (const LineSide& ls : line.sides) {
        for (std::size_t k = ls.lo; k < ls.hi; ++k) cover[k].push_back({ls.side, ls.half});
      }
      for (std::size_t k = 0; k < cover.size(); ++k) {
        if (cover[k].empty()) continue;
        line.edges.push_back(arr.edges.size());
        arr.edges.push_back({line.points[k], line.points[k + 1], line_id, k, std::move(cover[k])});
      }
    }
    arr.lines.push_back(std::move(line));
  }

  for (auto& sides : arr.interior_of) std::sort(sides.begin(), sides.end());
  return arr;
}

}  // namespace tritile
