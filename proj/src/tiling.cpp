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

#include "tritile/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace tritile {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw ParseError(what + " at line " + std::to_string(line));
}

Rational parse_at(std::string_view token, std::size_t line) {
  try {
    return parse_rational(token);
  } catch (const ParseError& e) {
    fail_at(line, e.what());
  }
}

// Closed triangles given counterclockwise; true when some edge line weakly
// separates them, i.e. their open interiors are disjoint.
// Double-precision copy of a triangle for filtered orientation tests.
struct ApproxTriangle {
  std::array<double, 3> x;
  std::array<double, 3> y;
  double magnitude;  // largest absolute coordinate
};

ApproxTriangle approximate(const Triangle& t) {
  ApproxTriangle a{};
  a.magnitude = 0;
  for (int i = 0; i < 3; ++i) {
    a.x[i] = t[i].x.get_d();
    a.y[i] = t[i].y.get_d();
    a.magnitude = std::max({a.magnitude, std::abs(a.x[i]), std::abs(a.y[i])});
  }
  return a;
}

// Sign of orient(s_i, s_{i+1}, t_j), exact unless the double estimate is
// clear of its error bound.
int filtered_orient(const Triangle& s, const ApproxTriangle& as, int i, const Triangle& t,
                    const ApproxTriangle& at, int j) {
  const int k = (i + 1) % 3;
  const double d = (as.x[k] - as.x[i]) * (at.y[j] - as.y[i]) - (as.y[k] - as.y[i]) * (at.x[j] - as.x[i]);
  const double m = std::max(as.magnitude, at.magnitude);
  const double bound = 1e-12 * m * m;
  if (std::isfinite(d) && std::isfinite(bound)) {
    if (d > bound) return 1;
    if (d < -bound) return -1;
  }
  return orient_sign(s[i], s[k], t[j]);
}

bool separated(const Triangle& a, const ApproxTriangle& aa, const Triangle& b, const ApproxTriangle& ab) {
  auto one_way = [](const Triangle& s, const ApproxTriangle& as, const Triangle& t, const ApproxTriangle& at) {
    for (int i = 0; i < 3; ++i) {
      bool all_outside = true;
      for (int j = 0; j < 3 && all_outside; ++j) all_outside = filtered_orient(s, as, i, t, at, j) <= 0;
      if (all_outside) return true;
    }
    return false;
  };
  return one_way(a, aa, b, ab) || one_way(b, ab, a, aa);
}

bool segments_cross(const Segment& s, const Segment& t) {
  const int d1 = orient_sign(s.a, s.b, t.a);
  const int d2 = orient_sign(s.a, s.b, t.b);
  const int d3 = orient_sign(t.a, t.b, s.a);
  const int d4 = orient_sign(t.a, t.b, s.b);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && point_on_segment(s, t.a)) || (d2 == 0 && point_on_segment(s, t.b)) ||
         (d3 == 0 && point_on_segment(t, s.a)) || (d4 == 0 && point_on_segment(t, s.b));
}

bool is_simple_ccw(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3 || signed_area(poly) <= 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (poly[i] == poly[(i + 1) % n]) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_cross({poly[i], poly[(i + 1) % n]}, {poly[j], poly[(j + 1) % n]})) return false;
    }
  }
  return true;
}

struct DirectedEdge {
  VertexId from;
  VertexId to;
};

// Clockwise angle from `ref` to `d` in (0, 2*pi]; true when d1 comes first.
bool clockwise_before(const Point& ref, const Point& d1, const Point& d2) {
  const Point o{0, 0};
  auto half = [&](const Point& d) {
    const int c = orient_sign(o, ref, d);
    if (c < 0) return 0;
    if (c == 0 && ref.x * d.x + ref.y * d.y < 0) return 0;
    return 1;
  };
  const int h1 = half(d1);
  const int h2 = half(d2);
  if (h1 != h2) return h1 < h2;
  return orient_sign(o, d1, d2) < 0;
}

Polygon elide_collinear(const std::vector<Point>& cycle) {
  const std::size_t n = cycle.size();
  Polygon out;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = cycle[(i + n - 1) % n];
    const Point& next = cycle[(i + 1) % n];
    if (orient_sign(prev, cycle[i], next) != 0) out.push_back(cycle[i]);
  }
  auto first = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), first, out.end());
  return out;
}

std::size_t tile_components(const Arrangement& arr, const std::vector<bool>& selected) {
  std::vector<std::size_t> parent(arr.tile_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (VertexId v = 0; v < arr.vertices.size(); ++v) {
    std::vector<TileId> touching = arr.tiles_touching(v);
    std::erase_if(touching, [&](TileId t) { return !selected[t]; });
    for (std::size_t i = 1; i < touching.size(); ++i) parent[find(touching[i])] = find(touching[0]);
  }
  std::size_t count = 0;
  for (TileId t = 0; t < arr.tile_count(); ++t) count += selected[t] && find(t) == t;
  return count;
}

}  // namespace

Rational signed_area(const Polygon& poly) {
  Rational twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return twice / 2;
}

bool is_strictly_convex(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (orient_sign(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) <= 0) return false;
  }
  return is_simple_ccw(poly);
}

Rational total_area(const TilingPatch& p) {
  Rational sum = 0;
  for (const Triangle& t : p.tiles) sum += t.area();
  return sum;
}

TilingPatch parse_tiling(std::string_view text) {
  TilingPatch patch;
  std::size_t line_no = 0;
  bool seen_magic = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!seen_magic) {
      if (trim(raw) != "#TILING 1") fail_at(line_no, "missing '#TILING 1' header");
      seen_magic = true;
      continue;
    }
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto tokens = split_ws(raw);
    const std::string_view keyword = tokens.front();
    if (keyword == "tri") {
      if (tokens.size() != 7) fail_at(line_no, "expected 6 coordinates after 'tri'");
      std::array<Point, 3> v;
      for (std::size_t i = 0; i < 3; ++i) {
        v[i] = {parse_at(tokens[1 + 2 * i], line_no), parse_at(tokens[2 + 2 * i], line_no)};
      }
      if (orientation(v[0], v[1], v[2]) == Orientation::kCollinear) fail_at(line_no, "degenerate triangle");
      patch.tiles.emplace_back(v[0], v[1], v[2]);
    } else if (keyword == "region") {
      if (patch.region) fail_at(line_no, "duplicate region");
      if (tokens.size() < 2) fail_at(line_no, "missing region vertex count");
      const Rational n = parse_at(tokens[1], line_no);
      if (n.get_den() != 1 || n < 3) fail_at(line_no, "region needs at least 3 vertices");
      const std::size_t count = n.get_num().get_ui();
      if (tokens.size() != 2 + 2 * count) fail_at(line_no, "region coordinate count mismatch");
      Polygon poly;
      for (std::size_t i = 0; i < count; ++i) {
        poly.push_back({parse_at(tokens[2 + 2 * i], line_no), parse_at(tokens[3 + 2 * i], line_no)});
      }
      patch.region = std::move(poly);
    } else if (keyword == "meta") {
      if (tokens.size() < 2) fail_at(line_no, "missing meta key");
      std::string_view rest = raw.substr(raw.find(tokens[1], keyword.size()) + tokens[1].size());
      patch.metadata.emplace_back(std::string(tokens[1]), std::string(trim(rest)));
    } else {
      fail_at(line_no, "unknown record '" + std::string(keyword) + "'");
    }
  }
  if (!seen_magic) throw ParseError("empty input: missing '#TILING 1' header");
  return patch;
}

std::string serialize_tiling(const TilingPatch& p) {
  std::string out = "#TILING 1\n";
  if (p.region) {
    out += "region " + std::to_string(p.region->size());
    for (const Point& v : *p.region) out += " " + to_string(v.x) + " " + to_string(v.y);
    out += "\n";
  }
  for (const auto& [key, value] : p.metadata) {
    out += "meta " + key;
    if (!value.empty()) out += " " + value;
    out += "\n";
  }
  for (const Triangle& t : p.tiles) {
    out += "tri";
    for (const Point& v : t.corners()) out += " " + to_string(v.x) + " " + to_string(v.y);
    out += "\n";
  }
  return out;
}

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kEmpty: return "EMPTY";
    case ViolationKind::kOverlap: return "OVERLAP";
    case ViolationKind::kEdgeConflict: return "EDGE_CONFLICT";
    case ViolationKind::kUnmatchedEdge: return "UNMATCHED_EDGE";
    case ViolationKind::kAreaMismatch: return "AREA_MISMATCH";
    case ViolationKind::kInvalidRegion: return "INVALID_REGION";
    case ViolationKind::kNonSimpleBoundary: return "NON_SIMPLE_BOUNDARY";
    case ViolationKind::kHole: return "HOLE";
    case ViolationKind::kDisconnected: return "DISCONNECTED";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind k) const {
  return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << "ok = " << (ok ? "true" : "false") << "\n";
  out << "violations = " << violations.size() << "\n";
  for (const Violation& v : violations) {
    out << "violation " << to_string(v.kind);
    if (!v.tiles.empty()) {
      out << " tiles=";
      for (std::size_t i = 0; i < v.tiles.size(); ++i) out << (i ? "," : "") << v.tiles[i];
    }
    if (v.vertex) out << " vertex=" << to_string(v.vertex->x) << "," << to_string(v.vertex->y);
    out << " : " << v.description << "\n";
  }
  if (!derived_region.empty()) {
    out << "region = " << derived_region.size();
    for (const Point& p : derived_region) out << " " << to_string(p.x) << " " << to_string(p.y);
    out << "\n";
  }
  return out.str();
}

BoundaryCycles trace_boundary(const Arrangement& arr, const std::vector<bool>& selected) {
  std::vector<DirectedEdge> directed;
  for (const AtomicEdge& e : arr.edges) {
    int count = 0;
    int half = 0;
    for (const EdgeIncidence& inc : e.incidences) {
      if (selected[inc.side.tile]) {
        ++count;
        half = inc.half;
      }
    }
    if (count != 1) continue;
    directed.push_back(half > 0 ? DirectedEdge{e.from, e.to} : DirectedEdge{e.to, e.from});
  }

  BoundaryCycles result;
  std::vector<std::vector<std::size_t>> outgoing(arr.vertices.size());
  for (std::size_t i = 0; i < directed.size(); ++i) outgoing[directed[i].from].push_back(i);
  for (VertexId v = 0; v < outgoing.size(); ++v) {
    if (outgoing[v].size() > 1) result.pinch_vertices.push_back(v);
  }
  auto direction = [&](VertexId from, VertexId to) {
    return Point{arr.vertices[to].x - arr.vertices[from].x, arr.vertices[to].y - arr.vertices[from].y};
  };

  std::vector<bool> used(directed.size(), false);
  for (std::size_t start = 0; start < directed.size(); ++start) {
    if (used[start]) continue;
    std::vector<VertexId> cycle;
    std::size_t cur = start;
    while (!used[cur]) {
      used[cur] = true;
      cycle.push_back(directed[cur].from);
      const VertexId at = directed[cur].to;
      const auto& out = outgoing[at];
      if (out.empty()) break;
      std::size_t next = out.front();
      if (out.size() > 1) {
        // Stay in the wedge on the left of the incoming edge: take the first
        // outgoing edge clockwise from the reversed incoming direction.
        const Point back = direction(at, directed[cur].from);
        for (std::size_t cand : out) {
          if (clockwise_before(back, direction(at, directed[cand].to), direction(at, directed[next].to))) {
            next = cand;
          }
        }
      }
      cur = next;
    }
    Polygon pts;
    for (VertexId v : cycle) pts.push_back(arr.vertices[v]);
    result.signed_areas.push_back(signed_area(pts));
    result.cycles.push_back(std::move(cycle));
  }
  return result;
}

ValidationReport validate_patch(const TilingPatch& p) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::vector<TileId> tiles, std::optional<Point> vertex, std::string what) {
    report.violations.push_back({kind, std::move(tiles), std::move(vertex), std::move(what)});
  };
  if (p.tiles.empty()) {
    add(ViolationKind::kEmpty, {}, std::nullopt, "patch has no tiles");
    report.ok = false;
    return report;
  }

  // (a) pairwise interior disjointness, screened by bounding boxes.
  {
    struct Box {
      double xlo, xhi, ylo, yhi;
      TileId id;
    };
    std::vector<Triangle> ccw;
    std::vector<ApproxTriangle> approx;
    std::vector<Box> boxes;
    double scale = 1.0;
    for (TileId t = 0; t < p.tiles.size(); ++t) {
      ccw.push_back(p.tiles[t].ccw());
      approx.push_back(approximate(ccw.back()));
      Box b{HUGE_VAL, -HUGE_VAL, HUGE_VAL, -HUGE_VAL, t};
      for (const Point& v : p.tiles[t].corners()) {
        const double x = v.x.get_d();
        const double y = v.y.get_d();
        b.xlo = std::min(b.xlo, x);
        b.xhi = std::max(b.xhi, x);
        b.ylo = std::min(b.ylo, y);
        b.yhi = std::max(b.yhi, y);
        scale = std::max({scale, std::abs(x), std::abs(y)});
      }
      boxes.push_back(b);
    }
    const double margin = 1e-9 * scale;
    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
      return a.xlo != b.xlo ? a.xlo < b.xlo : a.id < b.id;
    });
    std::vector<std::pair<TileId, TileId>> overlaps;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      for (std::size_t j = i + 1; j < boxes.size() && boxes[j].xlo <= boxes[i].xhi + margin; ++j) {
        if (boxes[j].ylo > boxes[i].yhi + margin || boxes[i].ylo > boxes[j].yhi + margin) continue;
        const TileId a = boxes[i].id;
        const TileId b = boxes[j].id;
        if (!separated(ccw[a], approx[a], ccw[b], approx[b])) overlaps.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
    std::sort(overlaps.begin(), overlaps.end());
    for (auto [a, b] : overlaps) add(ViolationKind::kOverlap, {a, b}, std::nullopt, "tile interiors intersect");
  }

  const Arrangement arr = build_arrangement(p.tiles);

  bool region_ok = true;
  std::map<LineKey, std::vector<Segment>> region_edges;
  if (p.region) {
    if (!is_simple_ccw(*p.region)) {
      region_ok = false;
      add(ViolationKind::kInvalidRegion, {}, std::nullopt, "region is not a simple counterclockwise polygon");
    }
    const Polygon& r = *p.region;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Point& a = r[i];
      const Point& b = r[(i + 1) % r.size()];
      if (a != b) region_edges[LineKey::through(a, b)].push_back({a, b});
    }
  }

  // (b) edge matching.
  for (const AtomicEdge& e : arr.edges) {
    const Point& a = arr.vertices[e.from];
    const Point& b = arr.vertices[e.to];
    std::vector<TileId> tiles;
    int above = 0;
    int below = 0;
    for (const EdgeIncidence& inc : e.incidences) {
      tiles.push_back(inc.side.tile);
      (inc.half > 0 ? above : below)++;
    }
    std::sort(tiles.begin(), tiles.end());
    const std::string where = "edge " + to_string(a) + "-" + to_string(b);
    if (above > 1 || below > 1) {
      add(ViolationKind::kEdgeConflict, tiles, std::nullopt, where + " covered twice on one side");
    } else if (tiles.size() == 1 && p.region) {
      bool on_boundary = false;
      if (auto it = region_edges.find(arr.lines[e.line].key); it != region_edges.end()) {
        for (const Segment& s : it->second) {
          if (point_on_segment(s, a) && point_on_segment(s, b)) {
            on_boundary = true;
            break;
          }
        }
      }
      if (!on_boundary) add(ViolationKind::kUnmatchedEdge, tiles, std::nullopt, where + " has one tile and is off the region boundary");
    }
  }

  // (c) area.
  if (p.region && region_ok) {
    const Rational tiles_area = total_area(p);
    const Rational region_area = signed_area(*p.region);
    if (tiles_area != region_area) {
      add(ViolationKind::kAreaMismatch, {}, std::nullopt,
          "tile area " + to_string(tiles_area) + " != region area " + to_string(region_area));
    }
  }

  // (d) the boundary is one simple cycle.
  const std::vector<bool> all(p.tiles.size(), true);
  const BoundaryCycles bc = trace_boundary(arr, all);
  for (VertexId v : bc.pinch_vertices) {
    add(ViolationKind::kNonSimpleBoundary, arr.tiles_touching(v), arr.vertices[v], "boundary touches itself");
  }
  std::size_t outer = 0;
  for (std::size_t i = 0; i < bc.cycles.size(); ++i) {
    if (bc.signed_areas[i] > 0) {
      ++outer;
    } else {
      add(ViolationKind::kHole, {}, arr.vertices[bc.cycles[i].front()],
          "hole with area " + to_string(-bc.signed_areas[i]));
    }
  }
  if (tile_components(arr, all) > 1) {
    add(ViolationKind::kDisconnected, {}, std::nullopt, "union of tiles is disconnected");
  }

  report.ok = report.violations.empty();
  if (bc.pinch_vertices.empty() && bc.cycles.size() == 1 && outer == 1) {
    std::vector<Point> pts;
    for (VertexId v : bc.cycles.front()) pts.push_back(arr.vertices[v]);
    report.derived_region = elide_collinear(pts);
  }
  return report;
}

Polygon derive_region(const TilingPatch& p) {
  if (p.tiles.empty()) throw TilingError(ViolationKind::kEmpty, "patch has no tiles");
  const Arrangement arr = build_arrangement(p.tiles);
  const std::vector<bool> all(p.tiles.size(), true);
  if (tile_components(arr, all) > 1) throw TilingError(ViolationKind::kDisconnected, "union of tiles is disconnected");
  const BoundaryCycles bc = trace_boundary(arr, all);
  for (std::size_t i = 0; i < bc.cycles.size(); ++i) {
    if (bc.signed_areas[i] <= 0) throw TilingError(ViolationKind::kHole, "union of tiles has a hole");
  }
  if (!bc.pinch_vertices.empty() || bc.cycles.size() != 1) {
    throw TilingError(ViolationKind::kNonSimpleBoundary, "boundary of the union is not a simple cycle");
  }
  std::vector<Point> pts;
  for (VertexId v : bc.cycles.front()) pts.push_back(arr.vertices[v]);
  return elide_collinear(pts);
}

SideLengthRange side_length_range(const TilingPatch& p, int precision_bits) {
  if (p.tiles.empty()) throw std::invalid_argument("side_length_range of an empty patch");
  Rational lo = p.tiles.front().squared_side(0);
  Rational hi = lo;
  for (const Triangle& t : p.tiles) {
    for (int i = 0; i < 3; ++i) {
      const Rational s = t.squared_side(i);
      if (s < lo) lo = s;
      if (s > hi) hi = s;
    }
  }
  return {enclose_relative(LengthExpr::sqrt_of(lo), precision_bits),
          enclose_relative(LengthExpr::sqrt_of(hi), precision_bits)};
}

TilingPatch apply_affine(const TilingPatch& p, const AffineMap& map) {
  const Rational det = map.det();
  if (det == 0) throw GeometryError("singular affine map");
  TilingPatch out;
  out.metadata = p.metadata;
  out.tiles.reserve(p.tiles.size());
  for (const Triangle& t : p.tiles) {
    if (det > 0) {
      out.tiles.emplace_back(map(t[0]), map(t[1]), map(t[2]));
    } else {
      out.tiles.emplace_back(map(t[0]), map(t[2]), map(t[1]));
    }
  }
  if (p.region) {
    Polygon r;
    for (const Point& v : *p.region) r.push_back(map(v));
    if (det < 0) std::reverse(r.begin() + 1, r.end());
    out.region = std::move(r);
  }
  return out;
}

}  // namespace tritile
