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

#include "tritile/extract.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "tritile/stretch.hpp"

namespace tritile {
namespace {

std::string str(long v) { return std::to_string(v); }

Rational squared_distance(const Point& p, const Triangle& t) {
  if (t.contains(p)) return Rational(0);
  Rational best = tritile::squared_distance(p, t.side(0));
  for (int i = 1; i < 3; ++i) best = std::min(best, tritile::squared_distance(p, t.side(i)));
  return best;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<bool> mask(std::size_t n, const std::vector<TileId>& ids) {
  std::vector<bool> m(n, false);
  for (TileId id : ids) {
    if (id >= n) throw ExtractionError("tile id " + std::to_string(id) + " out of range");
    m[id] = true;
  }
  return m;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::vector<TileId> restrict_to_disk(const TilingPatch& ambient, const Point& center, const Rational& r_sq) {
  if (r_sq <= 0) throw std::invalid_argument("disk radius squared must be positive");
  std::vector<TileId> out;
  for (TileId t = 0; t < ambient.tiles.size(); ++t) {
    if (squared_distance(center, ambient.tiles[t]) < r_sq) out.push_back(t);
  }
  return out;
}

SubPatch fill_holes(const TilingPatch& ambient, const std::vector<TileId>& selected) {
  if (selected.empty()) throw ExtractionError("empty selection");
  const Arrangement arr = build_arrangement(ambient.tiles);
  const std::size_t n = ambient.tiles.size();
  std::vector<bool> in = mask(n, selected);

  UnionFind touch(n);
  for (VertexId v = 0; v < arr.vertices.size(); ++v) {
    std::optional<TileId> first;
    for (TileId t : arr.tiles_touching(v)) {
      if (!in[t]) continue;
      if (first) touch.unite(*first, t);
      first = t;
    }
  }
  const std::size_t root = touch.find(selected.front());
  for (TileId t : selected) {
    if (touch.find(t) != root) throw ExtractionError("selection is disconnected");
  }

  Rational hole_area = 0;
  const BoundaryCycles bc = trace_boundary(arr, in);
  for (const Rational& a : bc.signed_areas) {
    if (a < 0) hole_area -= a;
  }

  // Unselected tiles grouped by shared atomic edges; a group that never
  // reaches the ambient boundary lies in a bounded complementary component.
  UnionFind comp(n);
  std::vector<bool> open_component(n, false);
  for (const AtomicEdge& e : arr.edges) {
    if (e.incidences.size() == 2) {
      const TileId a = e.incidences[0].side.tile;
      const TileId b = e.incidences[1].side.tile;
      if (!in[a] && !in[b]) comp.unite(a, b);
    }
  }
  for (const AtomicEdge& e : arr.edges) {
    if (e.incidences.size() == 1 && !in[e.incidences[0].side.tile]) open_component[comp.find(e.incidences[0].side.tile)] = true;
  }
  Rational filled_area = 0;
  std::vector<bool> result = in;
  for (TileId t = 0; t < n; ++t) {
    if (!in[t] && !open_component[comp.find(t)]) {
      result[t] = true;
      filled_area += ambient.tiles[t].area();
    }
  }
  if (filled_area != hole_area) {
    throw ExtractionError("holes of area " + to_string(hole_area) + " are not covered by ambient tiles (filled " +
                          to_string(filled_area) + ")");
  }

  SubPatch out;
  for (TileId t = 0; t < n; ++t) {
    if (!result[t]) continue;
    out.ambient_ids.push_back(t);
    out.patch.tiles.push_back(ambient.tiles[t]);
  }
  return out;
}

std::vector<TileId> boundary_ring(const TilingPatch& ambient, const std::vector<TileId>& inner) {
  const Arrangement arr = build_arrangement(ambient.tiles);
  const std::vector<bool> in = mask(ambient.tiles.size(), inner);
  std::vector<bool> ring(ambient.tiles.size(), false);
  for (VertexId v = 0; v < arr.vertices.size(); ++v) {
    const std::vector<TileId> touching = arr.tiles_touching(v);
    if (std::none_of(touching.begin(), touching.end(), [&](TileId t) { return in[t]; })) continue;
    for (TileId t : touching) ring[t] = ring[t] || !in[t];
  }
  std::vector<TileId> out;
  for (TileId t = 0; t < ring.size(); ++t) {
    if (ring[t]) out.push_back(t);
  }
  return out;
}

std::vector<TileId> boundary_ring(const TilingPatch& ambient, const TilingPatch& p) {
  std::map<std::array<Point, 3>, TileId> index;
  for (TileId t = 0; t < ambient.tiles.size(); ++t) {
    auto key = ambient.tiles[t].corners();
    std::sort(key.begin(), key.end());
    index.emplace(key, t);
  }
  std::vector<TileId> inner;
  for (const Triangle& tri : p.tiles) {
    auto key = tri.corners();
    std::sort(key.begin(), key.end());
    auto it = index.find(key);
    if (it == index.end()) throw ExtractionError("tile is not part of the ambient patch");
    inner.push_back(it->second);
  }
  return boundary_ring(ambient, inner);
}

ExtractionResult extract_patch(const TilingPatch& ambient, const Point& center, const Rational& r_sq) {
  ExtractionResult r;
  r.p = fill_holes(ambient, restrict_to_disk(ambient, center, r_sq));
  r.t_count = static_cast<long>(r.p.patch.tiles.size());
  r.ring = boundary_ring(ambient, r.p.ambient_ids);
  const IncidenceGraph g = build_incidence(r.p.patch);
  r.e_full = g.counts.e_full;
  r.e_part = g.counts.e_part;

  const ValidationReport report = validate_patch(ambient);
  const bool inside = std::any_of(ambient.tiles.begin(), ambient.tiles.end(),
                                  [&](const Triangle& t) { return t.contains(center); });
  if (report.ok && inside) {
    const Polygon& region = report.derived_region;
    Rational d2 = tritile::squared_distance(center, Segment{region.back(), region.front()});
    for (std::size_t i = 0; i + 1 < region.size(); ++i) {
      d2 = std::min(d2, tritile::squared_distance(center, Segment{region[i], region[i + 1]}));
    }
    // d >= r + 1  <=>  d^2 - r^2 - 1 >= 2r
    r.coverage_certificate =
        compare(LengthExpr(d2 - r_sq - 1), LengthExpr::sqrt_of(r_sq) * Rational(2)) != Ordering::kLess;
  }
  return r;
}

AuditRecord asymptotic_audit(const TilingPatch& ambient, const SubPatch& p, const std::vector<TileId>& ring,
                             const AsymptoticOptions& options) {
  AuditRecord r;
  const IncidenceGraph g = build_incidence(p.patch);
  const std::vector<Stretch> stretches = decompose_stretches(g);
  const StretchTotals totals = stretch_totals(stretches);
  const bool shared = !shared_side_pairs(g).empty();
  const IncidenceCounts& c = g.counts;
  const long t_prime = static_cast<long>(ring.size());

  Rational min_area = g.tiles.front().area();
  Rational max_area = min_area;
  Rational min_sq = g.tiles.front().squared_side(0);
  for (const Triangle& tri : g.tiles) {
    min_area = std::min(min_area, tri.area());
    max_area = std::max(max_area, tri.area());
    for (int i = 0; i < 3; ++i) min_sq = std::min(min_sq, tri.squared_side(i));
  }
  const LengthExpr min_side = LengthExpr::sqrt_of(min_sq);
  LengthExpr boundary_length;
  for (std::size_t i = 0; i < g.region.size(); ++i) {
    boundary_length += LengthExpr::sqrt_of(squared_distance(g.region[i], g.region[(i + 1) % g.region.size()]));
  }

  r.value("t", str(c.t));
  r.value("t_prime", str(t_prime));
  r.value("e_full", str(c.e_full));
  r.value("e_part", str(c.e_part));
  r.value("sigma_tight", str(totals.sigma_tight));
  r.value("L_loose", str(totals.loose_total_size));
  r.value("v_star", str(c.v_star));
  r.value("min_area", to_string(min_area));
  r.value("min_side", min_side.to_string());
  r.value("epsilon2", epsilon2(g.tiles).to_string());
  r.value("boundary_length", boundary_length.to_string());

  if (shared) {
    r.not_applicable("side_count", "shared-sides");
    r.not_applicable("subdividing_bound", "shared-sides");
  } else {
    const long lhs6 = 3 * c.t - c.e_full;
    const long rhs6 = 3 * totals.sigma_tight + totals.loose_total_size;
    r.check("side_count", str(lhs6), str(rhs6), lhs6 == rhs6);
    const Rational rhs7 = Rational(totals.sigma_tight) + ratio(totals.loose_total_size, 2);
    r.check("subdividing_bound", str(c.v_star), to_string(rhs7), Rational(c.v_star) >= rhs7);
  }

  const LengthExpr full_length = min_side * Rational(c.e_full);
  r.check("full_edge_bound", full_length.to_string(), boundary_length.to_string(),
          compare(full_length, boundary_length) != Ordering::kGreater);

  // Partial boundary edges are charged to the ring, which must then surround
  // P completely.
  const Arrangement arr = build_arrangement(ambient.tiles);
  const std::vector<bool> in = mask(ambient.tiles.size(), p.ambient_ids);
  const bool on_ambient_boundary = std::any_of(arr.edges.begin(), arr.edges.end(), [&](const AtomicEdge& e) {
    return e.incidences.size() == 1 && in[e.incidences[0].side.tile];
  });
  if (on_ambient_boundary) {
    r.not_applicable("partial_edge_bound", "touches-ambient-boundary");
  } else {
    r.check("partial_edge_bound", str(c.e_part), str(3 * t_prime), c.e_part <= 3 * t_prime);
  }

  if (options.unit_perimeter) {
    long unit = 0, small_area = 0, long_sides = 0;
    for (const Triangle& tri : g.tiles) {
      unit += compare(tri.perimeter(), LengthExpr(Rational(1))) == Ordering::kEqual;
      // area <= sqrt(3)/36  <=>  area^2 <= 1/432
      small_area += tri.area() * tri.area() <= ratio(1, 432);
      const Rational a4 = 4 * tri.area();
      long ok = 1;
      for (int i = 0; i < 3; ++i) ok &= tri.squared_side(i) >= a4 * a4;
      long_sides += ok;
    }
    r.check("unit_perimeter", str(unit), str(c.t), unit == c.t);
    r.check("area_bound", str(small_area), str(c.t), small_area == c.t);
    r.check("side_area_bound", str(long_sides), str(c.t), long_sides == c.t);
    const Rational eps_prime = 4 * min_area;
    r.check("min_side_bound", min_side.to_string(), to_string(eps_prime), min_sq >= eps_prime * eps_prime);
    const LengthExpr area_full = LengthExpr(eps_prime * c.e_full);
    r.check("full_edge_bound_area", area_full.to_string(), boundary_length.to_string(),
            compare(area_full, boundary_length) != Ordering::kGreater);
  }

  if (options.r_sq) {
    // Observed counterparts of the plane-tiling estimates; not checks.
    const double r2 = Rational(*options.r_sq).get_d();
    const double rad = std::sqrt(r2);
    r.value("obs_t_area_ratio", fixed(static_cast<double>(c.t) * max_area.get_d() / (M_PI * r2)));
    r.value("obs_ring_area_ratio",
            fixed(static_cast<double>(t_prime) * min_area.get_d() / (M_PI * (2 * rad + 1))));
  }
  return r;
}

}  // namespace tritile
