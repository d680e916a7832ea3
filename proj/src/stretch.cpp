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

#include "tritile/stretch.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace tritile {
namespace {

std::string str(long v) { return std::to_string(v); }

// The tile side covering atomic edge `e` on the given half, if any.
std::optional<SideRef> cover(const AtomicEdge& e, int half) {
  for (const EdgeIncidence& inc : e.incidences) {
    if (inc.half == half) return inc.side;
  }
  return std::nullopt;
}

bool same_cover(const std::optional<SideRef>& a, const std::optional<SideRef>& b) {
  return a && b && *a == *b;
}

void push_element(std::vector<StretchElement>& out, const std::optional<SideRef>& side, std::size_t edge) {
  if (side) {
    if (out.empty() || !out.back().is_side || out.back().side != *side) out.push_back({true, *side, 0});
  } else {
    out.push_back({false, {}, edge});
  }
}

Stretch make_stretch(const IncidenceGraph& g, std::size_t line, const std::vector<std::size_t>& edges) {
  Stretch s;
  s.line = line;
  s.from = g.arr.edges[edges.front()].from;
  s.to = g.arr.edges[edges.back()].to;
  bool improper = false;
  for (std::size_t id : edges) {
    const AtomicEdge& e = g.arr.edges[id];
    const auto up = cover(e, +1);
    const auto down = cover(e, -1);
    improper = improper || !up || !down;
    push_element(s.above, up, id);
    push_element(s.below, down, id);
  }
  for (const auto* half : {&s.above, &s.below}) {
    for (const StretchElement& el : *half) s.size += el.is_side;
  }
  if (improper) {
    s.cls = StretchClass::kImproper;
  } else {
    s.cls = s.size == 3 ? StretchClass::kTight : StretchClass::kLooseProper;
  }
  return s;
}

std::string point_text(const Point& p) { return to_string(p.x) + "," + to_string(p.y); }

}  // namespace

std::vector<SharedSide> shared_side_pairs(const IncidenceGraph& g) {
  std::vector<SharedSide> out;
  for (const SupportLine& line : g.arr.lines) {
    for (std::size_t i = 0; i < line.sides.size(); ++i) {
      for (std::size_t j = i + 1; j < line.sides.size() && line.sides[j].lo == line.sides[i].lo; ++j) {
        const LineSide& a = line.sides[i];
        const LineSide& b = line.sides[j];
        if (a.hi != b.hi || a.half == b.half) continue;
        SharedSide s;
        s.side_a = std::min(a.side, b.side);
        s.side_b = std::max(a.side, b.side);
        s.a = s.side_a.tile;
        s.b = s.side_b.tile;
        s.segment = {g.arr.vertices[line.points[a.lo]], g.arr.vertices[line.points[a.hi]]};
        out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SharedSide& x, const SharedSide& y) {
    return std::tie(x.a, x.b, x.side_a, x.side_b) < std::tie(y.a, y.b, y.side_a, y.side_b);
  });
  return out;
}

const char* to_string(StretchClass c) {
  switch (c) {
    case StretchClass::kTight: return "TIGHT";
    case StretchClass::kLooseProper: return "LOOSE_PROPER";
    case StretchClass::kImproper: return "IMPROPER";
  }
  return "?";
}

std::vector<Stretch> decompose_stretches(const IncidenceGraph& g) {
  std::vector<Stretch> out;
  for (std::size_t line_id = 0; line_id < g.arr.lines.size(); ++line_id) {
    const SupportLine& line = g.arr.lines[line_id];
    std::vector<std::size_t> piece;
    auto flush = [&] {
      if (piece.empty()) return;
      Stretch s = make_stretch(g, line_id, piece);
      piece.clear();
      const bool shared = s.above.size() == 1 && s.below.size() == 1 && s.above.front().is_side &&
                          s.below.front().is_side;
      if (!shared) out.push_back(std::move(s));
    };
    for (std::size_t k = 0; k < line.edges.size(); ++k) {
      const std::size_t id = line.edges[k];
      const AtomicEdge& e = g.arr.edges[id];
      if (g.edge_class[id] == EdgeClass::kFullBoundary) {
        flush();
        continue;
      }
      if (!piece.empty()) {
        const AtomicEdge& prev = g.arr.edges[piece.back()];
        const bool contiguous = prev.pos + 1 == e.pos;
        const bool joint_break = !same_cover(cover(prev, +1), cover(e, +1)) &&
                                 !same_cover(cover(prev, -1), cover(e, -1));
        if (!contiguous || joint_break) flush();
      }
      piece.push_back(id);
    }
    flush();
  }
  return out;
}

StretchTotals stretch_totals(const std::vector<Stretch>& stretches) {
  StretchTotals t;
  for (const Stretch& s : stretches) {
    ++t.count;
    t.sides_on_stretches += s.size;
    if (s.tight()) {
      ++t.sigma_tight;
    } else {
      t.loose_total_size += s.size;
    }
    t.improper += !s.proper();
  }
  return t;
}

AuditRecord accounting_audit(const IncidenceGraph& g, const std::vector<Stretch>& stretches) {
  AuditRecord r;
  const StretchTotals totals = stretch_totals(stretches);
  const IncidenceCounts& c = g.counts;
  r.value("stretches", str(totals.count));
  r.value("sigma_tight", str(totals.sigma_tight));
  r.value("L_loose", str(totals.loose_total_size));
  r.value("improper", str(totals.improper));

  long size_sum = 0;
  bool sizes_ok = true;
  for (const Stretch& s : stretches) {
    size_sum += s.size;
    sizes_ok = sizes_ok && s.size >= (s.proper() ? 3 : 2);
  }
  r.check("size_sum", str(size_sum), str(3 * totals.sigma_tight + totals.loose_total_size),
          size_sum == 3 * totals.sigma_tight + totals.loose_total_size);
  r.check("min_stretch_size", sizes_ok ? "true" : "false", "true", sizes_ok);

  const long vstar_cap = c.t + c.e_full + c.e_part + 2;
  r.check("vstar_bound", str(c.v_star), str(vstar_cap), c.v_star <= vstar_cap);

  const long shared = static_cast<long>(shared_side_pairs(g).size());
  r.value("shared_sides", str(shared));
  if (shared > 0) {
    for (const char* name : {"side_partition", "side_count", "subdividing_bound", "loose_bound"}) r.not_applicable(name, "shared-sides");
    return r;
  }
  r.check("side_partition", str(totals.sides_on_stretches + c.e_full), str(3 * c.t),
          totals.sides_on_stretches + c.e_full == 3 * c.t);
  const long lhs6 = 3 * c.t - c.e_full;
  const long rhs6 = 3 * totals.sigma_tight + totals.loose_total_size;
  r.check("side_count", str(lhs6), str(rhs6), lhs6 == rhs6);
  // v* >= sigma + L/2, doubled to stay in integers
  const Rational rhs7 = Rational(totals.sigma_tight) + ratio(totals.loose_total_size, 2);
  r.check("subdividing_bound", str(c.v_star), to_string(rhs7), 2 * c.v_star >= 2 * totals.sigma_tight + totals.loose_total_size);
  const long loose_cap = 8 * c.e_full + 6 * c.e_part + 12;
  r.check("loose_bound", str(totals.loose_total_size), str(loose_cap), totals.loose_total_size <= loose_cap);
  return r;
}

AuditRecord vertex_audit(const IncidenceGraph& g) {
  AuditRecord r;
  const IncidenceCounts& c = g.counts;
  if (!g.region_is_convex()) {
    r.not_applicable("vertex_identity", "nonconvex-region");
    r.not_applicable("three_boundary_vertices", "nonconvex-region");
    return r;
  }
  const long lhs = c.v_bd + 2 * c.v_int - c.v_star_int;
  r.check("vertex_identity", str(lhs), str(c.t + 2), lhs == c.t + 2);
  if (shared_side_pairs(g).empty()) {
    r.check("three_boundary_vertices", str(c.v_bd), "3", c.v_bd == 3);
  } else {
    r.not_applicable("three_boundary_vertices", "shared-sides");
  }
  return r;
}

AuditRecord TriangleConditions::to_record() const {
  AuditRecord r;
  const char* names[] = {"region_sides_unsubdivided", "interior_vertices_subdivide",
                         "stretch_size_three"};
  const bool values[] = {no_region_side_subdivided, interior_vertices_subdivide, stretches_size_three};
  for (int i = 0; i < 3; ++i) {
    if (applicable) {
      r.check(names[i], values[i] ? "true" : "false", "true", values[i]);
    } else {
      r.not_applicable(names[i], reason);
    }
  }
  return r;
}

TriangleConditions no_shared_side_conditions(const IncidenceGraph& g, const std::vector<Stretch>& stretches) {
  TriangleConditions c;
  if (g.region.size() != 3) {
    c.reason = "region-not-triangle";
    return c;
  }
  if (!shared_side_pairs(g).empty()) {
    c.reason = "shared-sides";
    return c;
  }
  c.applicable = true;
  c.no_region_side_subdivided = true;
  for (const Point& v : g.arr.vertices) {
    for (int i = 0; i < 3; ++i) {
      if (point_on_segment_interior({g.region[static_cast<std::size_t>(i)], g.region[static_cast<std::size_t>((i + 1) % 3)]}, v)) {
        c.no_region_side_subdivided = false;
      }
    }
  }
  c.interior_vertices_subdivide = g.counts.v_int == g.counts.v_star_int;
  c.stretches_size_three =
      std::all_of(stretches.begin(), stretches.end(), [](const Stretch& s) { return s.size == 3; });
  return c;
}

LengthExpr epsilon2(const std::vector<Triangle>& tiles) {
  if (tiles.empty()) throw std::invalid_argument("epsilon2 of an empty patch");
  std::optional<LengthExpr> best;
  for (const Triangle& t : tiles) {
    const auto s = squared_side_multiset(t);
    LengthExpr margin = LengthExpr::sqrt_of(s[0]) + LengthExpr::sqrt_of(s[1]) - LengthExpr::sqrt_of(s[2]);
    if (!best || compare(margin, *best) == Ordering::kLess) best = std::move(margin);
  }
  return *best;
}

LengthExpr epsilon2(const TilingPatch& p) { return epsilon2(p.tiles); }

long SideLabels::count(SideLabel l) const {
  long n = 0;
  for (const auto& sides : per_tile) n += std::count(sides.begin(), sides.end(), l);
  return n;
}

SideLabels label_sides(const IncidenceGraph& g, const std::vector<Stretch>& stretches) {
  SideLabels labels;
  labels.per_tile.assign(g.tiles.size(), {SideLabel::kNone, SideLabel::kNone, SideLabel::kNone});
  for (const Stretch& s : stretches) {
    if (!s.tight()) continue;
    const bool long_above = s.above.size() == 1;
    const auto& longs = long_above ? s.above : s.below;
    const auto& shorts = long_above ? s.below : s.above;
    if (longs.size() != 1 || shorts.size() != 2) {
      throw std::logic_error("tight stretch does not split as one long side over two short sides");
    }
    const SideRef l = longs.front().side;
    const SideRef a = shorts[0].side;
    const SideRef b = shorts[1].side;
    const Rational ll = g.tiles[l.tile].squared_side(l.index);
    const Rational sa = g.tiles[a.tile].squared_side(a.index);
    const Rational sb = g.tiles[b.tile].squared_side(b.index);
    // sqrt(ll) = sqrt(sa) + sqrt(sb)  <=>  ll >= sa + sb and (ll - sa - sb)^2 = 4 sa sb
    const Rational gap = ll - sa - sb;
    if (gap < 0 || gap * gap != 4 * sa * sb || !(ll > sa && ll > sb)) {
      throw std::logic_error("long side length differs from the sum of its short sides");
    }
    labels.per_tile[l.tile][static_cast<std::size_t>(l.index)] = SideLabel::kLong;
    labels.per_tile[a.tile][static_cast<std::size_t>(a.index)] = SideLabel::kShort;
    labels.per_tile[b.tile][static_cast<std::size_t>(b.index)] = SideLabel::kShort;
  }
  return labels;
}

const char* to_string(TriangleType t) {
  switch (t) {
    case TriangleType::kType0: return "type0";
    case TriangleType::kType1: return "type1";
    case TriangleType::kType2: return "type2";
    case TriangleType::kType3: return "type3";
    case TriangleType::kExceptional: return "exceptional";
  }
  return "?";
}

WAudit w_audit(const IncidenceGraph& g, const std::vector<Stretch>& stretches, const SideLabels& labels,
               const WOptions& options) {
  WAudit w;
  AuditRecord& r = w.record;
  const StretchTotals totals = stretch_totals(stretches);
  w.sigma_tight = totals.sigma_tight;
  w.loose_total_size = totals.loose_total_size;
  w.e_full = g.counts.e_full;
  w.e_part = g.counts.e_part;
  w.long_count = labels.count(SideLabel::kLong);
  w.short_count = labels.count(SideLabel::kShort);
  w.epsilon2 = epsilon2(g.tiles);

  r.value("sigma_tight", str(w.sigma_tight));
  r.value("L_loose", str(w.loose_total_size));
  r.value("e_full", str(w.e_full));
  r.value("e_part", str(w.e_part));
  r.value("epsilon2", w.epsilon2.to_string());
  r.value("epsilon2_decimal", to_decimal(w.epsilon2, 20));

  static const char* const kChecks[] = {
      "long_count",        "short_count",      "short_long_length", "w_identity",      "w_by_tiles",
      "type0_contribution", "type1_nonnegative", "type2_contribution", "type3_contribution",
      "exceptional_bound", "unit_perimeter"};
  if (options.strict && !shared_side_pairs(g).empty()) {
    w.applicable = false;
    w.reason = "shared-sides";
    for (const char* name : kChecks) r.not_applicable(name, w.reason);
    return w;
  }

  const Rational third(1, 3);
  const LengthExpr& eps = w.epsilon2;
  w.tile_type.assign(g.tiles.size(), TriangleType::kExceptional);
  w.contribution.assign(g.tiles.size(), LengthExpr());
  for (TileId t = 0; t < g.tiles.size(); ++t) {
    int longs = 0;
    bool exceptional = false;
    LengthExpr& c = w.contribution[t];
    for (int i = 0; i < 3; ++i) {
      const LengthExpr len = g.tiles[t].side_length(i);
      switch (labels.at({t, i})) {
        case SideLabel::kLong:
          ++longs;
          w.long_length += len;
          c += LengthExpr(2 * third) - eps - len;
          break;
        case SideLabel::kShort:
          w.short_length += len;
          c += len - LengthExpr(third);
          break;
        case SideLabel::kNone: exceptional = true; break;
      }
    }
    w.tile_type[t] = exceptional ? TriangleType::kExceptional : static_cast<TriangleType>(longs);
    w.type_counts[static_cast<std::size_t>(w.tile_type[t])]++;
    w.w_by_tiles += c;
  }
  w.w_definition = LengthExpr(ratio(2 * w.long_count - w.short_count, 3)) -
                   eps * Rational(w.long_count) + w.short_length - w.long_length;
  w.w_identity = -(eps * Rational(w.sigma_tight));

  r.check("long_count", str(w.long_count), str(w.sigma_tight), w.long_count == w.sigma_tight);
  r.check("short_count", str(w.short_count), str(2 * w.sigma_tight), w.short_count == 2 * w.sigma_tight);
  r.check("short_long_length", w.short_length.to_string(), w.long_length.to_string(),
          compare(w.short_length, w.long_length) == Ordering::kEqual);
  r.value("W", w.w_definition.to_string());
  r.check("w_identity", w.w_definition.to_string(), w.w_identity.to_string(),
          compare(w.w_definition, w.w_identity) == Ordering::kEqual);
  r.check("w_by_tiles", w.w_by_tiles.to_string(), w.w_definition.to_string(),
          compare(w.w_by_tiles, w.w_definition) == Ordering::kEqual);

  for (std::size_t k = 0; k < w.type_counts.size(); ++k) {
    r.value(std::string("count_") + to_string(static_cast<TriangleType>(k)), str(w.type_counts[k]));
  }

  // Closed forms of the contribution by type, for a tile of perimeter P:
  //   type0: P - 1        type2: 1 - P + 2*short - 2*eps
  //   type3: 2 - P - 3*eps
  // which reduce to 0, 2*short - 2*eps and 1 - 3*eps when P = 1.
  long ok0 = 0, ok1 = 0, ok2 = 0, ok3 = 0, okx = 0, unit_ok = 0;
  bool exceptional_checked = options.unit_perimeter;
  for (TileId t = 0; t < g.tiles.size(); ++t) {
    const Triangle& tri = g.tiles[t];
    const LengthExpr perimeter = tri.perimeter();
    const LengthExpr& c = w.contribution[t];
    const bool unit = compare(perimeter, LengthExpr(Rational(1))) == Ordering::kEqual;
    unit_ok += unit;
    switch (w.tile_type[t]) {
      case TriangleType::kType0: {
        LengthExpr expected = perimeter - LengthExpr(Rational(1));
        bool ok = compare(c, expected) == Ordering::kEqual;
        if (options.unit_perimeter) ok = ok && sign(c) == 0;
        ok0 += ok;
        break;
      }
      case TriangleType::kType1: ok1 += sign(c) >= 0; break;
      case TriangleType::kType2: {
        LengthExpr short_len;
        for (int i = 0; i < 3; ++i) {
          if (labels.at({t, i}) == SideLabel::kShort) short_len = tri.side_length(i);
        }
        LengthExpr expected =
            LengthExpr(Rational(1)) - perimeter + short_len * Rational(2) - eps * Rational(2);
        bool ok = compare(c, expected) == Ordering::kEqual;
        if (options.unit_perimeter) {
          const auto s = squared_side_multiset(tri);
          ok = ok && compare(c, LengthExpr::sqrt_of(s[0]) * Rational(2) - eps * Rational(2)) != Ordering::kLess;
        }
        ok2 += ok;
        break;
      }
      case TriangleType::kType3: {
        LengthExpr expected = LengthExpr(Rational(2)) - perimeter - eps * Rational(3);
        bool ok = compare(c, expected) == Ordering::kEqual;
        if (options.unit_perimeter) ok = ok && compare(c, perimeter - eps * Rational(3)) == Ordering::kEqual;
        ok3 += ok;
        break;
      }
      case TriangleType::kExceptional:
        if (options.unit_perimeter) okx += compare(c, perimeter * ratio(-2, 3)) != Ordering::kLess;
        break;
    }
  }
  const auto& tc = w.type_counts;
  r.check("type0_contribution", str(ok0), str(tc[0]), ok0 == tc[0]);
  r.check("type1_nonnegative", str(ok1), str(tc[1]), ok1 == tc[1]);
  r.check("type2_contribution", str(ok2), str(tc[2]), ok2 == tc[2]);
  r.check("type3_contribution", str(ok3), str(tc[3]), ok3 == tc[3]);
  if (exceptional_checked) {
    r.check("exceptional_bound", str(okx), str(tc[4]), okx == tc[4]);
  } else {
    r.not_applicable("exceptional_bound", "unit-perimeter-off");
  }
  const long t_count = static_cast<long>(g.tiles.size());
  if (options.unit_perimeter) {
    r.check("unit_perimeter", str(unit_ok), str(t_count), unit_ok == t_count);
  } else {
    r.not_applicable("unit_perimeter", "unit-perimeter-off");
  }
  return w;
}

std::vector<CompositeSide> composite_sides(const IncidenceGraph& g) {
  std::vector<CompositeSide> out;
  for (const SupportLine& line : g.arr.lines) {
    for (const LineSide& target : line.sides) {
      std::vector<const LineSide*> opposite;
      for (const LineSide& other : line.sides) {
        if (other.half == target.half) continue;
        if (other.hi <= target.lo || other.lo >= target.hi) continue;
        opposite.push_back(&other);
      }
      std::sort(opposite.begin(), opposite.end(),
                [](const LineSide* a, const LineSide* b) { return a->lo < b->lo; });
      std::size_t at = target.lo;
      bool ok = !opposite.empty();
      for (const LineSide* other : opposite) {
        if (other->lo != at) {
          ok = false;
          break;
        }
        at = other->hi;
      }
      if (!ok || at != target.hi) continue;
      CompositeSide c{target.side, {}};
      for (const LineSide* other : opposite) c.cover.push_back(other->side);
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const CompositeSide& a, const CompositeSide& b) { return a.side < b.side; });
  return out;
}

namespace {

std::vector<std::vector<TileId>> tile_neighbors(const IncidenceGraph& g) {
  std::vector<std::vector<TileId>> nb(g.tiles.size());
  for (const AtomicEdge& e : g.arr.edges) {
    if (e.incidences.size() != 2) continue;
    const TileId a = e.incidences[0].side.tile;
    const TileId b = e.incidences[1].side.tile;
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  for (auto& list : nb) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return nb;
}

std::vector<int> bfs(const std::vector<std::vector<TileId>>& nb, const std::vector<TileId>& sources) {
  std::vector<int> dist(nb.size(), -1);
  std::deque<TileId> queue;
  for (TileId s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const TileId t = queue.front();
    queue.pop_front();
    for (TileId n : nb[t]) {
      if (dist[n] < 0) {
        dist[n] = dist[t] + 1;
        queue.push_back(n);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<int> neighbor_hops_to_composite(const IncidenceGraph& g, TileId tile) {
  if (tile >= g.tiles.size()) throw std::out_of_range("unknown tile id " + std::to_string(tile));
  std::vector<bool> has_composite(g.tiles.size(), false);
  for (const CompositeSide& c : composite_sides(g)) has_composite[c.side.tile] = true;
  const std::vector<int> dist = bfs(tile_neighbors(g), {tile});
  std::optional<int> best;
  for (TileId t = 0; t < g.tiles.size(); ++t) {
    if (has_composite[t] && dist[t] >= 0 && (!best || dist[t] < *best)) best = dist[t];
  }
  return best;
}

std::vector<int> hops_from_boundary(const IncidenceGraph& g) {
  std::vector<TileId> sources;
  for (std::size_t id = 0; id < g.arr.edges.size(); ++id) {
    if (g.edge_class[id] != EdgeClass::kInternal) sources.push_back(g.arr.edges[id].incidences.front().side.tile);
  }
  return bfs(tile_neighbors(g), sources);
}

std::string stretches_to_text(const IncidenceGraph& g, const std::vector<Stretch>& stretches) {
  std::ostringstream out;
  const StretchTotals totals = stretch_totals(stretches);
  out << "stretches = " << totals.count << "\n";
  out << "sigma_tight = " << totals.sigma_tight << "\n";
  out << "L_loose = " << totals.loose_total_size << "\n";
  out << "improper = " << totals.improper << "\n";
  auto element_text = [&](const StretchElement& el) {
    if (el.is_side) return "t" + std::to_string(el.side.tile) + "s" + std::to_string(el.side.index);
    return "b" + std::to_string(el.boundary_edge);
  };
  for (std::size_t i = 0; i < stretches.size(); ++i) {
    const Stretch& s = stretches[i];
    out << "stretch " << i << " " << to_string(s.cls) << " size=" << s.size << " from=" << point_text(g.arr.vertices[s.from])
        << " to=" << point_text(g.arr.vertices[s.to]) << " above=";
    for (std::size_t k = 0; k < s.above.size(); ++k) out << (k ? "," : "") << element_text(s.above[k]);
    out << " below=";
    for (std::size_t k = 0; k < s.below.size(); ++k) out << (k ? "," : "") << element_text(s.below[k]);
    out << "\n";
  }
  return out.str();
}

}  // namespace tritile
