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

#include "tritile/incidence.hpp"

#include <algorithm>
#include <string>

namespace tritile {
namespace {

std::string str(long v) { return std::to_string(v); }

IncidenceGraph assemble(const TilingPatch& p, Polygon region) {
  IncidenceGraph g;
  g.tiles = p.tiles;
  g.region = std::move(region);
  g.arr = build_arrangement(g.tiles);
  const Arrangement& arr = g.arr;

  g.vertex.resize(arr.vertices.size());
  g.edge_class.reserve(arr.edges.size());
  IncidenceCounts& c = g.counts;
  for (const AtomicEdge& e : arr.edges) {
    if (e.incidences.size() != 1) {
      g.edge_class.push_back(EdgeClass::kInternal);
      continue;
    }
    const LineSide& ls = arr.line_side(e.incidences.front().side);
    const bool full = ls.lo == e.pos && ls.hi == e.pos + 1;
    g.edge_class.push_back(full ? EdgeClass::kFullBoundary : EdgeClass::kPartialBoundary);
    (full ? c.e_full : c.e_part)++;
    g.vertex[e.from].boundary = true;
    g.vertex[e.to].boundary = true;
  }
  for (VertexId v = 0; v < arr.vertices.size(); ++v) {
    g.vertex[v].subdivided_sides = static_cast<int>(arr.interior_of[v].size());
  }

  c.t = static_cast<long>(g.tiles.size());
  c.f = c.t + 1;
  c.v = static_cast<long>(arr.vertices.size());
  c.e = static_cast<long>(arr.edges.size());
  c.boundary_edges = c.e_full + c.e_part;
  for (const VertexInfo& info : g.vertex) {
    (info.boundary ? c.v_bd : c.v_int)++;
    if (info.subdividing()) {
      ++c.v_star;
      if (!info.boundary) ++c.v_star_int;
    }
  }
  return g;
}

}  // namespace

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::kInternal: return "INTERNAL";
    case EdgeClass::kFullBoundary: return "FULL_BOUNDARY";
    case EdgeClass::kPartialBoundary: return "PARTIAL_BOUNDARY";
  }
  return "?";
}

InvalidPatch::InvalidPatch(ValidationReport report)
    : std::runtime_error("patch is not a valid tiling: " +
                         (report.violations.empty() ? std::string("unknown")
                                                    : report.violations.front().description)),
      report_(std::move(report)) {}

IncidenceGraph build_incidence(const TilingPatch& p) {
  ValidationReport report = validate_patch(p);
  if (!report.ok) throw InvalidPatch(std::move(report));
  return assemble(p, std::move(report.derived_region));
}

IncidenceGraph build_incidence(const TilingPatch& p, const ValidationReport& report) {
  if (!report.ok) throw InvalidPatch(report);
  return assemble(p, report.derived_region);
}

AuditRecord graph_audit(const IncidenceGraph& g) {
  const IncidenceCounts& c = g.counts;
  AuditRecord r;
  r.value("t", str(c.t));
  r.value("v", str(c.v));
  r.value("e", str(c.e));
  r.value("f", str(c.f));
  r.value("v_bd", str(c.v_bd));
  r.value("v_int", str(c.v_int));
  r.value("v_star", str(c.v_star));
  r.value("v_star_int", str(c.v_star_int));
  r.value("e_full", str(c.e_full));
  r.value("e_part", str(c.e_part));

  r.check("euler", str(c.e), str(c.v + c.f - 2), c.e == c.v + c.f - 2);
  const long rhs = 3 * c.t + c.v_star + c.e_full + c.e_part;
  r.check("face_edge", str(2 * c.e), str(rhs), 2 * c.e == rhs);
  int most = 0;
  for (const VertexInfo& info : g.vertex) most = std::max(most, info.subdivided_sides);
  r.check("single_subdivision", str(most), "1", most <= 1);
  r.check("boundary_cycle", str(c.v_bd), str(c.boundary_edges), c.v_bd == c.boundary_edges);
  return r;
}

}  // namespace tritile
