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
#include <optional>
#include <vector>

#include "tritile/incidence.hpp"
#include "tritile/length.hpp"
#include "tritile/report.hpp"

namespace tritile {

// A tile side sharing its full segment with a side of another tile.
struct SharedSide {
  TileId a = 0;
  TileId b = 0;
  SideRef side_a;
  SideRef side_b;
  Segment segment;
};

std::vector<SharedSide> shared_side_pairs(const IncidenceGraph& g);

enum class StretchClass { kTight, kLooseProper, kImproper };

const char* to_string(StretchClass c);

// One piece of a stretch decomposition: a tile side, or a partial boundary
// edge standing in for the missing tile on an empty half.
struct StretchElement {
  bool is_side = true;
  SideRef side;
  std::size_t boundary_edge = 0;  // atomic edge id when !is_side
};

// A minimal collinear segment decomposed into elements in two different ways,
// `above` on the left of the support line's canonical direction and `below`
// on its right.
struct Stretch {
  std::size_t line = 0;
  VertexId from = 0;
  VertexId to = 0;
  std::vector<StretchElement> above;
  std::vector<StretchElement> below;
  int size = 0;  // number of tile sides contained
  StretchClass cls = StretchClass::kLooseProper;

  bool proper() const { return cls != StretchClass::kImproper; }
  bool tight() const { return cls == StretchClass::kTight; }
};

// Every side that is neither a full boundary edge nor a shared side lands in
// exactly one stretch. Ordered by support line, then along the line.
std::vector<Stretch> decompose_stretches(const IncidenceGraph& g);

struct StretchTotals {
  long count = 0;
  long sigma_tight = 0;
  long loose_total_size = 0;  // sum of sizes of non-tight stretches
  long improper = 0;
  long sides_on_stretches = 0;
};

StretchTotals stretch_totals(const std::vector<Stretch>& stretches);

// Integer accounting over the stretch decomposition: every side is a full
// boundary edge or lies on one stretch, sizes sum to 3 sigma_tight + L_loose,
// 3t - e_full = 3 sigma_tight + L_loose, v* >= sigma_tight + L_loose / 2,
// v* <= t + e_full + e_part + 2 and L_loose <= 8 e_full + 6 e_part + 12.
// L_loose counts sides. Checks other than the size and v* bounds are not
// applicable when sides are shared.
AuditRecord accounting_audit(const IncidenceGraph& g, const std::vector<Stretch>& stretches);

// v_bd + 2 v_int - v*_int = t + 2 on convex regions, plus the corollary that a
// tiling without shared sides has exactly three boundary vertices.
AuditRecord vertex_audit(const IncidenceGraph& g);

// Conditions that hold for every tiling of a triangle without shared sides:
// no vertex subdivides a side of the region, every interior vertex is
// subdividing, and every stretch has size 3.
struct TriangleConditions {
  bool applicable = false;
  std::string reason;
  bool no_region_side_subdivided = false;
  bool interior_vertices_subdivide = false;
  bool stretches_size_three = false;

  AuditRecord to_record() const;
};

TriangleConditions no_shared_side_conditions(const IncidenceGraph& g, const std::vector<Stretch>& stretches);

// Strong triangle margin: min over tiles of (two shorter sides - longest).
LengthExpr epsilon2(const std::vector<Triangle>& tiles);
LengthExpr epsilon2(const TilingPatch& p);

enum class SideLabel { kNone, kLong, kShort };

struct SideLabels {
  std::vector<std::array<SideLabel, 3>> per_tile;

  SideLabel at(SideRef s) const { return per_tile[s.tile][static_cast<std::size_t>(s.index)]; }
  long count(SideLabel l) const;
};

// Long/short labels on tight stretches. Throws std::logic_error if a tight
// stretch does not split as one long side over two short sides, or if the
// long side is not exactly as long as the two short sides together.
SideLabels label_sides(const IncidenceGraph& g, const std::vector<Stretch>& stretches);

enum class TriangleType { kType0, kType1, kType2, kType3, kExceptional };

const char* to_string(TriangleType t);

struct WOptions {
  bool unit_perimeter = false;  // additionally require perimeter 1 per tile
  bool strict = true;           // shared sides make the audit not applicable
};

struct WAudit {
  bool applicable = true;
  std::string reason;

  long sigma_tight = 0;
  long loose_total_size = 0;  // L_loose
  long e_full = 0;
  long e_part = 0;
  long long_count = 0;
  long short_count = 0;
  LengthExpr epsilon2;
  LengthExpr short_length;
  LengthExpr long_length;
  LengthExpr w_definition;  // from the defining sum
  LengthExpr w_identity;    // -epsilon2 * sigma_tight
  LengthExpr w_by_tiles;    // sum of per-tile contributions

  std::array<long, 5> type_counts{};  // indexed by TriangleType
  std::vector<TriangleType> tile_type;
  std::vector<LengthExpr> contribution;

  AuditRecord record;
};

WAudit w_audit(const IncidenceGraph& g, const std::vector<Stretch>& stretches, const SideLabels& labels,
               const WOptions& options = {});

// Sides equal to the union of one or more entire sides of tiles on the other
// side of the line.
struct CompositeSide {
  SideRef side;
  std::vector<SideRef> cover;
};

std::vector<CompositeSide> composite_sides(const IncidenceGraph& g);

// Tiles are neighbors when they share an atomic edge. Returns the fewest hops
// from `tile` to a tile with a composite side, or nullopt if none is
// reachable. Throws std::out_of_range for an unknown tile id.
std::optional<int> neighbor_hops_to_composite(const IncidenceGraph& g, TileId tile);

// Hop distance of every tile from the set of tiles with a boundary atomic edge.
std::vector<int> hops_from_boundary(const IncidenceGraph& g);

// Whole-tiling audit text for the `stretches` command.
std::string stretches_to_text(const IncidenceGraph& g, const std::vector<Stretch>& stretches);

}  // namespace tritile
