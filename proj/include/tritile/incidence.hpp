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

#include <stdexcept>
#include <vector>

#include "tritile/arrangement.hpp"
#include "tritile/report.hpp"
#include "tritile/tiling.hpp"

namespace tritile {

enum class EdgeClass { kInternal, kFullBoundary, kPartialBoundary };

const char* to_string(EdgeClass c);

struct VertexInfo {
  bool boundary = false;
  int subdivided_sides = 0;  // sides holding the vertex in their relative interior

  bool subdividing() const { return subdivided_sides > 0; }
};

struct IncidenceCounts {
  long v = 0;
  long e = 0;
  long f = 0;  // t + 1, counting the outer face
  long t = 0;
  long v_bd = 0;
  long v_int = 0;
  long v_star = 0;      // subdividing vertices
  long v_star_int = 0;  // subdividing vertices off the boundary
  long e_full = 0;
  long e_part = 0;
  long boundary_edges = 0;
};

// The vertex/atomic-edge graph of a valid patch together with the tiles that
// produced it.
struct IncidenceGraph {
  std::vector<Triangle> tiles;
  Polygon region;  // derived, collinear corners elided
  Arrangement arr;
  std::vector<EdgeClass> edge_class;  // per atomic edge
  std::vector<VertexInfo> vertex;     // per vertex
  IncidenceCounts counts;

  bool region_is_convex() const { return is_strictly_convex(region); }
};

class InvalidPatch : public std::runtime_error {
 public:
  explicit InvalidPatch(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Validates the patch first; throws InvalidPatch when it is not a tiling.
IncidenceGraph build_incidence(const TilingPatch& p);

// For callers that already hold a passing ValidationReport for `p`.
IncidenceGraph build_incidence(const TilingPatch& p, const ValidationReport& report);

// Euler and face-degree identities plus the one-side-per-vertex and boundary
// cycle checks. Never throws.
AuditRecord graph_audit(const IncidenceGraph& g);

}  // namespace tritile
