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
#include <vector>

#include "tritile/incidence.hpp"
#include "tritile/report.hpp"
#include "tritile/tiling.hpp"

namespace tritile {

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tiles whose closed set meets the open disk |x - center|^2 < r_sq, in
// ambient order. Throws std::invalid_argument unless r_sq > 0.
std::vector<TileId> restrict_to_disk(const TilingPatch& ambient, const Point& center, const Rational& r_sq);

// A sub-patch of an ambient patch together with the ambient id of each tile.
struct SubPatch {
  TilingPatch patch;
  std::vector<TileId> ambient_ids;  // increasing
};

// Adds every ambient tile inside a bounded complementary component of the
// selected union. Throws ExtractionError when the selection is empty or
// disconnected, or when a hole reaches the ambient boundary.
SubPatch fill_holes(const TilingPatch& ambient, const std::vector<TileId>& selected);

// Ambient tiles outside `inner` whose closure meets the union of `inner`.
std::vector<TileId> boundary_ring(const TilingPatch& ambient, const std::vector<TileId>& inner);

// Same, identifying the tiles of P inside the ambient patch by exact corner
// equality. Throws ExtractionError if a tile of P is not an ambient tile.
std::vector<TileId> boundary_ring(const TilingPatch& ambient, const TilingPatch& p);

struct ExtractionResult {
  SubPatch p;
  long t_count = 0;
  std::vector<TileId> ring;
  long e_full = 0;
  long e_part = 0;
  bool coverage_certificate = false;  // ambient region contains the disk of radius r + 1
};

ExtractionResult extract_patch(const TilingPatch& ambient, const Point& center, const Rational& r_sq);

struct AsymptoticOptions {
  bool unit_perimeter = false;
  std::optional<Rational> r_sq;  // disk radius squared, for the observed ratios
};

// Finite-patch accounting for P inside an ambient patch, with the ring of
// outside tiles touching P.
AuditRecord asymptotic_audit(const TilingPatch& ambient, const SubPatch& p, const std::vector<TileId>& ring,
                             const AsymptoticOptions& options = {});

}  // namespace tritile
