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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tritile/tiling.hpp"

namespace tritile {

// A generator produced something that is not a valid tiling, or the spec
// itself is unusable.
class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RecursiveSplitSpec {
  Triangle base{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  Rational t = 2;  // > 1
  int depth = 1;   // >= 0
};

// Level k+1 corners: w_i = v_{i+1} + t (v_i - v_{i+1}). Each level adds the
// three tiles (w_i, w_{i+1}, v_{i+1}) around the previous triangle, giving
// 3N + 1 tiles with region the outermost level.
TilingPatch gen_recursive_split(const RecursiveSplitSpec& spec);

struct TwoScaleSpec {
  Rational b = 1;  // base of the large triangles
  Rational h = 1;  // their height
  int m = 1;       // cells along x
  int n = 1;       // cells along y
};

// Cells of width 3b/2 and height h, each holding two large up triangles and
// four half-scale down triangles. No two tiles share a side.
TilingPatch gen_two_scale_periodic(const TwoScaleSpec& spec);

enum class SplitStrategy { kFan, kRandomSplit };

// Triangulation of a strictly convex counterclockwise polygon. The random
// strategy cuts along seeded random diagonals.
TilingPatch gen_convex_triangulation(const std::vector<Point>& vertices, SplitStrategy strategy,
                                     std::uint64_t seed = 0);

// k distinct rational points on the unit circle in counterclockwise order.
std::vector<Point> rational_circle_polygon(int k, std::uint64_t seed);

enum class PairKind { kLine, kMidpoint, kBisector };

const char* to_string(PairKind k);

// Tiles (x, y, z) and (x, y, z') with z' the image of z = t[2] under the
// chosen symmetry of the side x = t[0], y = t[1]. The line and midpoint images
// lie across xy and the pair tiles a quadrilateral; the bisector image lies
// on the same side of xy, so that pair overlaps and is not a tiling.
TilingPatch gen_reflected_pair(const Triangle& t, PairKind kind);

// Applies `steps` random refinements to a valid patch: either a cevian cut
// from a corner to a rational point of the opposite side, or a split of a
// tile into three around its centroid. The region is unchanged.
TilingPatch refine_random(const TilingPatch& p, int steps, std::uint64_t seed);

}  // namespace tritile
