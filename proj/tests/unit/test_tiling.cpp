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

#include <doctest.h>

#include "support.hpp"
#include "tritile/generators.hpp"
#include "tritile/tiling.hpp"

using namespace tritile;
using namespace tritile::test;

namespace {

TilingPatch square() {
  TilingPatch p = patch_of({tri(0, 0, 1, 0, 1, 1), tri(0, 0, 1, 1, 0, 1)});
  p.region = Polygon{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
  return p;
}

}  // namespace

TEST_SUITE("tiling") {
  TEST_CASE("parse a single tile") {
    const TilingPatch p = parse_tiling("#TILING 1\ntri 0 0 1 0 0 1\n");
    REQUIRE(p.tiles.size() == 1);
    CHECK(p.tiles[0] == tri(0, 0, 1, 0, 0, 1));
    CHECK_FALSE(p.region);
  }

  TEST_CASE("parse errors carry line numbers") {
    try {
      (void)parse_tiling("#TILING 1\n# comment\ntri 0 0 1 0 2 0\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()) == "degenerate triangle at line 3");
    }
    CHECK_THROWS_AS(parse_tiling("tri 0 0 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_tiling("#TILING 1\ntri 0 0 1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_tiling("#TILING 1\ntri 0 0 1/0 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_tiling("#TILING 1\ntri 0 0 1.5 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_tiling("#TILING 1\nquad 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_rational("+1"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK(parse_rational("-6/4") == ratio(-3, 2));
  }

  TEST_CASE("fractions round trip exactly") {
    const std::string text = "#TILING 1\ntri 1/2 1 0 0 3/4 -1/3\n";
    const TilingPatch p = parse_tiling(text);
    CHECK(p.tiles[0][0] == pt("1/2", "1"));
    CHECK(serialize_tiling(p) == text);
    CHECK(parse_tiling(serialize_tiling(p)) == p);
  }

  TEST_CASE("serialization layout") {
    CHECK(serialize_tiling(patch_of({tri(0, 0, 1, 0, 0, 1)})) == "#TILING 1\ntri 0 0 1 0 0 1\n");
    TilingPatch p = square();
    p.metadata = {{"note", "two halves"}};
    const std::string text = serialize_tiling(p);
    CHECK(text ==
          "#TILING 1\nregion 4 0 0 1 0 1 1 0 1\nmeta note two halves\ntri 0 0 1 0 1 1\ntri 0 0 1 1 0 1\n");
    CHECK(parse_tiling(text) == p);
    // normalizing input is idempotent
    const std::string messy = "#TILING 1\n  tri 2/4 0   1 0 0 1 # trailing\n";
    const std::string once = serialize_tiling(parse_tiling(messy));
    CHECK(once == "#TILING 1\ntri 1/2 0 1 0 0 1\n");
    CHECK(serialize_tiling(parse_tiling(once)) == once);
  }

  TEST_CASE("validation verdicts") {
    CHECK(validate_patch(square()).ok);

    const ValidationReport overlap = validate_patch(patch_of({tri(0, 0, 2, 0, 0, 2), tri(1, 0, 3, 0, 1, 2)}));
    CHECK_FALSE(overlap.ok);
    CHECK(overlap.has(ViolationKind::kOverlap));

    TilingPatch missing = square();
    missing.tiles.pop_back();
    const ValidationReport m = validate_patch(missing);
    CHECK_FALSE(m.ok);
    CHECK(m.has(ViolationKind::kUnmatchedEdge));
    CHECK(m.has(ViolationKind::kAreaMismatch));

    CHECK(validate_patch(TilingPatch{}).has(ViolationKind::kEmpty));
  }

  TEST_CASE("region derivation") {
    CHECK(derive_region(patch_of({tri(0, 0, 1, 0, 0, 1)})) == Polygon{pt(0, 0), pt(1, 0), pt(0, 1)});
    TilingPatch sq = square();
    sq.region.reset();
    CHECK(derive_region(sq) == Polygon{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    // collinear boundary corner elided: two tiles under one big triangle
    CHECK(derive_region(patch_of({tri(0, 0, 1, 0, 0, 1), tri(1, 0, 2, 0, 0, 1)})) ==
          Polygon{pt(0, 0), pt(2, 0), pt(0, 1)});
  }

  TEST_CASE("annulus has a hole") {
    // Square annulus [0,3]^2 minus [1,2]^2 as 8 trapezoids split into 16 tiles.
    std::vector<Triangle> tiles;
    const Point outer[4] = {pt(0, 0), pt(3, 0), pt(3, 3), pt(0, 3)};
    const Point inner[4] = {pt(1, 1), pt(2, 1), pt(2, 2), pt(1, 2)};
    for (int i = 0; i < 4; ++i) {
      const int j = (i + 1) % 4;
      tiles.emplace_back(outer[i], outer[j], inner[j]);
      tiles.emplace_back(outer[i], inner[j], inner[i]);
    }
    const TilingPatch ring = patch_of(tiles);
    const ValidationReport r = validate_patch(ring);
    CHECK_FALSE(r.ok);
    CHECK(r.has(ViolationKind::kHole));
    try {
      (void)derive_region(ring);
      FAIL("expected a hole");
    } catch (const TilingError& e) {
      CHECK(e.kind() == ViolationKind::kHole);
    }
  }

  TEST_CASE("disconnected and pinched unions") {
    const ValidationReport apart = validate_patch(patch_of({tri(0, 0, 1, 0, 0, 1), tri(5, 5, 6, 5, 5, 6)}));
    CHECK(apart.has(ViolationKind::kDisconnected));
    const ValidationReport pinch = validate_patch(patch_of({tri(0, 0, 1, 0, 0, 1), tri(1, 0, 2, 0, 2, -1)}));
    CHECK_FALSE(pinch.ok);
    CHECK(pinch.has(ViolationKind::kNonSimpleBoundary));
  }

  TEST_CASE("edge conflict") {
    // Two tiles on the same side of a segment, overlapping only at that edge.
    const ValidationReport r = validate_patch(patch_of({tri(0, 0, 2, 0, 1, 1), tri(0, 0, 2, 0, 1, 1)}));
    CHECK_FALSE(r.ok);
    CHECK(r.has(ViolationKind::kOverlap));
  }

  TEST_CASE("region mismatch is reported") {
    TilingPatch p = square();
    p.region = Polygon{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
    CHECK_FALSE(validate_patch(p).ok);
  }

  TEST_CASE("verdict is invariant under affine maps and reordering") {
    std::vector<TilingPatch> corpus = {square(), gen_recursive_split({}),
                                       gen_two_scale_periodic({1, 1, 2, 2}),
                                       patch_of({tri(0, 0, 2, 0, 0, 2), tri(1, 0, 3, 0, 1, 2)})};
    const AffineMap maps[] = {{}, {2, 0, 0, 2, 0, 0}, {1, ratio(1, 3), 0, 1, 5, -7}, {-1, 0, 0, 1, 0, 0},
                              {ratio(3, 5), ratio(-4, 5), ratio(4, 5), ratio(3, 5), 1, 1}};
    for (const TilingPatch& p : corpus) {
      const bool ok = validate_patch(p).ok;
      for (const AffineMap& m : maps) CHECK(validate_patch(apply_affine(p, m)).ok == ok);
      TilingPatch reversed = p;
      std::reverse(reversed.tiles.begin(), reversed.tiles.end());
      CHECK(validate_patch(reversed).ok == ok);
    }
  }

  TEST_CASE("affine maps") {
    const TilingPatch p = square();
    CHECK(apply_affine(p, {}) == p);
    const TilingPatch doubled = apply_affine(p, {2, 0, 0, 2, 0, 0});
    for (std::size_t i = 0; i < p.tiles.size(); ++i) CHECK(doubled.tiles[i].area() == 4 * p.tiles[i].area());
    CHECK(total_area(doubled) == 4);
    CHECK_THROWS_AS(apply_affine(p, {1, 2, 2, 4, 0, 0}), GeometryError);
    const TilingPatch mirrored = apply_affine(p, {-1, 0, 0, 1, 0, 0});
    CHECK(signed_area(*mirrored.region) > 0);
    CHECK(mirrored.tiles[0].is_ccw() == p.tiles[0].is_ccw());
  }

  TEST_CASE("area sum equals region area for valid patches") {
    for (int depth = 0; depth <= 4; ++depth) {
      RecursiveSplitSpec spec;
      spec.depth = depth;
      const TilingPatch p = gen_recursive_split(spec);
      CHECK(total_area(p) == signed_area(*p.region));
    }
  }

  TEST_CASE("side length range") {
    const SideLengthRange one = side_length_range(patch_of({tri(0, 0, 1, 0, 0, 1)}), 64);
    CHECK(one.min.contains(1));
    const Big root2 = big_sqrt(2);
    CHECK_FALSE(root2 < Big(one.max.lo));
    CHECK_FALSE(Big(one.max.hi) < root2);

    const TilingPatch tripled = apply_affine(gen_recursive_split({}), {3, 0, 0, 3, 0, 0});
    const SideLengthRange base = side_length_range(gen_recursive_split({}), 80);
    const SideLengthRange big = side_length_range(tripled, 80);
    CHECK(abs(big.min.midpoint() - 3 * base.min.midpoint()) < ratio(1, 1000000000));
    CHECK(abs(big.max.midpoint() - 3 * base.max.midpoint()) < ratio(1, 1000000000));
    Rational bound = abs(big.max.midpoint());
    mpq_div_2exp(bound.get_mpq_t(), bound.get_mpq_t(), 80);
    CHECK(big.max.width() <= bound);
  }
}
