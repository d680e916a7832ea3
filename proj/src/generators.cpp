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

#include "tritile/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

namespace tritile {
namespace {

std::string point_list(const std::vector<Point>& pts) {
  std::string out;
  for (const Point& p : pts) {
    if (!out.empty()) out += ",";
    out += to_string(p.x) + "," + to_string(p.y);
  }
  return out;
}

void self_validate(const TilingPatch& p, const char* what) {
  const ValidationReport report = validate_patch(p);
  if (!report.ok) throw GeneratorError(std::string(what) + " produced an invalid tiling:\n" + report.to_text());
}

Point lerp(const Point& from, const Point& to, const Rational& s) {
  return {from.x + s * (to.x - from.x), from.y + s * (to.y - from.y)};
}

}  // namespace

TilingPatch gen_recursive_split(const RecursiveSplitSpec& spec) {
  if (spec.t <= 1) throw GeneratorError("recursive split needs t > 1");
  if (spec.depth < 0) throw GeneratorError("recursive split needs depth >= 0");
  const Triangle base = spec.base.ccw();
  TilingPatch p;
  p.metadata = {{"generator", "recursive"},
                {"base", point_list({base[0], base[1], base[2]})},
                {"t", to_string(spec.t)},
                {"depth", std::to_string(spec.depth)}};
  p.tiles.push_back(base);
  std::array<Point, 3> v = base.corners();
  for (int k = 0; k < spec.depth; ++k) {
    std::array<Point, 3> w;
    for (int i = 0; i < 3; ++i) w[i] = lerp(v[(i + 1) % 3], v[i], spec.t);
    for (int i = 0; i < 3; ++i) p.tiles.emplace_back(w[i], w[(i + 1) % 3], v[(i + 1) % 3]);
    v = w;
  }
  p.region = Polygon(v.begin(), v.end());
  if (signed_area(*p.region) < 0) std::reverse(p.region->begin() + 1, p.region->end());
  self_validate(p, "recursive split");
  return p;
}

TilingPatch gen_two_scale_periodic(const TwoScaleSpec& spec) {
  if (spec.b <= 0 || spec.h <= 0) throw GeneratorError("two-scale tiling needs b > 0 and h > 0");
  if (spec.m < 1 || spec.n < 1) throw GeneratorError("two-scale tiling needs at least one cell");
  const Rational& b = spec.b;
  const Rational& h = spec.h;
  const Rational half_h = h / 2;
  // Corners in units of (b/4, h/2); the cell is 6 x 2 units.
  static const int kCell[6][3][2] = {
      {{0, 0}, {4, 0}, {2, 2}},  // large up
      {{3, 1}, {7, 1}, {5, 3}},  // large up, offset by (3b/4, h/2)
      {{3, 1}, {4, 0}, {5, 1}},  // small down
      {{5, 1}, {6, 0}, {7, 1}},  // small down
      {{0, 2}, {1, 1}, {2, 2}},  // small down
      {{2, 2}, {3, 1}, {4, 2}},  // small down
  };
  TilingPatch p;
  p.metadata = {{"generator", "twoscale"},
                {"b", to_string(b)},
                {"h", to_string(h)},
                {"m", std::to_string(spec.m)},
                {"n", std::to_string(spec.n)}};
  const Rational qb = b / 4;
  for (int j = 0; j < spec.n; ++j) {
    for (int i = 0; i < spec.m; ++i) {
      const Rational ox = ratio(3, 2) * b * i;
      const Rational oy = h * j;
      for (const auto& tile : kCell) {
        std::array<Point, 3> c;
        for (int k = 0; k < 3; ++k) c[k] = {ox + qb * tile[k][0], oy + half_h * tile[k][1]};
        p.tiles.emplace_back(c[0], c[1], c[2]);
      }
    }
  }
  self_validate(p, "two-scale tiling");
  return p;
}

TilingPatch gen_convex_triangulation(const std::vector<Point>& vertices, SplitStrategy strategy,
                                     std::uint64_t seed) {
  if (vertices.size() < 3 || !is_strictly_convex(vertices)) {
    throw GeneratorError("convex triangulation needs a strictly convex counterclockwise polygon");
  }
  TilingPatch p;
  p.region = vertices;
  p.metadata = {{"generator", "convex"},
                {"k", std::to_string(vertices.size())},
                {"strategy", strategy == SplitStrategy::kFan ? "fan" : "random"},
                {"seed", std::to_string(seed)}};
  const std::size_t k = vertices.size();
  if (strategy == SplitStrategy::kFan) {
    for (std::size_t i = 1; i + 1 < k; ++i) p.tiles.emplace_back(vertices[0], vertices[i], vertices[i + 1]);
  } else {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> pending;
    pending.emplace_back(k);
    for (std::size_t i = 0; i < k; ++i) pending.back()[i] = i;
    while (!pending.empty()) {
      std::vector<std::size_t> poly = std::move(pending.back());
      pending.pop_back();
      const std::size_t n = poly.size();
      if (n == 3) {
        p.tiles.emplace_back(vertices[poly[0]], vertices[poly[1]], vertices[poly[2]]);
        continue;
      }
      const std::size_t i = rng() % n;
      const std::size_t j = (i + 2 + rng() % (n - 3)) % n;
      std::vector<std::size_t> left, right;
      for (std::size_t s = i;; s = (s + 1) % n) {
        left.push_back(poly[s]);
        if (s == j) break;
      }
      for (std::size_t s = j;; s = (s + 1) % n) {
        right.push_back(poly[s]);
        if (s == i) break;
      }
      pending.push_back(std::move(right));
      pending.push_back(std::move(left));
    }
  }
  self_validate(p, "convex triangulation");
  return p;
}

std::vector<Point> rational_circle_polygon(int k, std::uint64_t seed) {
  if (k < 3) throw GeneratorError("polygon needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  // u = tan(theta / 2) maps to ((1 - u^2) / (1 + u^2), 2u / (1 + u^2)) and is
  // increasing in theta, so sorted parameters give counterclockwise order.
  std::set<Rational> params;
  while (params.size() < static_cast<std::size_t>(k)) {
    const long num = static_cast<long>(rng() % 4001) - 2000;
    params.insert(ratio(num, 100));
  }
  std::vector<Point> out;
  for (const Rational& u : params) {
    const Rational d = 1 + u * u;
    out.push_back({(1 - u * u) / d, 2 * u / d});
  }
  return out;
}

const char* to_string(PairKind k) {
  switch (k) {
    case PairKind::kLine: return "line";
    case PairKind::kMidpoint: return "midpoint";
    case PairKind::kBisector: return "bisector";
  }
  return "?";
}

TilingPatch gen_reflected_pair(const Triangle& t, PairKind kind) {
  const Point& x = t[0];
  const Point& y = t[1];
  const Point& z = t[2];
  Point zp;
  switch (kind) {
    case PairKind::kLine: zp = reflect_across_line(x, y, z); break;
    case PairKind::kMidpoint: zp = reflect_through_midpoint(x, y, z); break;
    case PairKind::kBisector: zp = reflect_across_bisector(x, y, z); break;
  }
  TilingPatch p;
  p.metadata = {{"generator", "pair"}, {"kind", to_string(kind)}};
  p.tiles = {t, Triangle(x, y, zp)};
  if (kind != PairKind::kBisector) self_validate(p, "reflected pair");
  return p;
}

TilingPatch refine_random(const TilingPatch& p, int steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TilingPatch out = p;
  for (int s = 0; s < steps; ++s) {
    const std::size_t id = rng() % out.tiles.size();
    const Triangle tri = out.tiles[id];
    if (rng() % 3 == 0) {
      const Point g{(tri[0].x + tri[1].x + tri[2].x) / 3, (tri[0].y + tri[1].y + tri[2].y) / 3};
      out.tiles[id] = Triangle(tri[0], tri[1], g);
      out.tiles.emplace_back(tri[1], tri[2], g);
      out.tiles.emplace_back(tri[2], tri[0], g);
    } else {
      const int corner = static_cast<int>(rng() % 3);
      const long den = 2 + static_cast<long>(rng() % 7);
      const long num = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den - 1));
      const Point& a = tri[corner];
      const Point& b = tri[(corner + 1) % 3];
      const Point& c = tri[(corner + 2) % 3];
      const Point q = lerp(b, c, ratio(num, den));
      out.tiles[id] = Triangle(a, b, q);
      out.tiles.emplace_back(a, q, c);
    }
  }
  out.metadata.emplace_back("refine", std::to_string(steps) + " " + std::to_string(seed));
  self_validate(out, "random refinement");
  return out;
}

}  // namespace tritile
