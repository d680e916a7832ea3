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

#include "tritile/geometry.hpp"

#include <algorithm>

namespace tritile {

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::kCounterClockwise: return "CCW";
    case Orientation::kClockwise: return "CW";
    case Orientation::kCollinear: return "COLLINEAR";
  }
  return "?";
}

Rational cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

int orient_sign(const Point& p, const Point& q, const Point& r) { return sgn(cross(p, q, r)); }

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  switch (orient_sign(p, q, r)) {
    case 1: return Orientation::kCounterClockwise;
    case -1: return Orientation::kClockwise;
    default: return Orientation::kCollinear;
  }
}

bool point_on_segment(const Segment& s, const Point& p) {
  if (orient_sign(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

bool point_on_segment_interior(const Segment& s, const Point& p) {
  return p != s.a && p != s.b && point_on_segment(s, p);
}

Rational squared_distance(const Point& a, const Point& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Rational squared_distance(const Point& p, const Segment& s) {
  const Rational dx = s.b.x - s.a.x;
  const Rational dy = s.b.y - s.a.y;
  const Rational len2 = dx * dx + dy * dy;
  Rational u = ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2;
  if (u <= 0) return squared_distance(p, s.a);
  if (u >= 1) return squared_distance(p, s.b);
  Point foot{s.a.x + u * dx, s.a.y + u * dy};
  return squared_distance(p, foot);
}

Triangle::Triangle(Point a, Point b, Point c) : v_{std::move(a), std::move(b), std::move(c)} {
  if (orientation(v_[0], v_[1], v_[2]) == Orientation::kCollinear) {
    throw GeometryError("degenerate triangle " + to_string(v_[0]) + " " + to_string(v_[1]) + " " +
                        to_string(v_[2]));
  }
}

Triangle Triangle::ccw() const { return is_ccw() ? *this : Triangle(v_[0], v_[2], v_[1]); }

Rational Triangle::area() const { return abs(cross(v_[0], v_[1], v_[2])) / 2; }

LengthExpr Triangle::perimeter() const { return side_length(0) + side_length(1) + side_length(2); }

bool Triangle::contains(const Point& p) const {
  const int s0 = orient_sign(v_[0], v_[1], p);
  const int s1 = orient_sign(v_[1], v_[2], p);
  const int s2 = orient_sign(v_[2], v_[0], p);
  const bool has_neg = s0 < 0 || s1 < 0 || s2 < 0;
  const bool has_pos = s0 > 0 || s1 > 0 || s2 > 0;
  return !(has_neg && has_pos);
}

TriangleMetrics triangle_metrics(const Triangle& t) {
  TriangleMetrics m;
  m.area = t.area();
  for (int i = 0; i < 3; ++i) m.squared_sides[static_cast<std::size_t>(i)] = t.squared_side(i);
  m.perimeter = t.perimeter();
  return m;
}

std::array<Rational, 3> squared_side_multiset(const Triangle& t) {
  std::array<Rational, 3> s{t.squared_side(0), t.squared_side(1), t.squared_side(2)};
  std::sort(s.begin(), s.end());
  return s;
}

bool congruent(const Triangle& a, const Triangle& b) {
  return squared_side_multiset(a) == squared_side_multiset(b);
}

Point reflect_across_line(const Point& x, const Point& y, const Point& z) {
  const Rational dx = y.x - x.x;
  const Rational dy = y.y - x.y;
  const Rational u = ((z.x - x.x) * dx + (z.y - x.y) * dy) / (dx * dx + dy * dy);
  const Point foot{x.x + u * dx, x.y + u * dy};
  return {2 * foot.x - z.x, 2 * foot.y - z.y};
}

Point reflect_through_midpoint(const Point& x, const Point& y, const Point& z) {
  return {x.x + y.x - z.x, x.y + y.y - z.y};
}

Point reflect_across_bisector(const Point& x, const Point& y, const Point& z) {
  const Rational dx = y.x - x.x;
  const Rational dy = y.y - x.y;
  const Rational mx = (x.x + y.x) / 2;
  const Rational my = (x.y + y.y) / 2;
  // z - 2 * ((z - m) . d / |d|^2) * d
  const Rational u = ((z.x - mx) * dx + (z.y - my) * dy) / (dx * dx + dy * dy);
  return {z.x - 2 * u * dx, z.y - 2 * u * dy};
}

const char* to_string(Reflection r) {
  switch (r) {
    case Reflection::kIdentity: return "IDENTITY";
    case Reflection::kLineXY: return "LINE_XY";
    case Reflection::kMidpointXY: return "MIDPOINT_XY";
    case Reflection::kPerpBisectorXY: return "PERP_BISECTOR_XY";
    case Reflection::kNone: return "NONE";
  }
  return "?";
}

Reflection reflection_classify(const Point& x, const Point& y, const Point& z, const Point& zp) {
  if (zp == z) return Reflection::kIdentity;
  if (zp == reflect_across_line(x, y, z)) return Reflection::kLineXY;
  if (zp == reflect_through_midpoint(x, y, z)) return Reflection::kMidpointXY;
  if (zp == reflect_across_bisector(x, y, z)) return Reflection::kPerpBisectorXY;
  return Reflection::kNone;
}

std::vector<Point> equal_invariant_apexes(const Point& x, const Point& y, const Point& z) {
  std::vector<Point> out{z, reflect_across_line(x, y, z), reflect_through_midpoint(x, y, z),
                         reflect_across_bisector(x, y, z)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tritile
