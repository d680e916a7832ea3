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
#include <stdexcept>
#include <string>
#include <vector>

#include "tritile/length.hpp"
#include "tritile/rational.hpp"

namespace tritile {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    int c = cmp(a.x, b.x);
    return c != 0 ? c < 0 : a.y < b.y;
  }
};

std::string to_string(const Point& p);

struct Segment {
  Point a;
  Point b;
};

enum class Orientation { kCounterClockwise, kClockwise, kCollinear };

const char* to_string(Orientation o);

// Exact cross product (q - p) x (r - p).
Rational cross(const Point& p, const Point& q, const Point& r);
Orientation orientation(const Point& p, const Point& q, const Point& r);
// +1 for CCW, -1 for CW, 0 for collinear.
int orient_sign(const Point& p, const Point& q, const Point& r);

// True iff p lies strictly between the (distinct) endpoints of s.
bool point_on_segment_interior(const Segment& s, const Point& p);
// True iff p lies on the closed segment.
bool point_on_segment(const Segment& s, const Point& p);

Rational squared_distance(const Point& a, const Point& b);
// Squared distance from p to the closed segment s.
Rational squared_distance(const Point& p, const Segment& s);

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Nondegenerate triangle; construction rejects collinear corners. Corner
// order is kept as given. Side i runs from corner i to corner (i+1) % 3.
class Triangle {
 public:
  Triangle(Point a, Point b, Point c);

  const Point& operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  const std::array<Point, 3>& corners() const { return v_; }
  Segment side(int i) const { return {v_[i], v_[(i + 1) % 3]}; }
  bool is_ccw() const { return orientation(v_[0], v_[1], v_[2]) == Orientation::kCounterClockwise; }
  // Corners reordered to counterclockwise, starting from corner 0.
  Triangle ccw() const;

  Rational area() const;
  Rational squared_side(int i) const { return squared_distance(v_[i], v_[(i + 1) % 3]); }
  LengthExpr side_length(int i) const { return LengthExpr::sqrt_of(squared_side(i)); }
  LengthExpr perimeter() const;

  // Closed-set containment.
  bool contains(const Point& p) const;

  friend bool operator==(const Triangle& a, const Triangle& b) { return a.v_ == b.v_; }

 private:
  std::array<Point, 3> v_;
};

struct TriangleMetrics {
  Rational area;
  std::array<Rational, 3> squared_sides;  // indexed by side
  LengthExpr perimeter;
};

TriangleMetrics triangle_metrics(const Triangle& t);

// Sorted squared side lengths.
std::array<Rational, 3> squared_side_multiset(const Triangle& t);

bool congruent(const Triangle& a, const Triangle& b);

// Images of z under the symmetries of the segment xy.
Point reflect_across_line(const Point& x, const Point& y, const Point& z);
Point reflect_through_midpoint(const Point& x, const Point& y, const Point& z);
Point reflect_across_bisector(const Point& x, const Point& y, const Point& z);

enum class Reflection { kIdentity, kLineXY, kMidpointXY, kPerpBisectorXY, kNone };

const char* to_string(Reflection r);

// Which symmetry of the segment xy maps z to zp. Identity wins when several
// coincide (for example the bisector image of an isosceles apex).
Reflection reflection_classify(const Point& x, const Point& y, const Point& z, const Point& zp);

// All apexes zp for which triangle x,y,zp has the same area and perimeter as
// x,y,z: the distinct members of {z, line, midpoint, bisector images}, in
// lexicographic order.
std::vector<Point> equal_invariant_apexes(const Point& x, const Point& y, const Point& z);

}  // namespace tritile
