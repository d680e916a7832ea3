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

#include <mpfr.h>

#include <concepts>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tritile/geometry.hpp"
#include "tritile/tiling.hpp"

namespace tritile::test {

inline Point pt(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }
template <std::integral I, std::integral J>
Point pt(I x, J y) {
  return {Rational(static_cast<long>(x)), Rational(static_cast<long>(y))};
}

inline Triangle tri(long x1, long y1, long x2, long y2, long x3, long y3) {
  return Triangle(pt(x1, y1), pt(x2, y2), pt(x3, y3));
}

inline TilingPatch patch_of(std::vector<Triangle> tiles) {
  TilingPatch p;
  p.tiles = std::move(tiles);
  return p;
}

// Small random rationals p/q with |p| <= span, 1 <= q <= den.
class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}
  Rational next(long span = 40, long den = 7) {
    const long p = static_cast<long>(rng_() % static_cast<std::uint64_t>(2 * span + 1)) - span;
    const long q = 1 + static_cast<long>(rng_() % static_cast<std::uint64_t>(den));
    return ratio(p, q);
  }
  Point point(long span = 40, long den = 7) { return {next(span, den), next(span, den)}; }
  Triangle triangle(long span = 40, long den = 7) {
    while (true) {
      Point a = point(span, den), b = point(span, den), c = point(span, den);
      if (orientation(a, b, c) != Orientation::kCollinear) return Triangle(a, b, c);
    }
  }
  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

// RAII MPFR value at a fixed working precision, for numeric oracles that do
// not go through the library's own enclosure code.
class Big {
 public:
  static constexpr mpfr_prec_t kPrec = 256;
  Big() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
  explicit Big(const Rational& q) : Big() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  explicit Big(double d) : Big() { mpfr_set_d(v_, d, MPFR_RNDN); }
  Big(const Big& o) : Big() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Big& operator=(const Big& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Big() { mpfr_clear(v_); }

  friend Big operator+(const Big& a, const Big& b) { Big r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Big operator-(const Big& a, const Big& b) { Big r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Big operator*(const Big& a, const Big& b) { Big r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Big operator/(const Big& a, const Big& b) { Big r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend bool operator<(const Big& a, const Big& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  Big sqrt() const { Big r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
  Big abs() const { Big r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  std::string sig(int n) const {
    std::vector<char> buf(static_cast<std::size_t>(n) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", n, v_);
    return buf.data();
  }
  std::string digits(int n) const {
    std::vector<char> buf(static_cast<std::size_t>(n) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", n - 1, v_);
    return buf.data();
  }

 private:
  mpfr_t v_;
};

inline Big big_sqrt(long n) { return Big(Rational(n)).sqrt(); }

// Intersections of the ellipse |p - x| + |p - y| = S with the two lines at
// distance H from line xy, found by bisection in the (u, v) frame of xy.
inline std::vector<std::pair<Big, Big>> ellipse_oracle(const Point& x, const Point& y, const Point& z) {
  const Big dx(y.x - x.x), dy(y.y - x.y);
  const Big len = (dx * dx + dy * dy).sqrt();
  const Big zu = (Big(z.x - x.x) * dx + Big(z.y - x.y) * dy) / len;
  const Big zv = (dx * Big(z.y - x.y) - dy * Big(z.x - x.x)) / len;
  const Big h = zv.abs();
  auto f = [&](const Big& u) {
    return (u * u + h * h).sqrt() + ((u - len) * (u - len) + h * h).sqrt();
  };
  const Big target = f(zu);
  const Big mid = len / Big(2.0);
  std::vector<std::pair<Big, Big>> out;
  for (double side : {1.0, -1.0}) {
    const Big v = h * Big(side);
    if ((f(mid) - target).abs() < Big(1e-60)) {
      out.emplace_back(mid, v);
      continue;
    }
    for (double dir : {-1.0, 1.0}) {
      Big lo = mid, hi = mid + Big(dir) * (target + len);
      for (int it = 0; it < 400; ++it) {
        const Big m = (lo + hi) / Big(2.0);
        if ((f(m) - target).sign() < 0) {
          lo = m;
        } else {
          hi = m;
        }
      }
      out.emplace_back((lo + hi) / Big(2.0), v);
    }
  }
  return out;
}

// Unordered tile pairs with an identical full side, by direct comparison.
inline std::set<std::pair<TileId, TileId>> brute_force_shared(const TilingPatch& p) {
  std::set<std::pair<TileId, TileId>> out;
  for (TileId a = 0; a < p.tiles.size(); ++a) {
    for (TileId b = a + 1; b < p.tiles.size(); ++b) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const Segment s = p.tiles[a].side(i);
          const Segment t = p.tiles[b].side(j);
          if ((s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a)) out.insert({a, b});
        }
      }
    }
  }
  return out;
}


}  // namespace tritile::test
