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

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritile/rational.hpp"

namespace tritile {

// Closed rational enclosure [lo, hi] of a real number.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// A real number of the form sum_i c_i * sqrt(r_i) with rational c_i and
// nonnegative rational r_i, held exactly.
//
// Terms are kept in a canonical form: every radicand is a squarefree-reduced
// positive integer, no two radicands differ by a rational square factor, a
// rational part is stored with radicand 1, and zero coefficients are dropped.
// Because square roots of distinct squarefree integers are linearly
// independent over Q, the canonical form of zero is the empty sum.
class LengthExpr {
 public:
  struct Term {
    Rational coef;
    Integer radicand;
  };

  LengthExpr() = default;
  explicit LengthExpr(const Rational& value);

  // sqrt(r) for r >= 0. Throws std::domain_error on negative input.
  static LengthExpr sqrt_of(const Rational& r);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_rational() const;
  // Coefficient of the radicand-1 term.
  Rational rational_part() const;

  LengthExpr& operator+=(const LengthExpr& other);
  LengthExpr& operator-=(const LengthExpr& other);
  LengthExpr& operator*=(const Rational& k);

  friend LengthExpr operator+(LengthExpr a, const LengthExpr& b) { return a += b; }
  friend LengthExpr operator-(LengthExpr a, const LengthExpr& b) { return a -= b; }
  friend LengthExpr operator*(LengthExpr a, const Rational& k) { return a *= k; }
  friend LengthExpr operator*(const Rational& k, LengthExpr a) { return a *= k; }
  LengthExpr operator-() const;

  // Structural equality of canonical forms; coincides with numeric equality.
  friend bool operator==(const LengthExpr& a, const LengthExpr& b);

  // Human-readable form, e.g. `3*sqrt(2) - 1/2`.
  std::string to_string() const;
  double to_double() const;

 private:
  void add_term(Rational coef, Integer radicand);

  std::vector<Term> terms_;  // sorted by radicand
};

enum class Ordering { kLess, kEqual, kGreater };

const char* to_string(Ordering o);

// Bit limits for the interval refinement used by compare(). Refinement starts
// at `initial_bits` and doubles up to `max_bits`.
struct RefinementLimits {
  int initial_bits = 64;
  int max_bits = 4096;
};

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact ordering of two length expressions. Equality is decided exactly by
// the conjugate norm; strict order by interval refinement.
Ordering compare(const LengthExpr& a, const LengthExpr& b, RefinementLimits limits = {});

// Sign of e: -1, 0, +1.
int sign(const LengthExpr& e, RefinementLimits limits = {});

// Exact zero test through the product of all sign conjugates. The product is
// formed by eliminating one radical at a time, (A + B*sqrt(r)) -> A^2 - r*B^2,
// so it stays in exact rational arithmetic. Cost grows as 4^k in the number k
// of distinct radicals.
Rational conjugate_norm(const LengthExpr& e);
bool is_zero(const LengthExpr& e);

// Number of distinct irrational radicals above which is_zero() falls back to
// the canonical-form test instead of forming the conjugate norm.
inline constexpr std::size_t kNormRadicalLimit = 8;

// Enclosure of e computed with `bits` of working precision (directed
// rounding, so the true value is always inside).
Interval enclose(const LengthExpr& e, int bits);

// Enclosure whose width is at most 2^-rel_bits * |midpoint| (or exactly the
// point itself when e == 0).
Interval enclose_relative(const LengthExpr& e, int rel_bits);

// Decimal rendering of an enclosure's midpoint with `digits` significant digits.
std::string to_decimal(const LengthExpr& e, int digits);

}  // namespace tritile
