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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tritile {

// Exact fraction backed by GMP. mpq_class keeps values canonical (lowest
// terms, positive denominator) through every arithmetic operation; the only
// entry point that can produce a non-canonical value is string parsing, which
// goes through parse_rational below.
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts `p` or `p/q` with ASCII decimal digits, an optional leading `-` on
// p, and q > 0. Anything else (whitespace, `+`, exponent, zero denominator)
// is rejected.
Rational parse_rational(std::string_view text);

// Canonical text form: `p` when the denominator is 1, else `p/q`.
std::string to_string(const Rational& value);

int sign(const Rational& value);

// num / den in lowest terms. The two-argument mpq_class constructor does not
// reduce, and GMP arithmetic assumes reduced operands.
template <typename N, typename D>
Rational ratio(const N& num, const D& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace tritile
