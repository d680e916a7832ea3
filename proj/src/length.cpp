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

#include "tritile/length.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <utility>

namespace tritile {
namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// RAII holder for an MPFR float.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

Rational to_rational(const Mpfr& x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x.get());
  return q;
}

}  // namespace

LengthExpr::LengthExpr(const Rational& value) {
  if (value != 0) terms_.push_back({value, Integer(1)});
}

LengthExpr LengthExpr::sqrt_of(const Rational& r) {
  if (r < 0) throw std::domain_error("square root of negative rational " + tritile::to_string(r));
  LengthExpr e;
  if (r == 0) return e;
  // sqrt(n/d) = sqrt(n*d) / d
  Integer m = r.get_num() * r.get_den();
  Rational coef(Integer(1), r.get_den());
  e.add_term(coef, m);
  return e;
}

void LengthExpr::add_term(Rational coef, Integer radicand) {
  if (coef == 0) return;
  // Pull out square factors cheaply; a remaining large square factor is still
  // caught by the pairwise ratio test below.
  for (unsigned p : kSmallPrimes) {
    const Integer p2 = Integer(p) * p;
    if (radicand < p2) break;
    while (mpz_divisible_p(radicand.get_mpz_t(), p2.get_mpz_t())) {
      radicand /= p2;
      coef *= p;
    }
  }
  if (mpz_perfect_square_p(radicand.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    coef *= root;
    radicand = 1;
  }

  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->radicand == radicand) {
      it->coef += coef;
      if (it->coef == 0) terms_.erase(it);
      return;
    }
    Integer product = it->radicand * radicand;
    if (!mpz_perfect_square_p(product.get_mpz_t())) continue;
    // sqrt(a) = (sqrt(a*b) / b) * sqrt(b); keep the smaller radicand.
    Integer root;
    mpz_sqrt(root.get_mpz_t(), product.get_mpz_t());
    if (radicand < it->radicand) {
      it->coef *= ratio(root, radicand);
      it->radicand = radicand;
      it->coef += coef;
    } else {
      it->coef += coef * ratio(root, it->radicand);
    }
    if (it->coef == 0) {
      terms_.erase(it);
    } else {
      std::sort(terms_.begin(), terms_.end(),
                [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
    }
    return;
  }
  auto pos = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                              [](const Term& t, const Integer& r) { return t.radicand < r; });
  terms_.insert(pos, Term{std::move(coef), std::move(radicand)});
}

bool LengthExpr::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().radicand == 1);
}

Rational LengthExpr::rational_part() const {
  if (!terms_.empty() && terms_.front().radicand == 1) return terms_.front().coef;
  return Rational(0);
}

LengthExpr& LengthExpr::operator+=(const LengthExpr& other) {
  for (const auto& t : other.terms_) add_term(t.coef, t.radicand);
  return *this;
}

LengthExpr& LengthExpr::operator-=(const LengthExpr& other) {
  for (const auto& t : other.terms_) add_term(-t.coef, t.radicand);
  return *this;
}

LengthExpr& LengthExpr::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= k;
  return *this;
}

LengthExpr LengthExpr::operator-() const {
  LengthExpr e = *this;
  for (auto& t : e.terms_) t.coef = -t.coef;
  return e;
}

bool operator==(const LengthExpr& a, const LengthExpr& b) { return is_zero(a - b); }

std::string LengthExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    if (t.radicand == 1) {
      out += tritile::to_string(c);
    } else {
      if (c != 1) out += tritile::to_string(c) + "*";
      out += "sqrt(" + t.radicand.get_str() + ")";
    }
  }
  return out;
}

double LengthExpr::to_double() const {
  Interval iv = enclose(*this, 80);
  return iv.midpoint().get_d();
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::kLess: return "LT";
    case Ordering::kEqual: return "EQ";
    case Ordering::kGreater: return "GT";
  }
  return "?";
}

Rational conjugate_norm(const LengthExpr& e) {
  std::vector<Integer> radicals;
  Rational constant = 0;
  for (const auto& t : e.terms()) {
    if (t.radicand == 1) {
      constant = t.coef;
    } else {
      radicals.push_back(t.radicand);
    }
  }
  const std::size_t k = radicals.size();
  // coeffs[mask] multiplies prod_{i in mask} sqrt(radicals[i]).
  std::vector<Rational> coeffs(std::size_t{1} << k);
  coeffs[0] = constant;
  {
    std::size_t i = 0;
    for (const auto& t : e.terms()) {
      if (t.radicand != 1) coeffs[std::size_t{1} << i++] = t.coef;
    }
  }

  for (std::size_t level = k; level-- > 0;) {
    const std::size_t half = std::size_t{1} << level;
    // Products prod_{i in mask} radicals[i] for the remaining radicals.
    std::vector<Integer> mask_product(half, Integer(1));
    for (std::size_t m = 1; m < half; ++m) {
      const std::size_t low = m & (~m + 1);
      const auto bit = static_cast<std::size_t>(std::countr_zero(low));
      mask_product[m] = mask_product[m ^ low] * radicals[bit];
    }
    auto square = [&](std::size_t offset) {
      std::vector<Rational> out(half);
      for (std::size_t a = 0; a < half; ++a) {
        if (coeffs[offset + a] == 0) continue;
        for (std::size_t b = 0; b < half; ++b) {
          if (coeffs[offset + b] == 0) continue;
          out[a ^ b] += coeffs[offset + a] * coeffs[offset + b] * mask_product[a & b];
        }
      }
      return out;
    };
    std::vector<Rational> a2 = square(0);
    std::vector<Rational> b2 = square(half);
    coeffs.resize(half);
    for (std::size_t m = 0; m < half; ++m) coeffs[m] = a2[m] - radicals[level] * b2[m];
  }
  return coeffs[0];
}

bool is_zero(const LengthExpr& e) {
  if (e.terms().empty()) return true;
  std::size_t radicals = 0;
  for (const auto& t : e.terms()) radicals += t.radicand != 1;
  if (radicals > kNormRadicalLimit) return false;  // canonical form is nonempty
  return conjugate_norm(e) == 0;
}

Interval enclose(const LengthExpr& e, int bits) {
  const auto prec = static_cast<mpfr_prec_t>(bits);
  Mpfr lo(prec), hi(prec), s_lo(prec), s_hi(prec), t_lo(prec), t_hi(prec);
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  for (const auto& t : e.terms()) {
    mpfr_set_z(s_lo.get(), t.radicand.get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(s_lo.get(), s_lo.get(), MPFR_RNDD);
    mpfr_set_z(s_hi.get(), t.radicand.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(s_hi.get(), s_hi.get(), MPFR_RNDU);
    if (t.coef >= 0) {
      mpfr_mul_q(t_lo.get(), s_lo.get(), t.coef.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(t_hi.get(), s_hi.get(), t.coef.get_mpq_t(), MPFR_RNDU);
    } else {
      mpfr_mul_q(t_lo.get(), s_hi.get(), t.coef.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(t_hi.get(), s_lo.get(), t.coef.get_mpq_t(), MPFR_RNDU);
    }
    mpfr_add(lo.get(), lo.get(), t_lo.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), t_hi.get(), MPFR_RNDU);
  }
  return Interval{to_rational(lo), to_rational(hi)};
}

Interval enclose_relative(const LengthExpr& e, int rel_bits) {
  if (e.is_rational()) {
    Rational v = e.rational_part();
    return Interval{v, v};
  }
  const Rational tolerance = Rational(1) / (Integer(1) << rel_bits);
  for (int bits = rel_bits + 64;; bits *= 2) {
    Interval iv = enclose(e, bits);
    if (iv.width() <= tolerance * abs(iv.midpoint())) return iv;
    if (bits > (1 << 22)) throw PrecisionExhausted("enclose_relative failed to converge");
  }
}

Ordering compare(const LengthExpr& a, const LengthExpr& b, RefinementLimits limits) {
  const LengthExpr d = a - b;
  if (d.terms().empty()) return Ordering::kEqual;
  if (d.is_rational()) return d.rational_part() > 0 ? Ordering::kGreater : Ordering::kLess;
  bool zero_excluded = false;
  for (int bits = limits.initial_bits; bits <= limits.max_bits; bits *= 2) {
    Interval iv = enclose(d, bits);
    if (iv.lo > 0) return Ordering::kGreater;
    if (iv.hi < 0) return Ordering::kLess;
    if (!zero_excluded) {
      if (is_zero(d)) return Ordering::kEqual;
      zero_excluded = true;
    }
  }
  throw PrecisionExhausted("length comparison undecided at " + std::to_string(limits.max_bits) +
                           " bits: " + d.to_string());
}

int sign(const LengthExpr& e, RefinementLimits limits) {
  switch (compare(e, LengthExpr(), limits)) {
    case Ordering::kLess: return -1;
    case Ordering::kEqual: return 0;
    case Ordering::kGreater: return 1;
  }
  return 0;
}

std::string to_decimal(const LengthExpr& e, int digits) {
  const int rel_bits = static_cast<int>(std::ceil(digits * 3.33)) + 8;
  Interval iv = enclose_relative(e, rel_bits);
  Mpfr x(rel_bits + 16);
  const Rational mid = iv.midpoint();
  mpfr_set_q(x.get(), mid.get_mpq_t(), MPFR_RNDN);
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, x.get());
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

}  // namespace tritile
