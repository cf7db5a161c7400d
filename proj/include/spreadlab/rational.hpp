// Copyright 2026 The Spreadlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPREADLAB_RATIONAL_HPP
#define SPREADLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace spreadlab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Accepts "a/b" or "a". With allow_decimal, also "0.3" and "1e-2", converted
// exactly from the decimal text (never through a double).
Rational parse_rational(std::string_view text, bool allow_decimal = false);

std::string to_string(const Rational& q);

// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

BigInt floor(const Rational& q);

// Saturating conversion; values above UINT64_MAX clamp.
std::uint64_t to_u64_saturating(const BigInt& z);

// A nonnegative number of the form coef * sqrt(radicand), radicand > 0.
// Holds (C/2)^{-k/2} and everything multiplied by it exactly, so odd k never
// forces a floating-point comparison.
struct RadicalRational {
  Rational coef{1};
  Rational radicand{1};

  static RadicalRational rational(const Rational& r) { return {r, Rational(1)}; }
  // base^{-k/2} for rational base > 0.
  static RadicalRational inverse_half_power(const Rational& base, unsigned k);

  RadicalRational operator*(const Rational& r) const;
  RadicalRational operator*(const RadicalRational& o) const;
  RadicalRational operator/(const RadicalRational& o) const;

  double to_double() const;
};

// x <= y and x < y, exact. Both sides are compared by squaring nonnegatives.
bool less_equal(const Rational& x, const RadicalRational& y);
bool less(const Rational& x, const RadicalRational& y);
bool less(const RadicalRational& x, const Rational& y);

}  // namespace spreadlab

#endif  // SPREADLAB_RATIONAL_HPP
