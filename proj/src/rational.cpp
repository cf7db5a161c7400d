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

#include "spreadlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "spreadlab/errors.hpp"

namespace spreadlab {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw InputError("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    exp10 = parse_integer(s.substr(e + 1)).get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_dot) throw InputError("malformed number: '" + std::string(s) + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) --exp10;
    } else {
      throw InputError("malformed number: '" + std::string(s) + "'");
    }
  }
  if (digits.empty()) throw InputError("malformed number: '" + std::string(s) + "'");
  Rational q{BigInt(digits)};
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  if (exp10 >= 0) q *= scale; else q /= scale;
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text, bool allow_decimal) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (is_integer_text(text)) return Rational(parse_integer(text));
  if (allow_decimal) return parse_decimal(text);
  throw InputError("expected a rational 'a/b' or integer, got '" + std::string(text) + "'");
}

std::string to_string(const Rational& q) { return q.get_str(); }

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r(1);
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::uint64_t to_u64_saturating(const BigInt& z) {
  if (z <= 0) return 0;
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > 64) return std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
  return out;
}

RadicalRational RadicalRational::inverse_half_power(const Rational& base, unsigned k) {
  // base^{-k/2} = base^{-(k div 2)} * sqrt(base^{-(k mod 2)})
  Rational inv = 1 / base;
  RadicalRational r;
  r.coef = pow(inv, k / 2);
  r.radicand = (k % 2 == 1) ? inv : Rational(1);
  return r;
}

RadicalRational RadicalRational::operator*(const Rational& r) const { return {coef * r, radicand}; }

RadicalRational RadicalRational::operator*(const RadicalRational& o) const {
  return {coef * o.coef, radicand * o.radicand};
}

RadicalRational RadicalRational::operator/(const RadicalRational& o) const {
  return {coef / o.coef, radicand / o.radicand};
}

double RadicalRational::to_double() const { return coef.get_d() * std::sqrt(radicand.get_d()); }

bool less_equal(const Rational& x, const RadicalRational& y) {
  if (x <= 0) return true;
  return x * x <= y.coef * y.coef * y.radicand;
}

bool less(const Rational& x, const RadicalRational& y) {
  if (x < 0) return true;
  return x * x < y.coef * y.coef * y.radicand;
}

bool less(const RadicalRational& x, const Rational& y) {
  if (y <= 0) return false;
  return x.coef * x.coef * x.radicand < y * y;
}

}  // namespace spreadlab
