// Copyright 2026 The extlp Authors
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

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "extlp/errors.hpp"

namespace extlp {

// Arbitrary precision rational. gmpxx keeps results of arithmetic in
// canonical form (positive denominator, reduced).
using Rational = mpq_class;

// Parses `-12`, `3/4`, `-0.92` or `+.5` exactly. Decimals become p / 10^k.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ParseError("malformed number '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  std::size_t pos = 0;
  std::string sign;
  if (text[0] == '+' || text[0] == '-') {
    if (text[0] == '-') sign = "-";
    pos = 1;
  }
  std::string_view body = text.substr(pos);
  if (body.empty()) throw fail();

  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(mpz_class(sign + std::string(num), 10), d);
    q.canonicalize();
    return q;
  }

  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw fail();
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(mpz_class(sign + digits, 10), den);
    q.canonicalize();
    return q;
  }

  if (!all_digits(body)) throw fail();
  return Rational(mpz_class(sign + std::string(body), 10));
}

// Integers print as integers, rationals whose denominator is 2^a 5^b as
// terminating decimals, everything else as p/q. parse_rational inverts this.
inline std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();

  mpz_class den = q.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return q.get_str();

  unsigned long digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = q.get_num() * (scale / q.get_den());
  bool negative = scaled < 0;
  std::string s = mpz_class(abs(scaled)).get_str();
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  return negative ? "-" + s : s;
}

// A rational known to be >= 0. Negative scalars acting on extended values
// are undefined, so the type makes them unrepresentable.
class NonnegRational {
 public:
  NonnegRational() = default;

  explicit NonnegRational(Rational value) : value_(std::move(value)) {
    if (value_ < 0) {
      throw PreconditionError("negative value " + value_.get_str() +
                              " where a nonnegative rational is required");
    }
  }
  explicit NonnegRational(long value) : NonnegRational(Rational(value)) {}

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend NonnegRational operator+(const NonnegRational& a, const NonnegRational& b) {
    return NonnegRational(Rational(a.value_ + b.value_), Trusted{});
  }
  friend NonnegRational operator*(const NonnegRational& a, const NonnegRational& b) {
    return NonnegRational(Rational(a.value_ * b.value_), Trusted{});
  }
  friend bool operator==(const NonnegRational& a, const NonnegRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const NonnegRational& a,
                                          const NonnegRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  struct Trusted {};
  NonnegRational(Rational value, Trusted) : value_(std::move(value)) {}

  Rational value_ = 0;
};

using RatVector = std::vector<Rational>;
using NonnegVector = std::vector<NonnegRational>;

inline NonnegVector to_nonneg(const RatVector& v) {
  NonnegVector out;
  out.reserve(v.size());
  for (const Rational& q : v) out.emplace_back(q);
  return out;
}

inline RatVector to_rational(const NonnegVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const NonnegRational& q : v) out.push_back(q.value());
  return out;
}

inline Rational dot(const RatVector& u, const RatVector& v) {
  require_same_size(u.size(), v.size(), "dot");
  Rational sum = 0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

}  // namespace extlp
