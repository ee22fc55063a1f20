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

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "extlp/rational.hpp"

namespace extlp {

/// A value of the rationals extended with a bottom and a top element,
/// ordered bot < every finite value < top.
///
/// Bot is the "stronger" infinity: bot + top = bot and 0 . bot = bot.
/// The structure is a linearly ordered commutative monoid, not a group.
/// There is deliberately no product of two extended values.
class ExtValue {
 public:
  enum class Kind : std::uint8_t { kBot, kFinite, kTop };

  ExtValue() = default;
  ExtValue(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit embedding
  ExtValue(long value) : value_(value) {}                 // NOLINT

  static ExtValue bot() { return ExtValue(Kind::kBot); }
  static ExtValue top() { return ExtValue(Kind::kTop); }

  Kind kind() const { return kind_; }
  bool is_bot() const { return kind_ == Kind::kBot; }
  bool is_top() const { return kind_ == Kind::kTop; }
  bool is_finite() const { return kind_ == Kind::kFinite; }

  // Only meaningful for finite values.
  const Rational& finite() const {
    if (!is_finite()) throw PreconditionError("finite() on an infinite value");
    return value_;
  }

  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (!a.is_finite()) return std::strong_ordering::equal;
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit ExtValue(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Rational value_ = 0;
};

inline ExtValue add(const ExtValue& a, const ExtValue& b) {
  if (a.is_bot() || b.is_bot()) return ExtValue::bot();
  if (a.is_top() || b.is_top()) return ExtValue::top();
  return ExtValue(Rational(a.finite() + b.finite()));
}

inline ExtValue neg(const ExtValue& a) {
  switch (a.kind()) {
    case ExtValue::Kind::kBot:
      return ExtValue::top();
    case ExtValue::Kind::kTop:
      return ExtValue::bot();
    case ExtValue::Kind::kFinite:
      break;
  }
  return ExtValue(Rational(-a.finite()));
}

// Left action of a nonnegative scalar: c . bot = bot for every c,
// 0 . top = 0 and c . top = top for c > 0.
inline ExtValue smul_nn(const NonnegRational& c, const ExtValue& a) {
  switch (a.kind()) {
    case ExtValue::Kind::kBot:
      return ExtValue::bot();
    case ExtValue::Kind::kTop:
      return c.is_zero() ? ExtValue(0) : ExtValue::top();
    case ExtValue::Kind::kFinite:
      break;
  }
  return ExtValue(Rational(c.value() * a.finite()));
}

inline ExtValue operator+(const ExtValue& a, const ExtValue& b) { return add(a, b); }
inline ExtValue operator-(const ExtValue& a) { return neg(a); }

inline bool le(const ExtValue& a, const ExtValue& b) { return a <= b; }
inline bool lt(const ExtValue& a, const ExtValue& b) { return a < b; }
inline bool eq(const ExtValue& a, const ExtValue& b) { return a == b; }

inline std::string to_string(const ExtValue& a) {
  switch (a.kind()) {
    case ExtValue::Kind::kBot:
      return "bot";
    case ExtValue::Kind::kTop:
      return "top";
    case ExtValue::Kind::kFinite:
      break;
  }
  return format_rational(a.finite());
}

inline ExtValue parse_ext_value(std::string_view token) {
  if (token == "bot") return ExtValue::bot();
  if (token == "top") return ExtValue::top();
  return ExtValue(parse_rational(token));
}

inline std::ostream& operator<<(std::ostream& os, const ExtValue& a) {
  return os << to_string(a);
}

}  // namespace extlp
