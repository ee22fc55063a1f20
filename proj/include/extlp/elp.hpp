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

// Extended linear programs: minimize c . x over finite x >= 0 with A x <= b,
// where A, b and c may contain bot and top.

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extlp/errors.hpp"
#include "extlp/ext_value.hpp"
#include "extlp/farkas.hpp"
#include "extlp/linalg.hpp"

namespace extlp {

struct ExtendedLP {
  ExtMatrix a;
  ExtVector b;
  ExtVector c;

  ExtendedLP() = default;
  ExtendedLP(ExtMatrix a_, ExtVector b_, ExtVector c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    require_same_size(a.rows(), b.size(), "ExtendedLP b");
    require_same_size(a.cols(), c.size(), "ExtendedLP c");
  }

  std::size_t rows() const { return a.rows(); }
  std::size_t cols() const { return a.cols(); }

  friend bool operator==(const ExtendedLP&, const ExtendedLP&) = default;
};

// The six row/column conditions on how infinities in A may meet
// infinities in b and c.
enum class Condition : std::uint8_t {
  kNoBotTopInRow,      // hAi
  kNoBotTopInColumn,   // hAj
  kNoBotInBotRow,      // hbA: no bot in A on a row where b is bot
  kNoTopInBotColumn,   // hcA: no top in A on a column where c is bot
  kNoTopInTopRow,      // hAb: no top in A on a row where b is top
  kNoBotInTopColumn,   // hAc: no bot in A on a column where c is top
};

inline constexpr std::array<Condition, 6> kAllConditions = {
    Condition::kNoBotTopInRow,   Condition::kNoBotTopInColumn, Condition::kNoBotInBotRow,
    Condition::kNoTopInBotColumn, Condition::kNoTopInTopRow,   Condition::kNoBotInTopColumn};

inline const char* short_name(Condition c) {
  switch (c) {
    case Condition::kNoBotTopInRow: return "hAi";
    case Condition::kNoBotTopInColumn: return "hAj";
    case Condition::kNoBotInBotRow: return "hbA";
    case Condition::kNoTopInBotColumn: return "hcA";
    case Condition::kNoTopInTopRow: return "hAb";
    case Condition::kNoBotInTopColumn: return "hAc";
  }
  return "?";
}

inline const char* describe(Condition c) {
  switch (c) {
    case Condition::kNoBotTopInRow: return "A has bot and top in the same row";
    case Condition::kNoBotTopInColumn: return "A has bot and top in the same column";
    case Condition::kNoBotInBotRow: return "A has bot in a row where b is bot";
    case Condition::kNoTopInBotColumn: return "A has top in a column where c is bot";
    case Condition::kNoTopInTopRow: return "A has top in a row where b is top";
    case Condition::kNoBotInTopColumn: return "A has bot in a column where c is top";
  }
  return "?";
}

// Condition that a condition turns into under dualization.
inline Condition dual_condition(Condition c) {
  switch (c) {
    case Condition::kNoBotTopInRow: return Condition::kNoBotTopInColumn;
    case Condition::kNoBotTopInColumn: return Condition::kNoBotTopInRow;
    case Condition::kNoBotInBotRow: return Condition::kNoTopInBotColumn;
    case Condition::kNoTopInBotColumn: return Condition::kNoBotInBotRow;
    case Condition::kNoTopInTopRow: return Condition::kNoBotInTopColumn;
    case Condition::kNoBotInTopColumn: return Condition::kNoTopInTopRow;
  }
  return c;
}

/// Per-condition violating indices: rows for the row conditions, columns
/// for the column conditions.
struct ValidityReport {
  std::array<std::vector<std::size_t>, 6> violations;

  const std::vector<std::size_t>& violating(Condition c) const {
    return violations[static_cast<std::size_t>(c)];
  }
  bool holds(Condition c) const { return violating(c).empty(); }
  bool valid() const {
    for (const auto& v : violations) {
      if (!v.empty()) return false;
    }
    return true;
  }
  std::vector<Condition> violated() const {
    std::vector<Condition> out;
    for (Condition c : kAllConditions) {
      if (!holds(c)) out.push_back(c);
    }
    return out;
  }
};

inline ValidityReport validate(const ExtendedLP& p) {
  ValidityReport report;
  auto add = [&](Condition c, std::size_t idx) {
    report.violations[static_cast<std::size_t>(c)].push_back(idx);
  };
  for (std::size_t i = 0; i < p.rows(); ++i) {
    bool bot = false, top = false;
    for (const ExtValue& v : p.a.row(i)) {
      bot |= v.is_bot();
      top |= v.is_top();
    }
    if (bot && top) add(Condition::kNoBotTopInRow, i);
    if (bot && p.b[i].is_bot()) add(Condition::kNoBotInBotRow, i);
    if (top && p.b[i].is_top()) add(Condition::kNoTopInTopRow, i);
  }
  for (std::size_t j = 0; j < p.cols(); ++j) {
    bool bot = false, top = false;
    for (std::size_t i = 0; i < p.rows(); ++i) {
      bot |= p.a(i, j).is_bot();
      top |= p.a(i, j).is_top();
    }
    if (bot && top) add(Condition::kNoBotTopInColumn, j);
    if (top && p.c[j].is_bot()) add(Condition::kNoTopInBotColumn, j);
    if (bot && p.c[j].is_top()) add(Condition::kNoBotInTopColumn, j);
  }
  return report;
}

// An extended LP known to satisfy all six conditions.
class ValidELP {
 public:
  explicit ValidELP(ExtendedLP lp) : lp_(std::move(lp)) {
    ValidityReport report = validate(lp_);
    if (!report.valid()) {
      std::string names;
      for (Condition c : report.violated()) names += std::string(names.empty() ? "" : ",") + short_name(c);
      throw PreconditionError("extended LP is not valid: " + names);
    }
  }

  const ExtendedLP& lp() const { return lp_; }
  const ExtMatrix& a() const { return lp_.a; }
  const ExtVector& b() const { return lp_.b; }
  const ExtVector& c() const { return lp_.c; }

  friend bool operator==(const ValidELP&, const ValidELP&) = default;

 private:
  ExtendedLP lp_;
};

// (A, b, c) -> (-A^T, c, b).
inline ExtendedLP dualize(const ExtendedLP& p) {
  return ExtendedLP(neg_transpose(p.a), p.c, p.b);
}

inline ValidELP dualize(const ValidELP& p) {
  ExtendedLP d = dualize(p.lp());
  if (!validate(d).valid()) throw InternalError("dual of a valid LP failed validation");
  return ValidELP(std::move(d));
}

inline bool is_solution(const ExtendedLP& p, const NonnegVector& x) {
  require_same_size(p.cols(), x.size(), "is_solution");
  return le_vec(mul_weig(p.a, x), p.b);
}

// Objective value c . x of a solution x.
inline ExtValue reaches(const ExtendedLP& p, const NonnegVector& x) {
  if (!is_solution(p, x)) throw PreconditionError("reaches: x is not a solution");
  return dot_weig(p.c, x);
}

/// Optimum of an extended LP.
///
///  - value top:    infeasible
///  - value bot:    feasible and unbounded
///  - finite r:     the minimum r is attained
///  - absent:       the infimum is finite but not attained
class OptimumValue {
 public:
  static OptimumValue absent() { return OptimumValue(); }
  static OptimumValue of(ExtValue v) { return OptimumValue(std::move(v)); }

  bool is_absent() const { return !value_.has_value(); }
  const ExtValue& value() const {
    if (!value_) throw PreconditionError("optimum is absent");
    return *value_;
  }

  friend bool operator==(const OptimumValue&, const OptimumValue&) = default;

 private:
  OptimumValue() = default;
  explicit OptimumValue(ExtValue v) : value_(std::move(v)) {}

  std::optional<ExtValue> value_;
};

inline std::string to_string(const OptimumValue& v) {
  return v.is_absent() ? "absent" : to_string(v.value());
}

// Both present and p = -q.
inline bool opposites_opt(const OptimumValue& p, const OptimumValue& q) {
  if (p.is_absent() || q.is_absent()) return false;
  return p.value() == neg(q.value());
}

struct Telemetry {
  // Times the scaled-certificate branch of the optimum construction ran.
  // That branch contradicts weak duality, so this is expected to stay 0.
  std::atomic<std::uint64_t> scaled_certificate_branch{0};
};

inline Telemetry& telemetry() {
  static Telemetry t;
  return t;
}

namespace detail {

inline bool has_bot(const ExtVector& v) {
  for (const ExtValue& e : v) {
    if (e.is_bot()) return true;
  }
  return false;
}

}  // namespace detail

/// A solution x with c . x != top, or nullopt.
///
/// A bot anywhere in c makes every solution reach bot (0 . bot = bot), so
/// then any solution of A x <= b will do. Otherwise c . x != top exactly
/// when x_j = 0 on every column with c_j = top; those are added as rows
/// x_j <= 0 before calling solve_extended. The extra rows are finite with a
/// finite right-hand side and so keep the four Farkas hypotheses intact.
inline std::optional<NonnegVector> feasible_point(const ValidELP& p) {
  if (detail::has_bot(p.c())) {
    InequalityOutcome out = solve_extended(p.a(), p.b());
    if (out.is_primal()) return out.x();
    return std::nullopt;
  }

  std::vector<std::size_t> top_cols;
  for (std::size_t j = 0; j < p.c().size(); ++j) {
    if (p.c()[j].is_top()) top_cols.push_back(j);
  }
  const std::size_t m = p.a().rows();
  const std::size_t n = p.a().cols();
  ExtMatrix a(m + top_cols.size(), n, ExtValue(0));
  ExtVector b(m + top_cols.size(), ExtValue(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = p.a()(i, j);
    b[i] = p.b()[i];
  }
  for (std::size_t k = 0; k < top_cols.size(); ++k) a(m + k, top_cols[k]) = ExtValue(1);

  InequalityOutcome out = solve_extended(a, b);
  if (out.is_primal()) return out.x();
  return std::nullopt;
}

inline bool is_feasible(const ValidELP& p) { return feasible_point(p).has_value(); }

// A feasible valid LP is unbounded exactly when its dual is infeasible.
inline bool is_unbounded(const ValidELP& p) {
  return is_feasible(p) && !is_feasible(dualize(p));
}

struct Solution {
  OptimumValue optimum = OptimumValue::absent();
  std::optional<NonnegVector> x;  // primal witness (feasible or optimal point)
  std::optional<NonnegVector> y;  // dual witness when both sides are feasible
};

/// Optimum of a valid LP together with witnesses.
///
/// When P and its dual are both feasible, solve_extended is applied to
///
///     [ A   0    ]       [ b ]
///     [ 0   -A^T ]  <=   [ c ]
///     [ c   b    ]       [ 0 ]
///
/// A solution (x, y) gives c . x + b . y <= 0 and, with weak duality,
/// r = c . x is attained and bounds P. The certificate branch can only
/// happen with a strictly positive last multiplier, which would itself
/// contradict weak duality; it is handled and counted in telemetry().
inline Solution solve(const ValidELP& p) {
  Solution result;
  result.x = feasible_point(p);
  if (!result.x) {
    result.optimum = OptimumValue::of(ExtValue::top());
    return result;
  }
  ValidELP d = dualize(p);
  if (!is_feasible(d)) {
    result.optimum = OptimumValue::of(ExtValue::bot());
    return result;
  }

  const std::size_t m = p.a().rows();
  const std::size_t n = p.a().cols();
  ExtMatrix neg_at = neg_transpose(p.a());
  ExtMatrix block(m + n + 1, n + m, ExtValue(0));
  ExtVector rhs(m + n + 1, ExtValue(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) block(i, j) = p.a()(i, j);
    rhs[i] = p.b()[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) block(m + j, n + i) = neg_at(j, i);
    rhs[m + j] = p.c()[j];
  }
  for (std::size_t j = 0; j < n; ++j) block(m + n, j) = p.c()[j];
  for (std::size_t i = 0; i < m; ++i) block(m + n, n + i) = p.b()[i];

  InequalityOutcome out = solve_extended(block, rhs);
  if (out.is_primal()) {
    const NonnegVector& xy = out.x();
    NonnegVector x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(n));
    NonnegVector y(xy.begin() + static_cast<std::ptrdiff_t>(n), xy.end());
    ExtValue value = reaches(p.lp(), x);
    ExtValue dual_value = reaches(d.lp(), y);
    if (!value.is_finite() || !dual_value.is_finite() || value != neg(dual_value)) {
      throw InternalError("optimum construction produced non-opposite values " +
                          to_string(value) + " and " + to_string(dual_value));
    }
    result.optimum = OptimumValue::of(value);
    result.x = std::move(x);
    result.y = std::move(y);
    return result;
  }

  // Multipliers: y on the first m rows, x on the next n, z on the last.
  const NonnegVector& mult = out.y();
  const Rational& z = mult[m + n].value();
  if (z == 0) {
    throw InternalError("both programs feasible but the optimum system has a z = 0 certificate");
  }
  telemetry().scaled_certificate_branch.fetch_add(1, std::memory_order_relaxed);
  NonnegVector x, y;
  for (std::size_t j = 0; j < n; ++j) x.emplace_back(Rational(mult[m + j].value() / z));
  for (std::size_t i = 0; i < m; ++i) y.emplace_back(Rational(mult[i].value() / z));
  if (!is_solution(p.lp(), x) || !is_solution(d.lp(), y)) {
    throw InternalError("scaled certificate does not yield solutions");
  }
  result.optimum = OptimumValue::of(reaches(p.lp(), x));
  result.x = std::move(x);
  result.y = std::move(y);
  return result;
}

inline OptimumValue optimum(const ValidELP& p) {
  OptimumValue v = solve(p).optimum;
  if (v.is_absent()) throw InternalError("valid LP without optimum");
  return v;
}

// Every reached value is >= r. An infeasible program only reaches top,
// if anything, and is bounded by every r.
inline bool is_bounded_by(const ValidELP& p, const Rational& r) {
  OptimumValue v = optimum(p);
  if (v.value().is_top()) return true;
  if (v.value().is_bot()) return false;
  return r <= v.value().finite();
}

/// Optimum of an arbitrary extended LP, including ones that break the
/// validity conditions.
///
/// Evaluates each row under the arithmetic tables: rows with bot in A or
/// top in b always hold; a remaining row with b = bot never holds; a
/// remaining row forces x_j = 0 wherever it has top. Columns with c_j = top
/// must be zero to reach anything but top, and a bot in c makes every
/// solution reach bot. What is left is an all-finite program, solved with
/// the valid-LP pipeline.
inline OptimumValue evaluate_optimum(const ExtendedLP& p) {
  const std::size_t m = p.rows();
  const std::size_t n = p.cols();
  IndexMask active(m, true);
  IndexMask free_col(n, true);
  for (std::size_t i = 0; i < m; ++i) {
    if (p.b[i].is_top()) active[i] = false;
    for (const ExtValue& v : p.a.row(i)) {
      if (v.is_bot()) active[i] = false;
    }
    if (!active[i]) continue;
    if (p.b[i].is_bot()) return OptimumValue::of(ExtValue::top());
    for (std::size_t j = 0; j < n; ++j) {
      if (p.a(i, j).is_top()) free_col[j] = false;
    }
  }

  bool c_has_bot = detail::has_bot(p.c);
  if (!c_has_bot) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.c[j].is_top()) free_col[j] = false;
    }
  }

  ExtMatrix a = restrict_matrix(p.a, active, free_col);
  ExtVector b = restrict_vector(p.b, active);
  ExtVector c = c_has_bot ? ExtVector(a.cols(), ExtValue(0)) : restrict_vector(p.c, free_col);
  OptimumValue residual = optimum(ValidELP(ExtendedLP(a, b, c)));
  if (c_has_bot && !residual.value().is_top()) return OptimumValue::of(ExtValue::bot());
  return residual;
}

/// For x solving P and y solving its dual, whether c . x + b . y >= 0.
/// Weak duality says this always holds for valid programs.
inline bool weak_duality_check(const ValidELP& p, const NonnegVector& x, const NonnegVector& y) {
  ExtValue primal = reaches(p.lp(), x);
  ExtValue dual = reaches(dualize(p.lp()), y);
  return add(primal, dual) >= ExtValue(0);
}

// Strong duality needs at least one feasible side.
class BothInfeasibleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

inline bool strong_duality_check(const ValidELP& p) {
  OptimumValue primal = optimum(p);
  OptimumValue dual = optimum(dualize(p));
  if (primal.value().is_top() && dual.value().is_top()) {
    throw BothInfeasibleError("neither the program nor its dual is feasible");
  }
  return opposites_opt(primal, dual);
}

}  // namespace extlp
