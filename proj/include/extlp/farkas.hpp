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

// Constructive theorems of alternatives over the rationals and over the
// rationals extended with bot/top.
//
// Every solver returns exactly one branch together with a witness; the
// verify_* functions re-check a witness against its branch conditions by
// direct evaluation and never call back into a solver.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "extlp/errors.hpp"
#include "extlp/ext_value.hpp"
#include "extlp/linalg.hpp"
#include "extlp/rational.hpp"

namespace extlp {

template <class DualVector>
class FarkasOutcome {
 public:
  struct Primal {
    NonnegVector x;
  };
  struct Dual {
    DualVector y;
  };

  static FarkasOutcome primal(NonnegVector x) { return FarkasOutcome(Primal{std::move(x)}); }
  static FarkasOutcome dual(DualVector y) { return FarkasOutcome(Dual{std::move(y)}); }

  bool is_primal() const { return std::holds_alternative<Primal>(branch_); }
  bool is_dual() const { return std::holds_alternative<Dual>(branch_); }

  const NonnegVector& x() const {
    if (!is_primal()) throw PreconditionError("outcome carries a dual certificate");
    return std::get<Primal>(branch_).x;
  }
  const DualVector& y() const {
    if (!is_dual()) throw PreconditionError("outcome carries a primal solution");
    return std::get<Dual>(branch_).y;
  }

 private:
  explicit FarkasOutcome(std::variant<Primal, Dual> branch) : branch_(std::move(branch)) {}

  std::variant<Primal, Dual> branch_;
};

// Equality form: the certificate y is unrestricted in sign.
using EqualityOutcome = FarkasOutcome<RatVector>;
// Inequality forms: the certificate y is nonnegative.
using InequalityOutcome = FarkasOutcome<NonnegVector>;

// A linear map Q^d -> Q, stored by its coefficients.
struct LinearFunctional {
  RatVector coefficients;

  std::size_t dimension() const { return coefficients.size(); }
  Rational operator()(const RatVector& w) const { return dot(coefficients, w); }
};

namespace detail {

inline RatVector axpy(const RatVector& v, const Rational& scale, const RatVector& u) {
  // v - scale * u
  RatVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] - scale * u[k];
  return out;
}

// Column-inductive construction over the first `n` functionals of `rows`.
// Either finds x >= 0 with sum_j x_j rows[j] = b, or a point y with
// rows[j](y) >= 0 for all j < n and b(y) < 0.
inline EqualityOutcome bartl_step(const std::vector<RatVector>& rows, std::size_t n,
                                  const RatVector& b) {
  if (n == 0) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k] != 0) {
        RatVector y(b.size(), Rational(0));
        y[k] = b[k] > 0 ? -1 : 1;
        return EqualityOutcome::dual(std::move(y));
      }
    }
    return EqualityOutcome::primal({});
  }

  const std::size_t m = n - 1;
  const RatVector& last = rows[m];

  EqualityOutcome head = bartl_step(rows, m, b);
  if (head.is_primal()) {
    NonnegVector x = head.x();
    x.emplace_back(0);
    return EqualityOutcome::primal(std::move(x));
  }

  const RatVector& y_head = head.y();
  Rational last_at_head = dot(last, y_head);
  if (last_at_head >= 0) return head;

  // Normalize so that last(y) = 1, then project every functional along y.
  RatVector y(y_head.size());
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = y_head[k] / last_at_head;

  std::vector<RatVector> projected;
  projected.reserve(m);
  RatVector rows_at_y(m);
  for (std::size_t i = 0; i < m; ++i) {
    rows_at_y[i] = dot(rows[i], y);
    projected.push_back(axpy(rows[i], rows_at_y[i], last));
  }
  Rational b_at_y = dot(b, y);
  RatVector b_projected = axpy(b, b_at_y, last);

  EqualityOutcome tail = bartl_step(projected, m, b_projected);
  if (tail.is_primal()) {
    NonnegVector x = tail.x();
    Rational x_last = b_at_y;
    for (std::size_t i = 0; i < m; ++i) x_last -= rows_at_y[i] * x[i].value();
    if (x_last < 0) {
      throw InternalError("Farkas recursion produced a negative coefficient " +
                          x_last.get_str());
    }
    x.emplace_back(std::move(x_last));
    return EqualityOutcome::primal(std::move(x));
  }

  const RatVector& w = tail.y();
  return EqualityOutcome::dual(axpy(w, dot(last, w), y));
}

}  // namespace detail

/// Theorem of alternatives for finitely many functionals on Q^d.
///
/// Returns either nonnegative x with sum_j x_j * rows[j] = b (as functionals,
/// i.e. as coefficient vectors), or a point y with rows[j](y) >= 0 for all j
/// and b(y) < 0. Functionals are processed in index order, so the result is
/// deterministic. Recursion depth equals rows.size().
inline EqualityOutcome farkas_bartl(const std::vector<LinearFunctional>& rows,
                                    const LinearFunctional& b) {
  std::vector<RatVector> coefficient_rows;
  coefficient_rows.reserve(rows.size());
  for (const auto& row : rows) {
    require_same_size(row.dimension(), b.dimension(), "farkas_bartl functional");
    coefficient_rows.push_back(row.coefficients);
  }
  return detail::bartl_step(coefficient_rows, coefficient_rows.size(), b.coefficients);
}

// Exactly one of: x >= 0 with A x = b, or y with A^T y >= 0 and b . y < 0.
inline EqualityOutcome solve_equality(const RatMatrix& a, const RatVector& b) {
  require_same_size(a.rows(), b.size(), "solve_equality");
  std::vector<LinearFunctional> columns;
  columns.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) columns.push_back({a.column(j)});
  return farkas_bartl(columns, {b});
}

// Exactly one of: x >= 0 with A x <= b, or y >= 0 with A^T y >= 0 and
// b . y < 0. Solved as the equality system (I | A) whose first block of
// variables are slacks.
inline InequalityOutcome solve_inequality(const RatMatrix& a, const RatVector& b) {
  require_same_size(a.rows(), b.size(), "solve_inequality");
  const std::size_t m = a.rows();
  RatMatrix augmented(m, m + a.cols(), Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    augmented(i, i) = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) augmented(i, m + j) = a(i, j);
  }
  EqualityOutcome eq = solve_equality(augmented, b);
  if (eq.is_primal()) {
    const NonnegVector& full = eq.x();
    return InequalityOutcome::primal(NonnegVector(full.begin() + static_cast<std::ptrdiff_t>(m), full.end()));
  }
  // The identity block forces y >= 0.
  return InequalityOutcome::dual(to_nonneg(eq.y()));
}

// Same alternative with the certificate condition written (-A^T) y <= 0.
// Over finite matrices the two conditions coincide.
inline InequalityOutcome solve_inequality_neg(const RatMatrix& a, const RatVector& b) {
  return solve_inequality(a, b);
}

// ---------------------------------------------------------------------------
// Verifiers

inline bool verify_primal_eq(const RatMatrix& a, const RatVector& b, const NonnegVector& x) {
  require_same_size(a.rows(), b.size(), "verify_primal_eq");
  return mul(a, to_rational(x)) == b;
}

inline bool verify_dual_eq(const RatMatrix& a, const RatVector& b, const RatVector& y) {
  require_same_size(a.rows(), b.size(), "verify_dual_eq");
  require_same_size(a.rows(), y.size(), "verify_dual_eq");
  for (const Rational& v : mul(a.transpose(), y)) {
    if (v < 0) return false;
  }
  return dot(b, y) < 0;
}

inline bool verify_primal_ineq(const RatMatrix& a, const RatVector& b, const NonnegVector& x) {
  require_same_size(a.rows(), b.size(), "verify_primal_ineq");
  RatVector ax = mul(a, to_rational(x));
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (ax[i] > b[i]) return false;
  }
  return true;
}

inline bool verify_dual_ineq(const RatMatrix& a, const RatVector& b, const NonnegVector& y) {
  return verify_dual_eq(a, b, to_rational(y));
}

inline bool verify_dual_ineq_neg(const RatMatrix& a, const RatVector& b, const NonnegVector& y) {
  require_same_size(a.rows(), b.size(), "verify_dual_ineq_neg");
  require_same_size(a.rows(), y.size(), "verify_dual_ineq_neg");
  RatVector aty = mul(a.transpose(), to_rational(y));
  for (const Rational& v : aty) {
    if (-v > 0) return false;
  }
  return dot(b, to_rational(y)) < 0;
}

// A x <= b evaluated in the extended arithmetic.
inline bool verify_primal_ext(const ExtMatrix& a, const ExtVector& b, const NonnegVector& x) {
  require_same_size(a.rows(), b.size(), "verify_primal_ext");
  return le_vec(mul_weig(a, x), b);
}

// (-A^T) y <= 0 and b . y < 0 evaluated in the extended arithmetic.
inline bool verify_dual_ext(const ExtMatrix& a, const ExtVector& b, const NonnegVector& y) {
  require_same_size(a.rows(), b.size(), "verify_dual_ext");
  ExtVector lhs = mul_weig(neg_transpose(a), y);
  if (!le_vec(lhs, ExtVector(lhs.size(), ExtValue(0)))) return false;
  return dot_weig(b, y) < ExtValue(0);
}

// The finite-style certificate A^T y >= 0, b . y < 0 evaluated in the
// extended arithmetic. Not equivalent to verify_dual_ext once A has
// infinite entries; kept to demonstrate the difference.
inline bool verify_dual_ext_transposed(const ExtMatrix& a, const ExtVector& b,
                                       const NonnegVector& y) {
  require_same_size(a.rows(), b.size(), "verify_dual_ext_transposed");
  ExtVector lhs = mul_weig(a.transpose(), y);
  if (!le_vec(ExtVector(lhs.size(), ExtValue(0)), lhs)) return false;
  return dot_weig(b, y) < ExtValue(0);
}

// ---------------------------------------------------------------------------
// Extended systems

struct ExtendedFarkasHypotheses {
  std::vector<std::size_t> rows_with_bot_and_top;       // hAi
  std::vector<std::size_t> cols_with_bot_and_top;       // hAj
  std::vector<std::size_t> rows_with_top_where_b_top;   // hAb
  std::vector<std::size_t> rows_with_bot_where_b_bot;   // hbA

  bool hold() const {
    return rows_with_bot_and_top.empty() && cols_with_bot_and_top.empty() &&
           rows_with_top_where_b_top.empty() && rows_with_bot_where_b_bot.empty();
  }

  std::vector<std::string> violated_names() const {
    std::vector<std::string> out;
    if (!rows_with_bot_and_top.empty()) out.emplace_back("hAi");
    if (!cols_with_bot_and_top.empty()) out.emplace_back("hAj");
    if (!rows_with_top_where_b_top.empty()) out.emplace_back("hAb");
    if (!rows_with_bot_where_b_bot.empty()) out.emplace_back("hbA");
    return out;
  }
};

inline ExtendedFarkasHypotheses check_extended_hypotheses(const ExtMatrix& a, const ExtVector& b) {
  require_same_size(a.rows(), b.size(), "check_extended_hypotheses");
  ExtendedFarkasHypotheses h;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool has_bot = false, has_top = false;
    for (const ExtValue& v : a.row(i)) {
      has_bot |= v.is_bot();
      has_top |= v.is_top();
    }
    if (has_bot && has_top) h.rows_with_bot_and_top.push_back(i);
    if (has_top && b[i].is_top()) h.rows_with_top_where_b_top.push_back(i);
    if (has_bot && b[i].is_bot()) h.rows_with_bot_where_b_bot.push_back(i);
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool has_bot = false, has_top = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      has_bot |= a(i, j).is_bot();
      has_top |= a(i, j).is_top();
    }
    if (has_bot && has_top) h.cols_with_bot_and_top.push_back(j);
  }
  return h;
}

/// Exactly one of: finite x >= 0 with A x <= b, or finite y >= 0 with
/// (-A^T) y <= 0 and b . y < 0, all evaluated in the extended arithmetic.
///
/// Reduction, in this order:
///  1. rows where A has bot or b has top are tautologies and are masked;
///  2. columns where A has top force x_j = 0 and are masked;
///  3. if the remaining b has bot, A x <= b is unsatisfiable and y = 0
///     already certifies it, because 0 . bot = bot;
///  4. otherwise the residual system is finite and goes to
///     solve_inequality_neg.
/// Witnesses are re-expanded with zeros at masked positions.
///
/// Throws PreconditionError naming the broken hypotheses.
inline InequalityOutcome solve_extended(const ExtMatrix& a, const ExtVector& b) {
  require_same_size(a.rows(), b.size(), "solve_extended");
  ExtendedFarkasHypotheses h = check_extended_hypotheses(a, b);
  if (!h.hold()) {
    std::string names;
    for (const auto& n : h.violated_names()) names += (names.empty() ? "" : ",") + n;
    throw PreconditionError("extended Farkas hypotheses violated: " + names);
  }

  IndexMask keep_row(a.rows(), true);
  IndexMask keep_col(a.cols(), true);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (b[i].is_top()) keep_row[i] = false;
    for (const ExtValue& v : a.row(i)) {
      if (v.is_bot()) keep_row[i] = false;
    }
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_top()) keep_col[j] = false;

  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (keep_row[i] && b[i].is_bot()) {
      return InequalityOutcome::dual(NonnegVector(a.rows(), NonnegRational(0)));
    }
  }

  ExtMatrix reduced = restrict_matrix(a, keep_row, keep_col);
  ExtVector reduced_b = restrict_vector(b, keep_row);
  RatMatrix finite_a(reduced.rows(), reduced.cols());
  for (std::size_t i = 0; i < reduced.rows(); ++i)
    for (std::size_t j = 0; j < reduced.cols(); ++j) finite_a(i, j) = reduced(i, j).finite();
  RatVector finite_b;
  for (const ExtValue& v : reduced_b) finite_b.push_back(v.finite());

  InequalityOutcome inner = solve_inequality_neg(finite_a, finite_b);
  if (inner.is_primal()) return InequalityOutcome::primal(expand_with_zeros(inner.x(), keep_col));
  return InequalityOutcome::dual(expand_with_zeros(inner.y(), keep_row));
}

/// Searches for y >= 0 with A^T y >= 0 and b . y < 0 independently of the
/// primal route: by homogeneity the strict inequality may be replaced by
/// b . y <= -1, leaving the plain system [-A^T; b^T] y <= (0, -1).
inline std::optional<NonnegVector> dual_infeasibility_search(const RatMatrix& a, const RatVector& b) {
  require_same_size(a.rows(), b.size(), "dual_infeasibility_search");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  RatMatrix system(n + 1, m, Rational(0));
  RatVector rhs(n + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) system(j, i) = -a(i, j);
  for (std::size_t i = 0; i < m; ++i) system(n, i) = b[i];
  rhs[n] = -1;
  InequalityOutcome outcome = solve_inequality(system, rhs);
  if (outcome.is_primal()) return outcome.x();
  return std::nullopt;
}

}  // namespace extlp
