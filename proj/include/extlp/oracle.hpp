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

// Brute-force ground truth for small programs and a random generator of
// valid extended LPs.
//
// Nothing here calls into farkas.hpp or the optimum pipeline of elp.hpp;
// the oracles are exhaustive and exponential and meant for desk-scale
// instances only.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extlp/elp.hpp"
#include "extlp/errors.hpp"
#include "extlp/ext_value.hpp"
#include "extlp/linalg.hpp"
#include "extlp/rational.hpp"

namespace extlp::oracle {

inline constexpr std::size_t kMaxDim = 6;

struct OracleResult {
  enum class Kind : std::uint8_t { kInfeasible, kUnbounded, kOptimal };

  Kind kind = Kind::kInfeasible;
  Rational value = 0;  // kOptimal only
  NonnegVector point;  // optimal x, or the ray for kUnbounded

  static OracleResult infeasible() { return {}; }
  static OracleResult unbounded(NonnegVector ray) { return {Kind::kUnbounded, 0, std::move(ray)}; }
  static OracleResult optimal(Rational v, NonnegVector x) {
    return {Kind::kOptimal, std::move(v), std::move(x)};
  }
};

namespace detail {

// Gauss-Jordan elimination. Returns the unique solution or nullopt when
// the matrix is singular.
inline std::optional<RatVector> solve_square(RatMatrix m, RatVector rhs) {
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(col, k));
      std::swap(rhs[pivot], rhs[col]);
    }
    Rational inv = 1 / m(col, col);
    for (std::size_t k = 0; k < n; ++k) m(col, k) *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t k = 0; k < n; ++k) m(r, k) -= f * m(col, k);
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

// Calls visit(indices) for every k-subset of {0, ..., total-1}.
template <class Visit>
void for_each_subset(std::size_t total, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > total) return;
  while (true) {
    visit(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == total - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Constraint set {g . x <= h} for A x <= b together with -x <= 0.
struct Halfspaces {
  std::vector<RatVector> g;
  RatVector h;
};

inline Halfspaces polyhedron(const RatMatrix& a, const RatVector& b) {
  Halfspaces hs;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    hs.g.emplace_back(a.row(i).begin(), a.row(i).end());
    hs.h.push_back(b[i]);
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    RatVector e(a.cols(), Rational(0));
    e[j] = -1;
    hs.g.push_back(std::move(e));
    hs.h.push_back(0);
  }
  return hs;
}

inline bool satisfies(const Halfspaces& hs, const RatVector& x) {
  for (std::size_t k = 0; k < hs.g.size(); ++k) {
    if (dot(hs.g[k], x) > hs.h[k]) return false;
  }
  return true;
}

inline void check_scale(std::size_t rows, std::size_t cols) {
  if (rows > kMaxDim || cols > kMaxDim) {
    throw PreconditionError("oracle scale limit exceeded: " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
}

}  // namespace detail

// All vertices of {x >= 0 : A x <= b}, one per distinct point.
inline std::vector<RatVector> feasible_vertices(const RatMatrix& a, const RatVector& b) {
  detail::check_scale(a.rows(), a.cols());
  const std::size_t n = a.cols();
  detail::Halfspaces hs = detail::polyhedron(a, b);
  std::vector<RatVector> out;
  detail::for_each_subset(hs.g.size(), n, [&](const std::vector<std::size_t>& tight) {
    RatMatrix m(n, n);
    RatVector rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) m(r, k) = hs.g[tight[r]][k];
      rhs[r] = hs.h[tight[r]];
    }
    auto x = detail::solve_square(m, rhs);
    if (!x || !detail::satisfies(hs, *x)) return;
    for (const auto& seen : out) {
      if (seen == *x) return;
    }
    out.push_back(std::move(*x));
  });
  return out;
}

// Vertices of the recession cone slice {d >= 0 : A d <= 0, sum d = 1}.
inline std::vector<RatVector> recession_rays(const RatMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<RatVector> out;
  if (n == 0) return out;
  detail::Halfspaces hs = detail::polyhedron(a, RatVector(a.rows(), Rational(0)));
  detail::for_each_subset(hs.g.size(), n - 1, [&](const std::vector<std::size_t>& tight) {
    RatMatrix m(n, n);
    RatVector rhs(n, Rational(0));
    for (std::size_t r = 0; r + 1 < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) m(r, k) = hs.g[tight[r]][k];
    }
    for (std::size_t k = 0; k < n; ++k) m(n - 1, k) = 1;
    rhs[n - 1] = 1;
    auto d = detail::solve_square(m, rhs);
    if (!d || !detail::satisfies(hs, *d)) return;
    out.push_back(std::move(*d));
  });
  return out;
}

/// Exact minimum of c . x over {x >= 0 : A x <= b} by enumerating every
/// basic point, with unboundedness detected on the recession cone.
inline OracleResult oracle_solve_finite(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  require_same_size(a.rows(), b.size(), "oracle_solve_finite b");
  require_same_size(a.cols(), c.size(), "oracle_solve_finite c");
  auto vertices = feasible_vertices(a, b);
  if (vertices.empty()) return OracleResult::infeasible();

  for (const RatVector& d : recession_rays(a)) {
    if (dot(c, d) < 0) return OracleResult::unbounded(to_nonneg(d));
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    if (dot(c, vertices[k]) < dot(c, vertices[best])) best = k;
  }
  return OracleResult::optimal(dot(c, vertices[best]), to_nonneg(vertices[best]));
}

/// Second, independent oracle by Fourier-Motzkin elimination. Introduces
/// t >= c . x and projects out x; the minimum is the largest lower bound on
/// t. Returns no point. Intended for one or two variables.
inline OracleResult oracle_fourier_motzkin(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  require_same_size(a.rows(), b.size(), "oracle_fourier_motzkin b");
  require_same_size(a.cols(), c.size(), "oracle_fourier_motzkin c");
  const std::size_t n = a.cols();
  if (n > 3) throw PreconditionError("Fourier-Motzkin oracle limited to 3 variables");

  // Each row: coefficients over (x_0, ..., x_{n-1}, t) and a right-hand side.
  struct Row {
    RatVector g;
    Rational h;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Row r{RatVector(n + 1, Rational(0)), b[i]};
    for (std::size_t j = 0; j < n; ++j) r.g[j] = a(i, j);
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Row r{RatVector(n + 1, Rational(0)), 0};
    r.g[j] = -1;
    rows.push_back(std::move(r));
  }
  {
    Row r{RatVector(n + 1, Rational(0)), 0};
    for (std::size_t j = 0; j < n; ++j) r.g[j] = c[j];
    r.g[n] = -1;
    rows.push_back(std::move(r));
  }

  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Row> pos, negs, next;
    for (auto& r : rows) {
      if (r.g[v] > 0) pos.push_back(r);
      else if (r.g[v] < 0) negs.push_back(r);
      else next.push_back(r);
    }
    for (const Row& p : pos) {
      for (const Row& q : negs) {
        // p.g[v] > 0, q.g[v] < 0: combine with positive multipliers.
        Rational sp = -q.g[v];
        Rational sq = p.g[v];
        Row r{RatVector(n + 1, Rational(0)), sp * p.h + sq * q.h};
        for (std::size_t k = 0; k <= n; ++k) r.g[k] = sp * p.g[k] + sq * q.g[k];
        next.push_back(std::move(r));
      }
    }
    rows = std::move(next);
  }

  std::optional<Rational> lower;
  for (const Row& r : rows) {
    const Rational& alpha = r.g[n];
    if (alpha == 0) {
      if (r.h < 0) return OracleResult::infeasible();
    } else if (alpha < 0) {
      Rational bound = r.h / alpha;
      if (!lower || bound > *lower) lower = bound;
    }
  }
  if (!lower) return OracleResult::unbounded({});
  return OracleResult::optimal(*lower, {});
}

/// Optimum of any extended LP straight from the definition, by splitting
/// on the support S = {j : x_j > 0}.
///
/// For a fixed support every row and the objective evaluate to bot, top,
/// or a finite linear form over the variables in S. Each support yields an
/// all-finite program over the closure x_S >= 0, solved with
/// oracle_solve_finite; closure points are themselves solutions of the
/// original program with a smaller support and the same objective value.
inline OptimumValue oracle_solve_extended(const ExtendedLP& p) {
  detail::check_scale(p.rows(), p.cols());
  const std::size_t m = p.rows();
  const std::size_t n = p.cols();

  bool c_has_bot = false;
  for (const ExtValue& v : p.c) c_has_bot |= v.is_bot();

  bool any_solution = false;
  bool reaches_bot = false;
  std::optional<Rational> best;

  for (std::uint32_t support = 0; support < (1u << n); ++support) {
    auto in_support = [&](std::size_t j) { return ((support >> j) & 1u) != 0; };
    std::vector<std::size_t> vars;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_support(j)) vars.push_back(j);
    }

    bool possible = true;
    std::vector<RatVector> rows;
    RatVector rhs;
    for (std::size_t i = 0; i < m && possible; ++i) {
      bool row_bot = false, top_in_support = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.a(i, j).is_bot()) row_bot = true;
        if (p.a(i, j).is_top() && in_support(j)) top_in_support = true;
      }
      if (row_bot) continue;             // bot <= anything
      if (p.b[i].is_top()) continue;     // anything <= top
      if (top_in_support || p.b[i].is_bot()) {
        possible = false;                // top or finite against finite/bot
        break;
      }
      RatVector g;
      for (std::size_t j : vars) g.push_back(p.a(i, j).finite());
      rows.push_back(std::move(g));
      rhs.push_back(p.b[i].finite());
    }
    if (!possible) continue;

    RatMatrix a = RatMatrix::from_rows(rows, vars.size());
    enum class Objective { kBot, kTop, kFinite } objective = Objective::kFinite;
    RatVector c;
    if (c_has_bot) {
      objective = Objective::kBot;
    } else {
      for (std::size_t j : vars) {
        if (p.c[j].is_top()) objective = Objective::kTop;
      }
    }
    if (objective == Objective::kFinite) {
      for (std::size_t j : vars) c.push_back(p.c[j].finite());
    } else {
      c.assign(vars.size(), Rational(0));
    }

    OracleResult res = oracle_solve_finite(a, rhs, c);
    if (res.kind == OracleResult::Kind::kInfeasible) continue;
    any_solution = true;
    switch (objective) {
      case Objective::kBot:
        reaches_bot = true;
        break;
      case Objective::kTop:
        break;
      case Objective::kFinite:
        if (res.kind == OracleResult::Kind::kUnbounded) {
          reaches_bot = true;
        } else if (!best || res.value < *best) {
          best = res.value;
        }
        break;
    }
  }

  if (!any_solution) return OptimumValue::of(ExtValue::top());
  if (reaches_bot) return OptimumValue::of(ExtValue::bot());
  if (!best) return OptimumValue::of(ExtValue::top());
  return OptimumValue::of(ExtValue(*best));
}

// ---------------------------------------------------------------------------
// Random instances

struct GenConfig {
  std::size_t min_rows = 1;
  std::size_t max_rows = 3;
  std::size_t min_cols = 1;
  std::size_t max_cols = 3;
  int magnitude = 3;  // finite entries drawn uniformly from [-magnitude, magnitude]
  double p_bot = 0.1;
  double p_top = 0.1;
  // Half of the samples are required to contain at least one infinity
  // (only when p_bot + p_top > 0).
  bool force_infinity_half = true;
  std::uint64_t seed = 0;
  std::size_t rejection_budget = 100000;
};

inline ExtValue random_entry(std::mt19937_64& rng, const GenConfig& cfg) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double u = unit(rng);
  if (u < cfg.p_bot) return ExtValue::bot();
  if (u < cfg.p_bot + cfg.p_top) return ExtValue::top();
  std::uniform_int_distribution<int> dist(-cfg.magnitude, cfg.magnitude);
  return ExtValue(static_cast<long>(dist(rng)));
}

inline ExtendedLP random_elp(std::mt19937_64& rng, const GenConfig& cfg) {
  std::uniform_int_distribution<std::size_t> rows(cfg.min_rows, cfg.max_rows);
  std::uniform_int_distribution<std::size_t> cols(cfg.min_cols, cfg.max_cols);
  std::size_t m = rows(rng);
  std::size_t n = cols(rng);
  ExtMatrix a(m, n);
  ExtVector b(m), c(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_entry(rng, cfg);
  for (auto& v : b) v = random_entry(rng, cfg);
  for (auto& v : c) v = random_entry(rng, cfg);
  return ExtendedLP(std::move(a), std::move(b), std::move(c));
}

inline bool has_infinity(const ExtendedLP& p) {
  auto inf = [](const ExtValue& v) { return !v.is_finite(); };
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (const ExtValue& v : p.a.row(i))
      if (inf(v)) return true;
  for (const auto& v : p.b)
    if (inf(v)) return true;
  for (const auto& v : p.c)
    if (inf(v)) return true;
  return false;
}

/// Rejection-samples an extended LP until all six validity conditions
/// hold. Deterministic in cfg.seed.
inline ValidELP gen_valid_elp(const GenConfig& cfg) {
  if (cfg.p_bot < 0 || cfg.p_top < 0 || cfg.p_bot + cfg.p_top > 1) {
    throw PreconditionError("infinity probabilities must lie in [0, 1]");
  }
  std::mt19937_64 rng(cfg.seed);
  bool want_infinity = false;
  if (cfg.force_infinity_half && cfg.p_bot + cfg.p_top > 0) {
    want_infinity = std::bernoulli_distribution(0.5)(rng);
  }
  for (std::size_t attempt = 0; attempt < cfg.rejection_budget; ++attempt) {
    ExtendedLP p = random_elp(rng, cfg);
    if (want_infinity && !has_infinity(p)) continue;
    if (validate(p).valid()) return ValidELP(std::move(p));
  }
  throw PreconditionError("gen_valid_elp: rejection budget exhausted for seed " +
                          std::to_string(cfg.seed));
}

inline RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                   int magnitude) {
  std::uniform_int_distribution<int> dist(-magnitude, magnitude);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline RatVector random_int_vector(std::mt19937_64& rng, std::size_t size, int magnitude) {
  std::uniform_int_distribution<int> dist(-magnitude, magnitude);
  RatVector v(size);
  for (auto& q : v) q = dist(rng);
  return v;
}

}  // namespace extlp::oracle
