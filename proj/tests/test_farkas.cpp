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

#include <gtest/gtest.h>

#include <random>

#include "extlp/farkas.hpp"
#include "extlp/oracle.hpp"
#include "test_util.hpp"

namespace extlp {
namespace {

using testing::emat;
using testing::evec;
using testing::nvec;
using testing::rmat;
using testing::rvec;

LinearFunctional fn(std::initializer_list<const char*> c) { return {rvec(c)}; }

// sum_j x_j * rows[j] == b, coordinatewise.
bool combines_to(const std::vector<LinearFunctional>& rows, const LinearFunctional& b,
                 const NonnegVector& x) {
  RatVector acc(b.dimension(), Rational(0));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += x[j].value() * rows[j].coefficients[k];
  return acc == b.coefficients;
}

TEST(FarkasBartl, Examples) {
  auto one = farkas_bartl({fn({"1"})}, fn({"2"}));
  ASSERT_TRUE(one.is_primal());
  EXPECT_EQ(one.x(), nvec({"2"}));

  auto neg = farkas_bartl({fn({"1"})}, fn({"-1"}));
  ASSERT_TRUE(neg.is_dual());
  EXPECT_EQ(neg.y(), rvec({"1"}));

  auto two = farkas_bartl({fn({"1", "0"}), fn({"0", "1"})}, fn({"3", "4"}));
  ASSERT_TRUE(two.is_primal());
  EXPECT_EQ(two.x(), nvec({"3", "4"}));
}

TEST(FarkasBartl, BaseCase) {
  auto zero = farkas_bartl({}, fn({"0", "0"}));
  ASSERT_TRUE(zero.is_primal());
  EXPECT_TRUE(zero.x().empty());

  // First basis vector with nonzero image, sign chosen so b.y < 0.
  auto dual = farkas_bartl({}, fn({"0", "5"}));
  ASSERT_TRUE(dual.is_dual());
  EXPECT_EQ(dual.y(), rvec({"0", "-1"}));
}

TEST(FarkasBartl, DimensionMismatch) {
  EXPECT_THROW(farkas_bartl({fn({"1", "2"})}, fn({"1"})), DimensionError);
}

TEST(FarkasBartl, RandomWitnessesVerify) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    std::size_t n = t % 5, d = 1 + (t / 5) % 4;
    std::vector<LinearFunctional> rows;
    for (std::size_t j = 0; j < n; ++j) rows.push_back({oracle::random_int_vector(rng, d, 3)});
    LinearFunctional b{oracle::random_int_vector(rng, d, 3)};
    auto out = farkas_bartl(rows, b);
    if (out.is_primal()) {
      ASSERT_EQ(out.x().size(), n);
      ASSERT_TRUE(combines_to(rows, b, out.x()));
    } else {
      for (const auto& r : rows) ASSERT_GE(r(out.y()), 0);
      ASSERT_LT(b(out.y()), 0);
    }
  }
}

TEST(SolveEquality, Examples) {
  auto a = solve_equality(rmat({{"1", "-1"}}), rvec({"0"}));
  ASSERT_TRUE(a.is_primal());
  EXPECT_EQ(a.x(), nvec({"0", "0"}));

  RatMatrix m = rmat({{"1"}, {"1"}});
  auto b = solve_equality(m, rvec({"1", "2"}));
  ASSERT_TRUE(b.is_dual());
  EXPECT_TRUE(verify_dual_eq(m, rvec({"1", "2"}), b.y()));
  EXPECT_TRUE(verify_dual_eq(m, rvec({"1", "2"}), rvec({"1", "-1"})));
  // b . y = 0 here, not < 0.
  EXPECT_FALSE(verify_dual_eq(m, rvec({"1", "2"}), rvec({"2", "-1"})));

  auto c = solve_equality(rmat({{"2"}}), rvec({"6"}));
  ASSERT_TRUE(c.is_primal());
  EXPECT_EQ(c.x(), nvec({"3"}));
}

TEST(SolveEquality, DegenerateShapes) {
  // No columns: A x = 0, so solvable iff b = 0.
  EXPECT_TRUE(solve_equality(RatMatrix(2, 0), rvec({"0", "0"})).is_primal());
  EXPECT_TRUE(solve_equality(RatMatrix(2, 0), rvec({"0", "1"})).is_dual());
  // No rows: x = 0 works.
  auto none = solve_equality(RatMatrix(0, 3), RatVector{});
  ASSERT_TRUE(none.is_primal());
  EXPECT_EQ(none.x(), NonnegVector(3));
  EXPECT_THROW(solve_equality(RatMatrix(2, 1), rvec({"1"})), DimensionError);
}

TEST(SolveInequality, Examples) {
  RatMatrix lunch = rmat({{"-27", "-90"}, {"-1300", "-1150"}});
  RatVector need = rvec({"-30", "-700"});
  auto a = solve_inequality(lunch, need);
  ASSERT_TRUE(a.is_primal());
  EXPECT_TRUE(verify_primal_ineq(lunch, need, a.x()));
  EXPECT_TRUE(verify_primal_ineq(lunch, need, nvec({"10/9", "0"})));

  auto b = solve_inequality(rmat({{"1"}}), rvec({"-1"}));
  ASSERT_TRUE(b.is_dual());
  EXPECT_EQ(b.y(), nvec({"1"}));

  auto c = solve_inequality(rmat({{"0"}}), rvec({"0"}));
  ASSERT_TRUE(c.is_primal());
  EXPECT_EQ(c.x(), nvec({"0"}));
}

TEST(SolveInequalityNeg, SameWitnessesNegatedTransposeCheck) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = 1 + t % 4, n = 1 + (t / 4) % 4;
    RatMatrix a = oracle::random_int_matrix(rng, m, n, 3);
    RatVector b = oracle::random_int_vector(rng, m, 3);
    auto plain = solve_inequality(a, b);
    auto negated = solve_inequality_neg(a, b);
    ASSERT_EQ(plain.is_primal(), negated.is_primal());
    if (negated.is_dual()) {
      ASSERT_EQ(plain.y(), negated.y());
      ASSERT_TRUE(verify_dual_ineq_neg(a, b, negated.y()));
      ASSERT_TRUE(verify_dual_ineq(a, b, negated.y()));
    } else {
      ASSERT_EQ(plain.x(), negated.x());
    }
  }
}

TEST(SolveInequality, AgreesWithEqualityOnSlackAugmentation) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = 1 + t % 4, n = 1 + (t / 4) % 4;
    RatMatrix a = oracle::random_int_matrix(rng, m, n, 3);
    RatVector b = oracle::random_int_vector(rng, m, 3);
    RatMatrix aug(m, m + n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      aug(i, i) = 1;
      for (std::size_t j = 0; j < n; ++j) aug(i, m + j) = a(i, j);
    }
    auto eq = solve_equality(aug, b);
    auto ineq = solve_inequality(a, b);
    ASSERT_EQ(eq.is_primal(), ineq.is_primal());
    if (ineq.is_primal()) {
      ASSERT_TRUE(verify_primal_eq(aug, b, eq.x()));
      ASSERT_TRUE(verify_primal_ineq(a, b, ineq.x()));
    }
  }
}

TEST(Verifiers, Examples) {
  ExtMatrix a = emat({{"bot"}, {"0"}});
  ExtVector b = evec({"0", "-1"});
  EXPECT_TRUE(verify_dual_ext(a, b, nvec({"0", "1"})));
  EXPECT_FALSE(verify_primal_ineq(rmat({{"1"}}), rvec({"1"}), nvec({"2"})));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    RatMatrix m = oracle::random_int_matrix(rng, 2, 2, 3);
    EXPECT_FALSE(verify_dual_ineq(m, oracle::random_int_vector(rng, 2, 3), NonnegVector(2)));
  }
  EXPECT_THROW(verify_primal_ineq(rmat({{"1"}}), rvec({"1", "2"}), nvec({"0"})), DimensionError);
}

TEST(SolveExtended, Examples) {
  auto caveat = solve_extended(emat({{"bot"}, {"0"}}), evec({"0", "-1"}));
  ASSERT_TRUE(caveat.is_dual());
  EXPECT_EQ(caveat.y(), nvec({"0", "1"}));

  auto one = solve_extended(emat({{"1"}}), evec({"1"}));
  ASSERT_TRUE(one.is_primal());
  EXPECT_TRUE(verify_primal_ext(emat({{"1"}}), evec({"1"}), one.x()));

  auto top = solve_extended(emat({{"top"}}), evec({"0"}));
  ASSERT_TRUE(top.is_primal());
  EXPECT_EQ(top.x(), nvec({"0"}));
}

TEST(SolveExtended, BotRightHandSideCertifiedByZero) {
  // The kept row has b = bot; the zero vector certifies since 0 . bot = bot.
  ExtMatrix a = emat({{"-1"}});
  ExtVector b = evec({"bot"});
  auto out = solve_extended(a, b);
  ASSERT_TRUE(out.is_dual());
  EXPECT_TRUE(verify_dual_ext(a, b, out.y()));
  // The row indicator would not: (-A^T) e = 1 > 0.
  EXPECT_FALSE(verify_dual_ext(a, b, nvec({"1"})));
}

TEST(SolveExtended, SingleBotCaveatBothFormulations) {
  ExtMatrix a = emat({{"bot"}, {"0"}});
  ExtVector b = evec({"0", "-1"});
  // Negated transpose: certificate exists.
  EXPECT_TRUE(verify_dual_ext(a, b, nvec({"0", "1"})));
  // Plain transpose: A^T y always contains bot . y = bot, never >= 0.
  for (int p = 0; p <= 6; ++p)
    for (int r = 0; r <= 6; ++r) {
      NonnegVector y{NonnegRational(Rational(p, 2)), NonnegRational(Rational(r, 3))};
      EXPECT_FALSE(verify_dual_ext_transposed(a, b, y));
    }
  // And the primal really has no solution.
  for (int p = 0; p <= 8; ++p) EXPECT_FALSE(verify_primal_ext(a, b, {NonnegRational(p)}));
}

TEST(SolveExtended, HypothesisViolations) {
  auto names = [](const ExtMatrix& a, const ExtVector& b) {
    return check_extended_hypotheses(a, b).violated_names();
  };
  EXPECT_EQ(names(emat({{"bot", "top"}}), evec({"0"})), std::vector<std::string>{"hAi"});
  EXPECT_EQ(names(emat({{"bot"}, {"top"}}), evec({"0", "0"})), std::vector<std::string>{"hAj"});
  EXPECT_EQ(names(emat({{"top"}}), evec({"top"})), std::vector<std::string>{"hAb"});
  EXPECT_EQ(names(emat({{"bot"}}), evec({"bot"})), std::vector<std::string>{"hbA"});
  EXPECT_THROW(solve_extended(emat({{"bot", "top"}}), evec({"0"})), PreconditionError);
  EXPECT_THROW(solve_extended(emat({{"bot"}}), evec({"bot"})), PreconditionError);
  try {
    solve_extended(emat({{"top"}}), evec({"top"}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("hAb"), std::string::npos);
  }
}

TEST(SolveExtended, DegenerateShapes) {
  auto no_rows = solve_extended(ExtMatrix(0, 2), ExtVector{});
  ASSERT_TRUE(no_rows.is_primal());
  EXPECT_EQ(no_rows.x(), NonnegVector(2));
  EXPECT_TRUE(solve_extended(ExtMatrix(1, 0), evec({"0"})).is_primal());
  EXPECT_TRUE(solve_extended(ExtMatrix(1, 0), evec({"-1"})).is_dual());
}

TEST(SolveExtended, FiniteInstancesMatchInequalitySolver) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = 1 + t % 4, n = 1 + (t / 4) % 4;
    RatMatrix a = oracle::random_int_matrix(rng, m, n, 3);
    RatVector b = oracle::random_int_vector(rng, m, 3);
    auto ext = solve_extended(to_ext(a), to_ext(b));
    auto fin = solve_inequality_neg(a, b);
    ASSERT_EQ(ext.is_primal(), fin.is_primal());
    if (ext.is_primal())
      ASSERT_TRUE(verify_primal_ineq(a, b, ext.x()));
    else
      ASSERT_TRUE(verify_dual_ineq_neg(a, b, ext.y()));
  }
}

TEST(SolveExtended, RandomExtendedWitnessesVerifyAndExclude) {
  oracle::GenConfig cfg;
  cfg.p_bot = cfg.p_top = 0.15;
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int t = 0; t < 3000 && checked < 400; ++t) {
    std::size_t m = 1 + t % 3, n = 1 + (t / 3) % 3;
    ExtMatrix a(m, n);
    ExtVector b(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = oracle::random_entry(rng, cfg);
      b[i] = oracle::random_entry(rng, cfg);
    }
    if (!check_extended_hypotheses(a, b).hold()) continue;
    ++checked;
    auto out = solve_extended(a, b);
    // Independent feasibility decision: minimise 0 over A x <= b with the oracle.
    ExtendedLP probe(a, b, ExtVector(n, ExtValue(0)));
    bool feasible = !oracle::oracle_solve_extended(probe).value().is_top();
    if (out.is_primal()) {
      ASSERT_TRUE(verify_primal_ext(a, b, out.x()));
      ASSERT_TRUE(feasible);
    } else {
      ASSERT_TRUE(verify_dual_ext(a, b, out.y()));
      ASSERT_FALSE(feasible);
    }
  }
  EXPECT_GE(checked, 400);
}

TEST(DualInfeasibilitySearch, Examples) {
  EXPECT_FALSE(dual_infeasibility_search(rmat({{"1"}}), rvec({"1"})).has_value());
  auto y = dual_infeasibility_search(rmat({{"1"}}), rvec({"-1"}));
  ASSERT_TRUE(y.has_value());
  EXPECT_TRUE(verify_dual_ineq(rmat({{"1"}}), rvec({"-1"}), *y));
  EXPECT_FALSE(dual_infeasibility_search(rmat({{"-27", "-90"}, {"-1300", "-1150"}}),
                                         rvec({"-30", "-700"}))
                   .has_value());
}

TEST(Exclusivity, RandomFiniteSystems) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    std::size_t m = 1 + t % 4, n = 1 + (t / 4) % 4;
    RatMatrix a = oracle::random_int_matrix(rng, m, n, 3);
    RatVector b = oracle::random_int_vector(rng, m, 3);
    auto out = solve_inequality(a, b);
    auto search = dual_infeasibility_search(a, b);
    if (out.is_primal()) {
      ASSERT_TRUE(verify_primal_ineq(a, b, out.x()));
      ASSERT_FALSE(search.has_value());
    } else {
      ASSERT_TRUE(verify_dual_ineq(a, b, out.y()));
      ASSERT_TRUE(search.has_value());
      ASSERT_TRUE(verify_dual_ineq(a, b, *search));
    }
  }
}

}  // namespace
}  // namespace extlp
