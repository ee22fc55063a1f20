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

#include <set>

#include "extlp/elp.hpp"
#include "extlp/oracle.hpp"
#include "test_util.hpp"

namespace extlp {
namespace {

using namespace extlp::testing;

OptimumValue val(const char* token) { return OptimumValue::of(ev(token)); }

std::vector<Condition> violated(const ExtendedLP& p) { return validate(p).violated(); }

TEST(Validate, SingleViolationFixtures) {
  EXPECT_EQ(violated(p1()), std::vector<Condition>{Condition::kNoBotTopInColumn});
  EXPECT_EQ(violated(d1()), std::vector<Condition>{Condition::kNoBotTopInRow});
  EXPECT_EQ(violated(p2()), std::vector<Condition>{Condition::kNoBotInBotRow});
  EXPECT_EQ(violated(d2()), std::vector<Condition>{Condition::kNoTopInBotColumn});
  EXPECT_EQ(violated(p3()), std::vector<Condition>{Condition::kNoTopInTopRow});
  EXPECT_EQ(violated(d3()), std::vector<Condition>{Condition::kNoBotInTopColumn});
  EXPECT_EQ(validate(p3()).violating(Condition::kNoTopInTopRow), std::vector<std::size_t>{0});
}

TEST(Validate, FiniteProgramsAreValid) {
  EXPECT_TRUE(validate(lunch_lp()).valid());
  EXPECT_NO_THROW(ValidELP{lunch_lp()});
  EXPECT_THROW(ValidELP{p1()}, PreconditionError);
}

TEST(Dualize, Examples) {
  EXPECT_EQ(dualize(p1()), d1());
  EXPECT_EQ(dualize(p2()), d2());
  EXPECT_EQ(dualize(p3()), d3());
  EXPECT_EQ(dualize(d3()), p3());
}

TEST(Dualize, InvolutionAndConditionSwap) {
  oracle::GenConfig cfg;
  cfg.p_bot = cfg.p_top = 0.2;
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    ExtendedLP p = oracle::random_elp(rng, cfg);
    ExtendedLP d = dualize(p);
    ASSERT_EQ(dualize(d), p);
    ValidityReport rp = validate(p), rd = validate(d);
    for (Condition c : kAllConditions) ASSERT_EQ(rp.violating(c), rd.violating(dual_condition(c)));
    if (rp.valid()) {
      ASSERT_EQ(dualize(dualize(ValidELP(p))), ValidELP(p));
    }
  }
}

TEST(IsSolution, Examples) {
  EXPECT_TRUE(is_solution(lunch_lp(), nvec({"190/573", "134/573"})));
  EXPECT_FALSE(is_solution(lunch_lp(), nvec({"0", "0"})));
  EXPECT_TRUE(is_solution(elp({{"bot"}}, {"0"}, {"0"}), nvec({"5"})));
  EXPECT_THROW(is_solution(lunch_lp(), nvec({"1"})), DimensionError);
}

TEST(Reaches, Examples) {
  EXPECT_EQ(reaches(lunch_lp(), nvec({"190/573", "134/573"})), ev("4093/5730"));
  EXPECT_EQ(reaches(elp({{"0", "0"}}, {"0"}, {"top", "1"}), nvec({"0", "1"})), ev("1"));
  EXPECT_EQ(reaches(elp({{"0"}}, {"0"}, {"bot"}), nvec({"0"})), ExtValue::bot());
  EXPECT_THROW(reaches(lunch_lp(), nvec({"0", "0"})), PreconditionError);
}

TEST(IsFeasible, Examples) {
  EXPECT_TRUE(is_feasible(ValidELP(lunch_lp())));
  ExtendedLP bot_rhs = elp({{"0"}}, {"bot"}, {"0"});
  ASSERT_TRUE(validate(bot_rhs).valid());
  EXPECT_FALSE(is_feasible(ValidELP(bot_rhs)));
  EXPECT_EQ(evaluate_optimum(p1()), val("0"));
}

TEST(IsFeasible, BotAndTopInObjective) {
  // Every solution reaches bot, so x_1 > 0 is not needed.
  ValidELP p(elp({{"1", "0"}, {"0", "-1"}}, {"0", "-1"}, {"bot", "top"}));
  auto x = feasible_point(p);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(reaches(p.lp(), *x), ExtValue::bot());
  EXPECT_EQ(optimum(p), val("bot"));
}

TEST(IsFeasible, TopObjectiveColumnMustStayZero) {
  // Only x_1 can satisfy the row, but it costs top.
  ValidELP p(elp({{"0", "-1"}}, {"-1"}, {"0", "top"}));
  EXPECT_FALSE(is_feasible(p));
  EXPECT_EQ(optimum(p), val("top"));
}

TEST(Boundedness, Examples) {
  // P1 and D1 break validity; their finite parts are checked through the
  // raw evaluator.
  EXPECT_EQ(evaluate_optimum(p1()), val("0"));
  EXPECT_EQ(evaluate_optimum(d1()), val("bot"));

  ValidELP lunch(lunch_lp());
  EXPECT_FALSE(is_unbounded(lunch));
  EXPECT_TRUE(is_bounded_by(lunch, q("4093/5730")));
  EXPECT_FALSE(is_bounded_by(lunch, q("4093/5730") + 1));
  EXPECT_FALSE(is_bounded_by(lunch, q("4093/5730") + Rational(1, 1000000)));
}

TEST(Boundedness, InfeasibleIsBoundedButNotUnbounded) {
  ValidELP p(elp({{"1"}}, {"-1"}, {"0"}));
  EXPECT_FALSE(is_unbounded(p));
  EXPECT_TRUE(is_bounded_by(p, Rational(1000)));
}

TEST(Boundedness, RayMakesFeasibleProgramUnbounded) {
  struct Case {
    ExtendedLP p;
    NonnegVector ray;
  };
  std::vector<Case> cases = {
      {elp({{"-1", "1"}}, {"0"}, {"0", "-1"}), nvec({"1", "1"})},
      {elp({{"top", "-1"}}, {"0"}, {"5", "-1"}), nvec({"0", "1"})},
      {elp({{"bot", "2"}, {"1", "-1"}}, {"3", "0"}, {"-2", "0"}), nvec({"1", "1"})},
  };
  for (const auto& [p, ray] : cases) {
    ValidELP v(p);
    ASSERT_TRUE(is_feasible(v));
    // A ray + 0 . (-b) <= 0 and c . ray < 0.
    ExtVector ar = mul_weig(p.a, ray);
    for (std::size_t i = 0; i < ar.size(); ++i)
      ASSERT_LE(add(ar[i], smul_nn(NonnegRational(0), neg(p.b[i]))), ExtValue(0));
    ASSERT_LT(dot_weig(p.c, ray), ExtValue(0));
    EXPECT_TRUE(is_unbounded(v));
    EXPECT_EQ(optimum(v), val("bot"));
  }
}

TEST(Boundedness, ReachingBelowEveryBoundMeansUnbounded) {
  ExtendedLP p = elp({{"-1"}}, {"0"}, {"-1"});
  for (long r : {-1000L, -3L, 0L, 7L}) {
    NonnegVector x{NonnegRational(Rational(std::abs(r) + 1))};
    ASSERT_TRUE(is_solution(p, x));
    ASSERT_LE(reaches(p, x), ExtValue(Rational(r)));
  }
  EXPECT_TRUE(is_unbounded(ValidELP(p)));
}

TEST(Optimum, Examples) {
  Solution lunch = solve(ValidELP(lunch_lp()));
  EXPECT_EQ(lunch.optimum, val("4093/5730"));
  ASSERT_TRUE(lunch.x && lunch.y);
  EXPECT_EQ(reaches(lunch_lp(), *lunch.x), ev("4093/5730"));
  EXPECT_EQ(reaches(dualize(lunch_lp()), *lunch.y), ev("-4093/5730"));

  ValidELP top(lunch_lp_no_lentils());
  EXPECT_EQ(optimum(top), val("46/45"));
  EXPECT_EQ(optimum(dualize(top)), val("-46/45"));
  EXPECT_EQ(solve(top).x, nvec({"10/9", "0"}));
}

TEST(OppositesOpt, Examples) {
  EXPECT_TRUE(opposites_opt(val("-3"), val("3")));
  EXPECT_FALSE(opposites_opt(OptimumValue::absent(), OptimumValue::absent()));
  EXPECT_TRUE(opposites_opt(val("top"), val("bot")));
  EXPECT_FALSE(opposites_opt(val("1"), val("1")));
  EXPECT_FALSE(opposites_opt(val("0"), OptimumValue::absent()));
}

TEST(WeakDuality, Examples) {
  ValidELP lunch(lunch_lp());
  Solution s = solve(lunch);
  EXPECT_TRUE(weak_duality_check(lunch, nvec({"190/573", "134/573"}), *s.y));
  EXPECT_TRUE(weak_duality_check(lunch, nvec({"10/9", "0"}), *s.y));

  ValidELP trivial(elp({{"1"}}, {"1"}, {"0"}));
  EXPECT_TRUE(weak_duality_check(trivial, nvec({"0"}), nvec({"0"})));

  // P1 and D1 are not valid and weak duality breaks: top . x <= 0 pins
  // x = 0, while D1 takes any y = (t, 0) and reaches -t.
  EXPECT_FALSE(is_solution(p1(), nvec({"1"})));
  EXPECT_EQ(reaches(p1(), nvec({"0"})), ev("0"));
  EXPECT_EQ(add(reaches(p1(), nvec({"0"})), reaches(d1(), nvec({"0", "0"}))), ev("0"));
  for (const char* t : {"1", "5/2"}) {
    ExtValue sum = add(reaches(p1(), nvec({"0"})), reaches(d1(), nvec({t, "0"})));
    EXPECT_LT(sum, ExtValue(0));
  }
}

TEST(WeakDuality, GeneratedPrograms) {
  oracle::GenConfig cfg;
  int pairs = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    cfg.seed = seed;
    ValidELP p = oracle::gen_valid_elp(cfg);
    auto x = feasible_point(p);
    auto y = feasible_point(dualize(p));
    if (!x || !y) continue;
    ++pairs;
    ASSERT_TRUE(weak_duality_check(p, *x, *y)) << "seed " << seed;
  }
  EXPECT_GT(pairs, 0);
}

TEST(StrongDuality, Examples) {
  EXPECT_TRUE(strong_duality_check(ValidELP(lunch_lp())));
  EXPECT_TRUE(strong_duality_check(ValidELP(lunch_lp_no_lentils())));
  // 0 x <= -1 and its dual 0 y <= -1: neither side has a solution.
  ValidELP both(elp({{"0"}}, {"-1"}, {"-1"}));
  EXPECT_EQ(optimum(both), val("top"));
  EXPECT_EQ(optimum(dualize(both)), val("top"));
  EXPECT_THROW(strong_duality_check(both), BothInfeasibleError);
}

TEST(StrongDuality, FailsOnInvalidFixtures) {
  std::set<Condition> seen;
  for (auto [p, d] : {std::pair{p1(), d1()}, std::pair{p2(), d2()}, std::pair{p3(), d3()}}) {
    EXPECT_EQ(evaluate_optimum(p), val("0"));
    EXPECT_EQ(evaluate_optimum(d), val("bot"));
    EXPECT_FALSE(opposites_opt(evaluate_optimum(p), evaluate_optimum(d)));
    for (const auto& lp : {p, d}) {
      auto v = violated(lp);
      ASSERT_EQ(v.size(), 1u);
      seen.insert(v.front());
    }
  }
  EXPECT_EQ(seen.size(), 6u);
}

TEST(EvaluateOptimum, AgreesWithValidPipeline) {
  oracle::GenConfig cfg;
  cfg.p_bot = cfg.p_top = 0.15;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    cfg.seed = seed;
    ValidELP p = oracle::gen_valid_elp(cfg);
    ASSERT_EQ(evaluate_optimum(p.lp()), optimum(p)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace extlp
