#include "antisym/simplex.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace antisym;

namespace {

LPProblem make_lp(std::vector<Rational> c, std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<bool> nonneg = {}) {
  LPProblem lp;
  lp.objective = std::move(c);
  lp.constraints = std::move(a);
  lp.rhs = std::move(b);
  lp.nonnegative = nonneg.empty() ? std::vector<bool>(lp.objective.size(), true) : std::move(nonneg);
  return lp;
}

// Brute-force optimum of a 2-variable LP over intersections of constraint lines.
std::optional<Rational> vertex_enumeration_2d(const LPProblem& lp) {
  std::vector<std::vector<Rational>> rows = lp.constraints;
  std::vector<Rational> rhs = lp.rhs;
  rows.push_back({-1, 0});
  rhs.push_back(0);
  rows.push_back({0, -1});
  rhs.push_back(0);
  std::optional<Rational> best;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const Rational det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
      if (sgn(det) == 0) continue;
      const Rational x = (rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / det;
      const Rational y = (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / det;
      bool ok = true;
      for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k][0] * x + rows[k][1] * y > rhs[k]) ok = false;
      if (!ok) continue;
      const Rational v = lp.objective[0] * x + lp.objective[1] * y;
      if (!best || v > *best) best = v;
    }
  return best;
}

}  // namespace

TEST(Simplex, Trivial) {
  const auto sol = simplex_solve(make_lp({1}, {{1}}, {1}));
  ASSERT_EQ(sol.status, LPStatus::optimal);
  EXPECT_EQ(sol.value, 1);
  EXPECT_EQ(sol.x[0], 1);
}

TEST(Simplex, TwoCopyTruncatedInstance) {
  // Strings over {(1,1,1,1), (2,2)}; p = (x, 0, 0, 1 - x) style symmetric point.
  const std::vector<std::vector<Rational>> t2{{1, 1, 1, 1}, {-2, 1, -2, 1}, {-2, -2, 1, 1}, {4, -2, -2, 1}};
  LPProblem lp;
  lp.objective = {make_rational(1, 1), make_rational(-1, 2), make_rational(-1, 2), make_rational(1, 4)};
  lp.nonnegative.assign(4, true);
  for (const auto& row : t2) {
    std::vector<Rational> neg;
    for (const auto& v : row) neg.push_back(-v);
    lp.add_constraint(neg, 0);
  }
  lp.add_constraint({1, 1, 1, 1}, 1);
  const auto sol = simplex_solve(lp);
  ASSERT_EQ(sol.status, LPStatus::optimal);
  EXPECT_EQ(sol.value, make_rational(1, 2));
  EXPECT_EQ(sol.x[0], make_rational(1, 3));
  EXPECT_EQ(sol.x[3], make_rational(2, 3));
}

TEST(Simplex, DegenerateRedundantConstraints) {
  // Several copies of the same constraint plus a degenerate vertex at the origin.
  const auto lp = make_lp({1, 1}, {{1, 1}, {1, 1}, {2, 2}, {1, -1}, {-1, 1}}, {2, 2, 4, 0, 0});
  const auto sol = simplex_solve(lp);
  ASSERT_EQ(sol.status, LPStatus::optimal);
  EXPECT_EQ(sol.value, 2);
  EXPECT_TRUE(verify_certificate(lp, sol).ok());
}

TEST(Simplex, BealeCyclingExample) {
  // Classic instance on which the largest-coefficient rule cycles.
  const auto lp = make_lp({make_rational(3, 4), -150, make_rational(1, 50), -6},
                          {{make_rational(1, 4), -60, make_rational(-1, 25), 9},
                           {make_rational(1, 2), -90, make_rational(-1, 50), 3},
                           {0, 0, 1, 0}},
                          {0, 0, 1});
  const auto sol = simplex_solve(lp);
  ASSERT_EQ(sol.status, LPStatus::optimal);
  EXPECT_EQ(sol.value, make_rational(1, 20));
}

TEST(Simplex, InfeasibleAndUnbounded) {
  EXPECT_EQ(simplex_solve(make_lp({1}, {{1}, {-1}}, {1, -2})).status, LPStatus::infeasible);
  EXPECT_EQ(simplex_solve(make_lp({1, 0}, {{-1, 1}}, {1})).status, LPStatus::unbounded);
}

TEST(Simplex, EqualityViaTwoInequalitiesAndFreeVariables) {
  // max x + y, x + 2y = 4, x - y <= 1, y free.
  const auto lp = make_lp({1, 1}, {{1, 2}, {-1, -2}, {1, -1}}, {4, -4, 1}, {true, false});
  const auto sol = simplex_solve(lp);
  ASSERT_EQ(sol.status, LPStatus::optimal);
  EXPECT_EQ(sol.x[0], 2);
  EXPECT_EQ(sol.x[1], 1);
  EXPECT_EQ(sol.value, 3);
}

TEST(Simplex, NegativeRightHandSidesNeedPhaseOne) {
  // x + y >= 2, x <= 3, y <= 3; maximize -x - y.
  const auto lp = make_lp({-1, -1}, {{-1, -1}, {1, 0}, {0, 1}}, {-2, 3, 3});
  const auto sol = simplex_solve(lp);
  ASSERT_EQ(sol.status, LPStatus::optimal);
  EXPECT_EQ(sol.value, -2);
  EXPECT_TRUE(verify_certificate(lp, sol).ok());
}

TEST(Simplex, RandomTwoVariableProblemsMatchVertexEnumeration) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> coef(-6, 6);
  std::uniform_int_distribution<long> bound(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    LPProblem lp;
    lp.objective = {coef(rng), coef(rng)};
    lp.nonnegative = {true, true};
    for (int k = 0; k < 4; ++k) lp.add_constraint({coef(rng), coef(rng)}, bound(rng));
    lp.add_constraint({1, 1}, 20);  // keeps the region bounded
    const auto sol = simplex_solve(lp);
    ASSERT_EQ(sol.status, LPStatus::optimal);
    const auto brute = vertex_enumeration_2d(lp);
    ASSERT_TRUE(brute);
    EXPECT_EQ(sol.value, *brute) << "trial " << trial;
    EXPECT_TRUE(verify_certificate(lp, sol).ok());
  }
}

TEST(Simplex, CertificateRejectsWrongPoint) {
  const auto lp = make_lp({1}, {{1}}, {1});
  auto sol = simplex_solve(lp);
  sol.x[0] = 2;
  EXPECT_FALSE(verify_certificate(lp, sol).primal_feasible);
}

TEST(Simplex, ValidationErrors) {
  LPProblem lp;
  lp.objective = {1, 1};
  lp.nonnegative = {true};
  EXPECT_THROW(simplex_solve(lp), structural_error);
}
