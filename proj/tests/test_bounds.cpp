#include "antisym/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

using namespace antisym;

TEST(CmiExtension, Examples) {
  const auto a = cmi_extension(4, 3);
  EXPECT_EQ(a.ratio, make_rational(9, 4));
  EXPECT_NEAR(a.bits, 2 * std::log2(1.5), 1e-12);
  EXPECT_EQ(cmi_extension(4, 2).ratio, make_rational(8, 3));
  const auto c = cmi_extension(5, 3);
  EXPECT_EQ(c.ratio, 2);
  EXPECT_NEAR(c.bits, 1.0, 1e-12);
  EXPECT_THROW(cmi_extension(4, 1), domain_error);
  EXPECT_THROW(cmi_extension(4, 5), domain_error);
}

TEST(SquashedUpper, Examples) {
  const auto s4 = squashed_upper(4);
  EXPECT_EQ(s4.argmin_k, 3);
  EXPECT_NEAR(s4.report.log2_value, std::log2(1.5), 1e-12);
  const auto s5 = squashed_upper(5);
  EXPECT_EQ(s5.argmin_k, 3);
  EXPECT_NEAR(s5.report.log2_value, 0.5, 1e-12);
  EXPECT_NEAR(squashed_upper(100).report.log2_value, std::log2(1.02), 1e-12);
}

TEST(SquashedUpper, ClosedFormsAndUnimodality) {
  for (int d = 3; d <= 40; ++d) {
    const auto s = squashed_upper(d);
    EXPECT_EQ(s.min_ratio, squashed_closed_ratio(d)) << d;
    EXPECT_EQ(s.argmin_k, squashed_closed_argmin(d)) << d;
    // Non-increasing up to the argmin, non-decreasing after.
    for (std::size_t i = 1; i < s.table.size(); ++i) {
      if (s.table[i].k <= s.argmin_k) {
        EXPECT_LE(s.table[i].ratio, s.table[i - 1].ratio);
      } else {
        EXPECT_GE(s.table[i].ratio, s.table[i - 1].ratio);
      }
    }
    if (d % 2 == 0) {
      EXPECT_NEAR(s.report.log2_value, 0.5 * cmi_extension(d, d / 2 + 1).bits, 1e-12);
    }
  }
}

TEST(SquashedUpper, OddDimensionTie) {
  for (int d = 3; d <= 21; d += 2) {
    EXPECT_EQ(cmi_extension(d, (d + 1) / 2).ratio, cmi_extension(d, (d + 3) / 2).ratio);
  }
}

TEST(BoundReport, LogValueMatchesExactCore) {
  for (const BoundReport& r : {squashed_upper(6).report, ec_lower(4, std::nullopt, BoundMode::lp),
                               er_lower(3, 4, BoundMode::lp), er_ppt_contrast(4)}) {
    ASSERT_TRUE(r.exact_core);
    EXPECT_NEAR(r.log2_value, to_double(r.log_scale) * std::log2(to_double(*r.exact_core)), 1e-12);
  }
}

TEST(EcLower, Examples) {
  for (unsigned n : {1u, 5u, 12u}) EXPECT_NEAR(ec_lower(n, std::nullopt, BoundMode::analytic).log2_value, 0.415037499278844, 1e-12);
  EXPECT_NEAR(ec_lower(12, std::nullopt, BoundMode::lp).log2_value, -std::log2(26.0 / 1119.0) / 12, 1e-12);
  EXPECT_EQ(*ec_lower(12, std::nullopt, BoundMode::lp).exact_core, make_rational(26, 1119));
  EXPECT_NEAR(ec_lower(4, 3, BoundMode::lp).log2_value, 1.0, 1e-15);
}

TEST(EcLower, TabulatedGridValues) {
  const std::vector<std::pair<unsigned, Rational>> grid{{1, make_rational(1, 2)},  {2, make_rational(1, 2)},
                                                        {4, make_rational(1, 4)},  {6, make_rational(1, 7)},
                                                        {8, make_rational(5, 66)}, {10, make_rational(12, 283)}};
  for (const auto& [n, zeta] : grid) EXPECT_EQ(*ec_lower(n, std::nullopt, BoundMode::lp).exact_core, zeta);
}

TEST(ErLower, Examples) {
  EXPECT_NEAR(er_lower(2, std::nullopt, BoundMode::analytic).log2_value, 0.5 * std::log2(4.0 / 3.0), 1e-12);
  EXPECT_NEAR(er_lower(1, std::nullopt, BoundMode::lp).log2_value, 0.5, 1e-15);
  EXPECT_NEAR(er_ppt_contrast(4).log2_value, std::log2(1.5), 1e-12);
}

TEST(Continuity, Examples) {
  EXPECT_EQ(continuity_delta(0, 5), 0);
  EXPECT_NEAR(continuity_delta(0.5, 2), 3.0, 1e-15);
  EXPECT_NEAR(continuity_delta(0.25, 4), 2 * (0.25 + 2 - 0.75 * std::log2(3.0)) * 2, 1e-12);
  EXPECT_NEAR(binary_entropy(1.0), 0, 0);
  EXPECT_THROW(continuity_delta(-0.1, 3), domain_error);
  EXPECT_THROW(continuity_delta(1.5, 3), domain_error);
}

TEST(Continuity, VanishesAsEpsilonShrinks) {
  for (int d : {2, 5, 64}) {
    EXPECT_LT(continuity_delta(1e-3, d) / std::log2(double(d)), 0.03);
    EXPECT_LT(continuity_delta(1e-6, d) / std::log2(double(d)), 1e-4);
  }
}

TEST(PuritySeesaw, SingleCopyIsOneHalf) {
  for (int d = 3; d <= 6; ++d) EXPECT_NEAR(purity_seesaw(1, d, 4, 200, 1).value, 0.5, 1e-9) << d;
}

TEST(PuritySeesaw, TwoCopiesAtDimensionThree) {
  const auto r = purity_seesaw(2, 3, 20, 500, 7);
  EXPECT_NEAR(r.value, 0.25, 1e-6);
}

TEST(PuritySeesaw, MonotoneWithinEachRestart) {
  const auto r = purity_seesaw(2, 4, 6, 300, 3);
  for (const auto& h : r.histories)
    for (std::size_t i = 1; i < h.size(); ++i) EXPECT_GE(h[i], h[i - 1]);
  EXPECT_LE(r.value, 1.0);
}

TEST(PuritySeesaw, SandwichedByLinearProgrammes) {
  for (auto [n, d] : {std::pair{1u, 4}, std::pair{2u, 3}, std::pair{2u, 4}, std::pair{3u, 3}}) {
    const double seesaw = purity_seesaw(n, d, 5, 300, 11).value;
    const Rational zeta = solve_zeta(n, d).value;
    EXPECT_LE(seesaw, to_double(zeta) + 1e-6);
    EXPECT_LE(to_double(solve_zeta(n, std::nullopt, Parity::none, ZetaForm::truncated2).value),
              to_double(pow(make_rational(3, 4), n)) + 1e-12);
  }
}

TEST(PuritySeesaw, DeterministicAcrossThreadCounts) {
  const auto a = purity_seesaw(2, 3, 6, 100, 5, 1);
  const auto b = purity_seesaw(2, 3, 6, 100, 5, 3);
  EXPECT_EQ(a.per_restart, b.per_restart);
}

TEST(PuritySeesaw, GuardsAndValidation) {
  EXPECT_THROW(purity_seesaw(5, 4, 1, 1, 0), resource_error);
  EXPECT_THROW(purity_seesaw(0, 4, 1, 1, 0), domain_error);
  EXPECT_THROW(purity_seesaw(1, 4, 0, 1, 0), domain_error);
}
