// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Tolerances are fixed here and nowhere else:
//   kLogTol      1e-9   decimal renderings of log2 bounds
//   kPurityN1    1e-6   see-saw at n = 1
//   kPurityN2    1e-5   see-saw at n = 2, d = 3
//   kSandwichTol 1e-6   see-saw versus LP optimum
// Every other comparison is exact rational equality.

#include "antisym/antisym.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace antisym;

namespace {

constexpr double kLogTol = 1e-9;
constexpr double kPurityN1 = 1e-6;
constexpr double kPurityN2 = 1e-5;
constexpr double kSandwichTol = 1e-6;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

Rational dual_objective(const LPProblem& lp, const LPSolution& sol) {
  Rational v = 0;
  for (std::size_t i = 0; i < sol.y.size(); ++i) v += sol.y[i] * lp.rhs[i];
  return v;
}

const std::vector<std::pair<unsigned, Rational>>& tabulated_grid() {
  static const std::vector<std::pair<unsigned, Rational>> grid{
      {1, make_rational(1, 2)},     {2, make_rational(1, 2)},      {4, make_rational(1, 4)},
      {6, make_rational(1, 7)},     {8, make_rational(5, 66)},     {10, make_rational(12, 283)},
      {12, make_rational(26, 1119)}};
  return grid;
}

Outcome criterion_tabulated_values() {
  Outcome o;
  for (const auto& [n, expected] : tabulated_grid()) {
    const Rational got = solve_zeta(n, std::nullopt, Parity::none, ZetaForm::truncated2).value;
    o.require(got == expected, "n=" + std::to_string(n) + " gave " + to_string(got));
  }
  return o;
}

Outcome criterion_analytic_dual() {
  Outcome o;
  for (unsigned n = 1; n <= 20; ++n) {
    const auto a = analytic_dual(n);
    o.require(a.feasible, "infeasible at n=" + std::to_string(n));
    o.require(a.identity_holds, "closed-form identity fails at n=" + std::to_string(n));
    o.require(a.z == pow(make_rational(3, 4), n), "z != (3/4)^n at n=" + std::to_string(n));
  }
  for (const auto& [n, zeta] : tabulated_grid()) o.require(analytic_dual(n).z >= zeta, "z < zeta at n=" + std::to_string(n));
  return o;
}

Outcome criterion_ec_bound() {
  Outcome o;
  const double target = std::log2(4.0 / 3.0);
  for (unsigned n : {1u, 4u, 12u}) {
    const auto r = ec_lower(n, std::nullopt, BoundMode::analytic);
    o.require(std::abs(r.log2_value - target) <= kLogTol, "analytic bound off at n=" + std::to_string(n));
  }
  const auto lp = ec_lower(12, std::nullopt, BoundMode::lp);
  o.require(lp.exact_core && *lp.exact_core == make_rational(26, 1119), "n=12 core is not 26/1119");
  o.require(std::abs(lp.log2_value - (-std::log2(26.0 / 1119.0) / 12.0)) <= kLogTol, "n=12 lp bound off");
  o.require(std::abs(lp.log2_value - 0.4523) <= 1e-4, "n=12 lp bound is not 0.4523...");
  std::printf("      E_C >= %.9f (analytic), %.9f (lp, n=12)\n", ec_lower(1, std::nullopt, BoundMode::analytic).log2_value,
              lp.log2_value);
  return o;
}

Outcome criterion_dimension_three() {
  Outcome o;
  for (unsigned n = 1; n <= 6; ++n) {
    const Rational zeta = solve_zeta(n, 3).value;
    o.require(zeta == pow(make_rational(1, 2), n), "zeta_{n,3} != 2^-n at n=" + std::to_string(n));
    const auto r = ec_lower(n, 3, BoundMode::lp);
    // -(1/n) log2 2^{-n} = 1 exactly: core 2^{-n}, scale -1/n.
    o.require(r.exact_core && *r.exact_core * pow(Rational(2), n) == 1 && r.log_scale == make_rational(-1, long(n)),
              "E_F bound is not exactly n at n=" + std::to_string(n));
  }
  return o;
}

Outcome criterion_squashed() {
  Outcome o;
  for (int d = 3; d <= 21; ++d) {
    const auto s = squashed_upper(d);
    // Explicit minimization over all k.
    Rational best = s.table.front().ratio;
    for (const auto& row : s.table) best = std::min(best, row.ratio);
    o.require(s.min_ratio == best, "minimum mismatch at d=" + std::to_string(d));
    if (d % 2 == 0 && d >= 4 && d <= 20) {
      o.require(best == pow(make_rational(d + 2, d), 2), "even closed form fails at d=" + std::to_string(d));
      o.require(s.argmin_k == d / 2 + 1, "even argmin wrong at d=" + std::to_string(d));
      o.require(std::abs(s.report.log2_value - std::log2((d + 2.0) / d)) <= 1e-12, "even log value at d=" + std::to_string(d));
    } else if (d % 2 == 1) {
      o.require(best == make_rational(d + 3, d - 1), "odd closed form fails at d=" + std::to_string(d));
      o.require(s.argmin_k == (d + 1) / 2, "odd argmin wrong at d=" + std::to_string(d));
      o.require(std::abs(s.report.log2_value - 0.5 * std::log2((d + 3.0) / (d - 1.0))) <= 1e-12,
                "odd log value at d=" + std::to_string(d));
    }
  }
  return o;
}

Outcome criterion_exact_verification() {
  Outcome o;
  for (int d : {3, 4, 5}) {
    const auto rep = verify_representation(d, VerifyLevel::full);
    if (const auto* f = rep.first_failure()) o.require(false, "d=" + std::to_string(d) + ": " + f->name);
    const TVector tv = t_vector(d);
    const std::vector<Rational> expected = d == 3 ? std::vector<Rational>{make_rational(1, 2), 0}
                                                  : std::vector<Rational>{-1, make_rational(1, 2), 0};
    o.require(tv.t == expected, "t-vector at d=" + std::to_string(d));
    o.require(rep.overlaps && rep.overlaps->entries == overlap_table_closed(d).entries,
              "overlap table vs closed forms at d=" + std::to_string(d));
  }
  return o;
}

Outcome criterion_plethysm() {
  Outcome o;
  std::mt19937_64 rng(20240607);
  for (int d = 3; d <= 6; ++d) {
    for (int k = 0; k < 50; ++k) {
      const auto x = random_point(rng, d);
      o.require(plethysm_check(PlethysmKind::sym2, x).equal, "Sym^2 fails at d=" + std::to_string(d));
      o.require(plethysm_check(PlethysmKind::alt2, x).equal, "Alt^2 fails at d=" + std::to_string(d));
    }
  }
  return o;
}

Outcome criterion_seesaw() {
  Outcome o;
  for (int d = 3; d <= 6; ++d) {
    const double v = purity_seesaw(1, d, 5, 200, 1).value;
    o.require(std::abs(v - 0.5) <= kPurityN1, "n=1 d=" + std::to_string(d) + " gave " + std::to_string(v));
    o.require(v <= to_double(solve_zeta(1, d).value) + kSandwichTol, "n=1 sandwich at d=" + std::to_string(d));
  }
  const double v = purity_seesaw(2, 3, 20, 500, 7).value;
  o.require(std::abs(v - 0.25) <= kPurityN2, "n=2 d=3 gave " + std::to_string(v));
  o.require(v <= to_double(solve_zeta(2, 3).value) + kSandwichTol, "n=2 d=3 sandwich");
  for (auto [n, d] : {std::pair{2u, 4}, std::pair{2u, 5}, std::pair{3u, 3}, std::pair{3u, 4}}) {
    const double w = purity_seesaw(n, d, 5, 300, 3).value;
    o.require(w <= to_double(solve_zeta(n, d).value) + kSandwichTol,
              "sandwich at n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
  std::printf("      see-saw n=2 d=3: %.12f\n", v);
  return o;
}

Outcome criterion_er_bound() {
  Outcome o;
  const auto r = er_lower(1, std::nullopt, BoundMode::analytic);
  o.require(std::abs(r.log2_value - 0.5 * std::log2(4.0 / 3.0)) <= kLogTol, "analytic E_R bound");
  o.require(std::abs(r.log2_value - 0.207518) <= 1e-6, "analytic E_R bound is not 0.207518...");
  for (int d : {4, 6, 10}) {
    const auto c = er_ppt_contrast(d);
    o.require(c.exact_core && *c.exact_core == make_rational(d + 2, d), "contrast core at d=" + std::to_string(d));
    o.require(std::abs(c.log2_value - std::log2((d + 2.0) / d)) <= kLogTol, "contrast value at d=" + std::to_string(d));
  }
  std::printf("      E_R >= %.9f (analytic); E_R,PPT(d=4) = %.9f\n", r.log2_value, er_ppt_contrast(4).log2_value);
  return o;
}

Outcome criterion_strong_duality() {
  Outcome o;
  for (const auto& [n, zeta] : tabulated_grid()) {
    const auto r = solve_zeta(n, std::nullopt, Parity::none, ZetaForm::truncated2);
    const LPProblem lp = r.lp.to_problem();
    o.require(verify_certificate(lp, r.solution).ok(), "certificate at n=" + std::to_string(n));
    o.require(dual_objective(lp, r.solution) == r.value, "primal != dual at n=" + std::to_string(n));
    o.require(solve_dual(n).value == r.value, "separate dual LP optimum differs at n=" + std::to_string(n));
  }
  for (unsigned n = 1; n <= 6; ++n) {
    const auto r = solve_zeta(n, 3);
    const LPProblem lp = r.lp.to_problem();
    o.require(verify_certificate(lp, r.solution).ok() && dual_objective(lp, r.solution) == r.value,
              "d=3 duality at n=" + std::to_string(n));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 tabulated LP values (d=inf, truncated) for n=1..12", criterion_tabulated_values},
      {"2 analytic dual point feasible with z=(3/4)^n, n<=20", criterion_analytic_dual},
      {"3 E_C lower bounds log2(4/3) and n=12 LP value", criterion_ec_bound},
      {"4 zeta_{n,3} = 2^-n for n<=6", criterion_dimension_three},
      {"5 squashed bound closed forms and argmin, d=3..21", criterion_squashed},
      {"6 exact representation checks at d=3,4,5", criterion_exact_verification},
      {"7 plethysm characters at 50 random points, d=3..6", criterion_plethysm},
      {"8 see-saw purity oracle and sandwich", criterion_seesaw},
      {"9 E_R lower bound and PPT contrast", criterion_er_bound},
      {"10 strong duality on criteria 1 and 4 instances", criterion_strong_duality},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs,
                o.pass ? "" : ": ", o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
