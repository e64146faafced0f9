#pragma once

// Exact two-phase tableau simplex over the rationals.
//
//   maximize c^T x  subject to  A x <= b,  x_j >= 0 for flagged j.
//
// Pivoting follows Bland's rule (lowest eligible index enters, lowest basic
// index leaves on ratio ties), so the method terminates on degenerate
// problems. Optimal solutions carry a dual vector y with y >= 0,
// A^T y >= c on sign-constrained columns, A^T y = c on free columns, and
// b^T y = c^T x; simplex_solve checks that certificate before returning.

#include "antisym/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace antisym {

struct LPProblem {
  std::vector<Rational> objective;                 // c, maximized
  std::vector<std::vector<Rational>> constraints;  // rows of A
  std::vector<Rational> rhs;                       // b
  std::vector<bool> nonnegative;                   // per variable

  std::size_t variable_count() const { return objective.size(); }
  std::size_t constraint_count() const { return constraints.size(); }

  void add_constraint(std::vector<Rational> row, Rational bound) {
    constraints.push_back(std::move(row));
    rhs.push_back(std::move(bound));
  }

  void validate() const {
    if (nonnegative.size() != objective.size()) throw structural_error("sign flags do not match variable count");
    if (rhs.size() != constraints.size()) throw structural_error("rhs length does not match constraint count");
    for (const auto& row : constraints)
      if (row.size() != objective.size()) throw structural_error("constraint row has wrong length");
  }
};

enum class LPStatus { optimal, infeasible, unbounded };

inline std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  std::vector<Rational> x;  // primal point (optimal only)
  Rational value;           // c^T x
  std::vector<Rational> y;  // dual certificate, one per constraint row
  std::size_t pivots = 0;
};

struct CertificateCheck {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool zero_gap = false;

  bool ok() const { return primal_feasible && dual_feasible && zero_gap; }
};

inline CertificateCheck verify_certificate(const LPProblem& lp, const LPSolution& sol) {
  CertificateCheck check;
  if (sol.status != LPStatus::optimal || sol.x.size() != lp.variable_count() || sol.y.size() != lp.constraint_count()) {
    return check;
  }
  check.primal_feasible = true;
  for (std::size_t j = 0; j < lp.variable_count(); ++j)
    if (lp.nonnegative[j] && sgn(sol.x[j]) < 0) check.primal_feasible = false;
  for (std::size_t i = 0; i < lp.constraint_count(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < lp.variable_count(); ++j) lhs += lp.constraints[i][j] * sol.x[j];
    if (lhs > lp.rhs[i]) check.primal_feasible = false;
  }

  check.dual_feasible = true;
  for (const Rational& yi : sol.y)
    if (sgn(yi) < 0) check.dual_feasible = false;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < lp.constraint_count(); ++i) col += lp.constraints[i][j] * sol.y[i];
    if (lp.nonnegative[j] ? col < lp.objective[j] : col != lp.objective[j]) check.dual_feasible = false;
  }

  Rational primal = 0;
  Rational dual = 0;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) primal += lp.objective[j] * sol.x[j];
  for (std::size_t i = 0; i < lp.constraint_count(); ++i) dual += lp.rhs[i] * sol.y[i];
  check.zero_gap = primal == dual && primal == sol.value;
  return check;
}

namespace detail {

class Tableau {
 public:
  explicit Tableau(const LPProblem& lp) : lp_(lp) {
    const std::size_t m = lp.constraint_count();
    // Column layout: structural (free variables split in two), slacks, artificials.
    for (std::size_t j = 0; j < lp.variable_count(); ++j) {
      plus_col_.push_back(ncols_++);
      minus_col_.push_back(lp.nonnegative[j] ? std::nullopt : std::optional<std::size_t>(ncols_++));
    }
    slack_begin_ = ncols_;
    ncols_ += m;
    art_begin_ = ncols_;
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(lp.rhs[i]) < 0) ++ncols_;

    rows_.assign(m, std::vector<Rational>(ncols_ + 1));
    basis_.resize(m);
    std::size_t next_art = art_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      const int s = sgn(lp.rhs[i]) < 0 ? -1 : 1;
      auto& row = rows_[i];
      for (std::size_t j = 0; j < lp.variable_count(); ++j) {
        row[plus_col_[j]] = s * lp.constraints[i][j];
        if (minus_col_[j]) row[*minus_col_[j]] = -s * lp.constraints[i][j];
      }
      row[slack_begin_ + i] = s;
      row[ncols_] = s * lp.rhs[i];
      if (s < 0) {
        row[next_art] = 1;
        basis_[i] = next_art++;
      } else {
        basis_[i] = slack_begin_ + i;
      }
    }
  }

  LPSolution solve() {
    LPSolution sol;
    if (art_begin_ < ncols_) {
      std::vector<Rational> phase1(ncols_);
      for (std::size_t j = art_begin_; j < ncols_; ++j) phase1[j] = -1;
      run(phase1, /*allow_artificial=*/true);
      if (sgn(objective_value()) < 0) {
        sol.status = LPStatus::infeasible;
        sol.pivots = pivots_;
        return sol;
      }
      drive_out_artificials();
    }

    std::vector<Rational> cost(ncols_);
    for (std::size_t j = 0; j < lp_.variable_count(); ++j) {
      cost[plus_col_[j]] = lp_.objective[j];
      if (minus_col_[j]) cost[*minus_col_[j]] = -lp_.objective[j];
    }
    const bool bounded = run(cost, /*allow_artificial=*/false);
    sol.pivots = pivots_;
    if (!bounded) {
      sol.status = LPStatus::unbounded;
      return sol;
    }

    sol.status = LPStatus::optimal;
    std::vector<Rational> xs(ncols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) xs[basis_[i]] = rows_[i][ncols_];
    sol.x.resize(lp_.variable_count());
    for (std::size_t j = 0; j < lp_.variable_count(); ++j) {
      sol.x[j] = xs[plus_col_[j]];
      if (minus_col_[j]) sol.x[j] -= xs[*minus_col_[j]];
    }
    sol.value = 0;
    for (std::size_t j = 0; j < lp_.variable_count(); ++j) sol.value += lp_.objective[j] * sol.x[j];
    // Reduced cost of slack i is -y_i.
    sol.y.resize(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) sol.y[i] = -reduced_[slack_begin_ + i];
    return sol;
  }

 private:
  Rational objective_value() const { return -reduced_[ncols_]; }

  void price(const std::vector<Rational>& cost) {
    reduced_.assign(ncols_ + 1, 0);
    for (std::size_t j = 0; j < ncols_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= ncols_; ++j) reduced_[j] -= cb * rows_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    ++pivots_;
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[e];
    for (auto& v : prow)
      if (sgn(v) != 0) v *= inv;
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[e]) == 0) return;
      const Rational f = row[e];
      for (std::size_t j = 0; j <= ncols_; ++j)
        if (sgn(prow[j]) != 0) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(reduced_);
    basis_[r] = e;
  }

  // Returns false when the objective is unbounded.
  bool run(const std::vector<Rational>& cost, bool allow_artificial) {
    price(cost);
    const std::size_t limit = allow_artificial ? ncols_ : art_begin_;
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(reduced_[j]) > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*entering];
        if (sgn(a) <= 0) continue;
        Rational ratio = rows_[i][ncols_] / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
      // Otherwise the row is redundant; its artificial stays basic at zero
      // and no structural pivot can touch it.
    }
  }

  const LPProblem& lp_;
  std::size_t ncols_ = 0;
  std::size_t slack_begin_ = 0;
  std::size_t art_begin_ = 0;
  std::vector<std::size_t> plus_col_;
  std::vector<std::optional<std::size_t>> minus_col_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  std::size_t pivots_ = 0;
};

}  // namespace detail

inline LPSolution simplex_solve(const LPProblem& lp) {
  lp.validate();
  detail::Tableau tableau(lp);
  LPSolution sol = tableau.solve();
  if (sol.status == LPStatus::optimal && !verify_certificate(lp, sol).ok()) {
    throw std::logic_error("simplex produced an optimum whose certificate does not verify");
  }
  return sol;
}

}  // namespace antisym
