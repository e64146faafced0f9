#pragma once

// Symmetry-reduced linear programmes for the maximal purity of n-copy
// antisymmetric states, their duals, and the analytic dual point
// delta_k = gamma beta^{n-k}.
//
// A variable of the reduced LP is a type: the occurrence count of each
// symbol in a string y^n. Its value is the aggregated mass
// q_type = (multinomial of type) * p_{y^n}. Constraint rows of T^{⊗n} p >= 0
// likewise depend only on the type of the row string.

#include "antisym/matrix.hpp"
#include "antisym/rational.hpp"
#include "antisym/simplex.hpp"
#include "antisym/werner.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace antisym {

enum class ZetaForm { full3, truncated2 };
enum class Parity { none, even_211 };

using TypeCounts = std::vector<unsigned>;

// All count vectors of length `parts` summing to n, ordered so that the
// first count is ascending (then recursively).
inline std::vector<TypeCounts> compositions(unsigned n, std::size_t parts) {
  std::vector<TypeCounts> out;
  if (parts == 0) return out;
  TypeCounts current(parts, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned remaining) {
    if (k + 1 == parts) {
      current[k] = remaining;
      out.push_back(current);
      return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
      current[k] = c;
      rec(k + 1, remaining - c);
    }
  };
  rec(0, n);
  return out;
}

inline Integer multinomial(const TypeCounts& counts) {
  unsigned total = 0;
  for (unsigned c : counts) total += c;
  Integer r = factorial(total);
  for (unsigned c : counts) r /= factorial(c);
  return r;
}

struct SymLP {
  unsigned n = 0;
  std::vector<std::string> symbols;
  std::vector<Rational> weights;  // objective weight t per symbol
  RMatrix matrix;                 // constraint matrix T, rows x symbols
  std::vector<std::string> row_labels;
  bool normalization_equality = true;  // sum q = 1, otherwise sum q <= 1

  std::vector<TypeCounts> types;       // variables
  std::vector<Integer> multiplicities;  // strings per type
  std::vector<TypeCounts> row_types;   // constraint rows
  std::vector<Rational> objective;     // per aggregated variable
  std::vector<std::vector<Rational>> rows;  // rows[r][v]: coefficient of q_v

  LPProblem to_problem() const {
    LPProblem lp;
    lp.objective = objective;
    lp.nonnegative.assign(types.size(), true);
    for (const auto& row : rows) {
      std::vector<Rational> neg(row.size());
      for (std::size_t v = 0; v < row.size(); ++v) neg[v] = -row[v];
      lp.add_constraint(std::move(neg), 0);
    }
    lp.add_constraint(std::vector<Rational>(types.size(), Rational(1)), 1);
    if (normalization_equality) lp.add_constraint(std::vector<Rational>(types.size(), Rational(-1)), -1);
    return lp;
  }
};

namespace detail {

// Sum over strings y of column type `col` of prod_i T[v_i][y_i], for one
// fixed string v of row type `row`. Enumerates contingency tables N with
// the given margins: each contributes prod_i multinomial(N_i.) prod T_ij^N_ij.
inline Rational type_coefficient(const std::vector<std::vector<std::vector<Rational>>>& powers, const TypeCounts& row,
                                 const TypeCounts& col) {
  const std::size_t nr = row.size();
  const std::size_t nc = col.size();
  TypeCounts remaining = col;
  Rational total = 0;
  std::function<void(std::size_t, Rational)> by_row = [&](std::size_t i, Rational acc) {
    if (i == nr) {
      total += acc;
      return;
    }
    // Distribute row[i] over the columns.
    TypeCounts cells(nc, 0);
    std::function<void(std::size_t, unsigned, Rational)> by_col = [&](std::size_t j, unsigned left, Rational w) {
      if (j + 1 == nc) {
        if (left > remaining[j]) return;
        cells[j] = left;
        Rational term = w * powers[i][j][left] * Rational(multinomial(cells));
        remaining[j] -= left;
        by_row(i + 1, std::move(term));
        remaining[j] += left;
        return;
      }
      for (unsigned c = 0; c <= std::min(left, remaining[j]); ++c) {
        cells[j] = c;
        remaining[j] -= c;
        by_col(j + 1, left - c, w * powers[i][j][c]);
        remaining[j] += c;
      }
    };
    by_col(0, row[i], acc);
  };
  by_row(0, Rational(1));
  return total;
}

}  // namespace detail

// Generic symmetry-reduced LP: maximize t^{⊗n} p s.t. p >= 0, T^{⊗n} p >= 0,
// normalization. `odd_excluded`, when set, removes types with an odd count of
// that symbol.
inline SymLP build_symmetric_lp(unsigned n, std::vector<std::string> symbols, std::vector<Rational> weights,
                                RMatrix matrix, std::vector<std::string> row_labels, bool normalization_equality,
                                std::optional<std::size_t> odd_excluded = std::nullopt) {
  if (n == 0) throw domain_error("number of copies must be positive");
  if (symbols.size() != weights.size() || matrix.cols() != symbols.size() || row_labels.size() != matrix.rows()) {
    throw structural_error("inconsistent symmetric LP data");
  }
  SymLP lp;
  lp.n = n;
  lp.symbols = std::move(symbols);
  lp.weights = std::move(weights);
  lp.matrix = std::move(matrix);
  lp.row_labels = std::move(row_labels);
  lp.normalization_equality = normalization_equality;

  for (auto& t : compositions(n, lp.symbols.size())) {
    if (odd_excluded && t[*odd_excluded] % 2 == 1) continue;
    lp.types.push_back(std::move(t));
  }
  lp.row_types = compositions(n, lp.matrix.rows());

  for (const auto& t : lp.types) {
    lp.multiplicities.push_back(multinomial(t));
    Rational w = 1;
    for (std::size_t s = 0; s < t.size(); ++s) w *= pow(lp.weights[s], t[s]);
    lp.objective.push_back(std::move(w));
  }

  std::vector<std::vector<std::vector<Rational>>> powers(lp.matrix.rows(),
                                                         std::vector<std::vector<Rational>>(lp.matrix.cols()));
  for (std::size_t i = 0; i < lp.matrix.rows(); ++i)
    for (std::size_t j = 0; j < lp.matrix.cols(); ++j)
      for (unsigned k = 0; k <= n; ++k) powers[i][j].push_back(pow(lp.matrix(i, j), k));

  for (const auto& r : lp.row_types) {
    std::vector<Rational> row;
    row.reserve(lp.types.size());
    for (std::size_t v = 0; v < lp.types.size(); ++v) {
      row.push_back(detail::type_coefficient(powers, r, lp.types[v]) / Rational(lp.multiplicities[v]));
    }
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

// Objective weights t_y = tr (tr_{BB'} rho_y) F_{AA'}.
inline Rational symbol_weight(Irrep y) { return t_closed(y); }

// zeta_{n,d} (full3, finite d), zeta over T_infinity (full3, d = nullopt),
// or the truncated two-symbol programme (truncated2, d = nullopt).
inline SymLP build_zeta(unsigned n, std::optional<int> d, Parity parity = Parity::none,
                        ZetaForm form = ZetaForm::full3, TdVariant variant = TdVariant::derived) {
  if (form == ZetaForm::truncated2 && d) throw domain_error("the truncated programme is defined for d = infinity only");
  if (parity == Parity::even_211 && form != ZetaForm::full3) {
    throw domain_error("the (2,1,1) parity restriction needs the three-symbol form");
  }
  if (d && *d < 3) throw domain_error("zeta needs d >= 3");

  if (form == ZetaForm::truncated2) {
    return build_symmetric_lp(n, {"(1,1,1,1)", "(2,2)"}, {symbol_weight(Irrep::alt4), symbol_weight(Irrep::two_two)},
                              RMatrix{{-2, 1}, {1, 1}}, {"Q", "P~"}, /*normalization_equality=*/false);
  }

  const RMatrix t = constraint_matrices(d, variant).t;
  std::vector<Irrep> present;
  for (Irrep y : kAllIrreps)
    if (!d || irrep_exists(y, *d)) present.push_back(y);

  RMatrix sub(3, present.size());
  std::vector<std::string> names;
  std::vector<Rational> weights;
  std::optional<std::size_t> parity_symbol;
  for (std::size_t c = 0; c < present.size(); ++c) {
    for (std::size_t r = 0; r < 3; ++r) sub(r, c) = t(r, irrep_index(present[c]));
    names.push_back(irrep_name(present[c]));
    weights.push_back(symbol_weight(present[c]));
    if (present[c] == Irrep::two_one_one && parity == Parity::even_211) parity_symbol = c;
  }
  return build_symmetric_lp(n, std::move(names), std::move(weights), std::move(sub), {"Psi", "Q", "P~"},
                            /*normalization_equality=*/true, parity_symbol);
}

// Same programme with one row of T removed (every constraint whose row
// string uses that row disappears).
inline SymLP drop_constraint_row(const SymLP& lp, std::size_t row) {
  if (row >= lp.matrix.rows() || lp.matrix.rows() < 2) throw domain_error("cannot drop that constraint row");
  RMatrix reduced(lp.matrix.rows() - 1, lp.matrix.cols());
  std::vector<std::string> labels;
  for (std::size_t r = 0, out = 0; r < lp.matrix.rows(); ++r) {
    if (r == row) continue;
    for (std::size_t c = 0; c < lp.matrix.cols(); ++c) reduced(out, c) = lp.matrix(r, c);
    labels.push_back(lp.row_labels[r]);
    ++out;
  }
  std::optional<std::size_t> parity_symbol;
  if (lp.types.size() != compositions(lp.n, lp.symbols.size()).size()) {
    for (std::size_t s = 0; s < lp.symbols.size(); ++s)
      if (lp.symbols[s] == irrep_name(Irrep::two_one_one)) parity_symbol = s;
  }
  return build_symmetric_lp(lp.n, lp.symbols, lp.weights, std::move(reduced), std::move(labels),
                            lp.normalization_equality, parity_symbol);
}

struct ZetaResult {
  Rational value;
  LPSolution solution;
  SymLP lp;
};

inline ZetaResult solve_symmetric_lp(SymLP lp) {
  LPSolution sol = simplex_solve(lp.to_problem());
  if (sol.status != LPStatus::optimal) throw std::runtime_error("zeta programme is " + to_string(sol.status));
  Rational value = sol.value;
  return {std::move(value), std::move(sol), std::move(lp)};
}

inline ZetaResult solve_zeta(unsigned n, std::optional<int> d, Parity parity = Parity::none,
                             ZetaForm form = ZetaForm::full3, TdVariant variant = TdVariant::derived) {
  return solve_symmetric_lp(build_zeta(n, d, parity, form, variant));
}

// The same programme over all symbol strings, without symmetry reduction.
inline LPProblem build_unreduced(const SymLP& sym) {
  const std::size_t s = sym.symbols.size();
  const std::size_t r = sym.matrix.rows();
  std::vector<std::vector<std::size_t>> strings;
  std::vector<std::vector<std::size_t>> row_strings;
  std::function<void(std::vector<std::size_t>&, std::size_t, std::vector<std::vector<std::size_t>>&)> gen =
      [&](std::vector<std::size_t>& cur, std::size_t alphabet, std::vector<std::vector<std::size_t>>& out) {
        if (cur.size() == sym.n) {
          out.push_back(cur);
          return;
        }
        for (std::size_t a = 0; a < alphabet; ++a) {
          cur.push_back(a);
          gen(cur, alphabet, out);
          cur.pop_back();
        }
      };
  std::vector<std::size_t> cur;
  gen(cur, s, strings);
  gen(cur, r, row_strings);

  // Keep only strings whose type is a variable of the reduced programme.
  std::vector<std::vector<std::size_t>> kept;
  for (const auto& y : strings) {
    TypeCounts t(s, 0);
    for (std::size_t a : y) ++t[a];
    if (std::find(sym.types.begin(), sym.types.end(), t) != sym.types.end()) kept.push_back(y);
  }

  LPProblem lp;
  for (const auto& y : kept) {
    Rational w = 1;
    for (std::size_t a : y) w *= sym.weights[a];
    lp.objective.push_back(std::move(w));
  }
  lp.nonnegative.assign(kept.size(), true);
  for (const auto& v : row_strings) {
    std::vector<Rational> row;
    for (const auto& y : kept) {
      Rational c = 1;
      for (std::size_t i = 0; i < sym.n; ++i) c *= sym.matrix(v[i], y[i]);
      row.push_back(-c);
    }
    lp.add_constraint(std::move(row), 0);
  }
  lp.add_constraint(std::vector<Rational>(kept.size(), Rational(1)), 1);
  if (sym.normalization_equality) lp.add_constraint(std::vector<Rational>(kept.size(), Rational(-1)), -1);
  return lp;
}

// Maps a point of the three-symbol programme to the truncated programme by
// replacing every (2,1,1) with 1/3 (1,1,1,1) + 2/3 (2,2), distributing the
// mass of each type binomially.
inline std::vector<Rational> substitute_two_one_one(const SymLP& full, const std::vector<Rational>& q,
                                                    const SymLP& truncated) {
  if (full.symbols.size() != 3 || truncated.symbols.size() != 2 || full.n != truncated.n) {
    throw structural_error("substitution maps the three-symbol programme to the two-symbol one");
  }
  std::vector<Rational> out(truncated.types.size());
  const Rational third = make_rational(1, 3);
  const Rational two_thirds = make_rational(2, 3);
  for (std::size_t v = 0; v < full.types.size(); ++v) {
    const auto& t = full.types[v];
    const unsigned c = t[2];
    for (unsigned j = 0; j <= c; ++j) {
      const TypeCounts target{t[0] + j, t[1] + c - j};
      const auto it = std::find(truncated.types.begin(), truncated.types.end(), target);
      out[static_cast<std::size_t>(it - truncated.types.begin())] +=
          q[v] * Rational(binomial(c, j)) * pow(third, j) * pow(two_thirds, c - j);
    }
  }
  return out;
}

// Value and feasibility of a point q for a symmetric programme.
inline bool is_feasible(const SymLP& lp, const std::vector<Rational>& q) {
  Rational total = 0;
  for (const auto& v : q) {
    if (sgn(v) < 0) return false;
    total += v;
  }
  if (lp.normalization_equality ? total != 1 : total > 1) return false;
  for (const auto& row : lp.rows) {
    Rational s = 0;
    for (std::size_t v = 0; v < q.size(); ++v) s += row[v] * q[v];
    if (sgn(s) < 0) return false;
  }
  return true;
}

inline Rational objective_value(const SymLP& lp, const std::vector<Rational>& q) {
  Rational s = 0;
  for (std::size_t v = 0; v < q.size(); ++v) s += lp.objective[v] * q[v];
  return s;
}

// ---------------------------------------------------------------------------
// Dual side of the truncated programme

// sum_{l} (-2)^l C(m,l) C(n-m,k-l)
inline Integer dual_coeff(unsigned n, unsigned m, unsigned k) {
  if (m > n || k > n) throw domain_error("dual_coeff needs m, k <= n");
  Integer total = 0;
  const unsigned lo = k + m > n ? k + m - n : 0;
  const unsigned hi = std::min(k, m);
  for (unsigned l = lo; l <= hi; ++l) {
    Integer term = binomial(m, l) * binomial(n - m, k - l);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), l);
    total += (l % 2 == 1) ? Integer(-term) : term;
  }
  return total;
}

// t^{⊗n} entry on a column string with m copies of (1,1,1,1): (-1)^m 2^{m-n}.
inline Rational truncated_weight(unsigned n, unsigned m) {
  Rational w = pow(make_rational(1, 2), n - m);
  return m % 2 == 1 ? Rational(-w) : w;
}

// min z s.t. delta >= 0, z - sum_k dual_coeff(n,m,k) delta_k >= t_m for all m,
// written as a maximization of -z. Variables: delta_0..delta_n, then z (free).
inline LPProblem build_dual(unsigned n) {
  if (n == 0) throw domain_error("number of copies must be positive");
  LPProblem lp;
  lp.objective.assign(n + 2, 0);
  lp.objective[n + 1] = -1;
  lp.nonnegative.assign(n + 2, true);
  lp.nonnegative[n + 1] = false;
  for (unsigned m = 0; m <= n; ++m) {
    std::vector<Rational> row(n + 2);
    for (unsigned k = 0; k <= n; ++k) row[k] = Rational(dual_coeff(n, m, k));
    row[n + 1] = -1;
    lp.add_constraint(std::move(row), -truncated_weight(n, m));
  }
  return lp;
}

struct DualResult {
  Rational value;  // min z
  LPSolution solution;
};

inline DualResult solve_dual(unsigned n) {
  LPSolution sol = simplex_solve(build_dual(n));
  if (sol.status != LPStatus::optimal) throw std::runtime_error("dual programme is " + to_string(sol.status));
  Rational value = -sol.value;
  return {std::move(value), std::move(sol)};
}

struct AnalyticDual {
  unsigned n = 0;
  Rational beta;
  Rational gamma;
  std::vector<Rational> delta;  // length n+1
  std::vector<Rational> rhs;    // right-hand side of each symmetrized constraint m
  Rational z;                   // max over m of rhs
  unsigned argmax_m = 0;
  bool feasible = false;
  bool identity_holds = false;  // closed form gamma (beta+1)^{n-m} (beta-2)^m of the double sum
};

// delta_k = gamma beta^{n-k} for k < n, delta_n = 0; z is the smallest value
// satisfying every symmetrized dual constraint.
inline AnalyticDual analytic_dual(unsigned n, const Rational& beta, const Rational& gamma) {
  if (n == 0) throw domain_error("number of copies must be positive");
  if (sgn(beta) < 0 || beta >= 1) throw domain_error("beta must lie in [0, 1)");
  AnalyticDual out;
  out.n = n;
  out.beta = beta;
  out.gamma = gamma;
  out.delta.resize(n + 1);
  for (unsigned k = 0; k < n; ++k) out.delta[k] = gamma * pow(beta, n - k);
  out.delta[n] = 0;

  out.identity_holds = true;
  for (unsigned m = 0; m <= n; ++m) {
    Rational sum = 0;
    Rational full = 0;  // same sum with delta_n = gamma as well
    for (unsigned k = 0; k <= n; ++k) {
      const Rational c = Rational(dual_coeff(n, m, k));
      sum += out.delta[k] * c;
      full += gamma * pow(beta, n - k) * c;
    }
    const Rational closed = gamma * pow(beta + 1, n - m) * pow(Rational(beta - 2), m);
    if (full != closed) out.identity_holds = false;
    out.rhs.push_back(truncated_weight(n, m) + sum);
  }
  out.z = out.rhs[0];
  for (unsigned m = 1; m <= n; ++m) {
    if (out.rhs[m] > out.z) {
      out.z = out.rhs[m];
      out.argmax_m = m;
    }
  }

  out.feasible = true;
  for (const auto& d : out.delta)
    if (sgn(d) < 0) out.feasible = false;
  for (const auto& r : out.rhs)
    if (out.z < r) out.feasible = false;
  return out;
}

inline AnalyticDual analytic_dual(unsigned n) {
  return analytic_dual(n, make_rational(1, 2), pow(make_rational(1, 2), n));
}

}  // namespace antisym
