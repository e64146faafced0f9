#pragma once

// Exact self-checks of the representation-theoretic constructions at a
// given d. The fast level uses group-algebra identities and cycle-count
// traces; the full level adds explicit d^4 x d^4 matrices.

#include "antisym/werner.hpp"
#include "antisym/young.hpp"

#include <random>
#include <string>
#include <vector>

namespace antisym {

enum class VerifyLevel { fast, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int d = 0;
  VerifyLevel level = VerifyLevel::fast;
  std::vector<CheckResult> checks;
  std::optional<OverlapTable> overlaps;  // explicit table at the full level

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

// Random rational in [-range, range] with denominator up to max_den.
inline Rational random_rational(std::mt19937_64& rng, long range = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-range * max_den, range * max_den);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, int d) {
  std::vector<Rational> x;
  for (int i = 0; i < d; ++i) x.push_back(random_rational(rng));
  return x;
}

namespace detail {

inline bool is_zero(const SparseRMatrix& m) { return m.nonzeros() == 0; }

inline bool overlap_tables_equal(const OverlapTable& a, const OverlapTable& b) {
  return a.columns == b.columns && a.entries == b.entries;
}

inline bool columns_sum_to_one(const OverlapTable& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    if (t.entries[0][c] + t.entries[1][c] + t.entries[2][c] != 1) return false;
  return true;
}

}  // namespace detail

inline VerifyReport verify_representation(int d, VerifyLevel level, unsigned plethysm_points = 10,
                                          std::uint64_t seed = 1) {
  if (d < 3) throw domain_error("verification needs d >= 3");
  VerifyReport rep;
  rep.d = d;
  rep.level = level;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  // Dimensions
  const RepDims dims = lemma_rep_dims(d);
  check("dimension closed forms agree with Weyl formula", dims.verified);
  bool counts = true;
  for (Irrep y : kAllIrreps) counts = counts && ssyt_count(partition_of(y), d) == weyl_dimension(partition_of(y), d);
  check("tableau counts equal Weyl dimensions", counts);
  check("(1,1,1,1) exists iff d >= 4", irrep_exists(Irrep::alt4, d) == (d >= 4));

  // Plethysms
  std::mt19937_64 rng(seed);
  bool sym_ok = true;
  bool alt_ok = true;
  for (unsigned k = 0; k < plethysm_points; ++k) {
    const auto x = random_point(rng, d);
    sym_ok = sym_ok && plethysm_check(PlethysmKind::sym2, x).equal;
    alt_ok = alt_ok && plethysm_check(PlethysmKind::alt2, x).equal;
  }
  check("Sym^2(Alt^2) = (2,2) + (1,1,1,1) characters", sym_ok, std::to_string(plethysm_points) + " random points");
  check("Alt^2(Alt^2) = (2,1,1) characters", alt_ok, std::to_string(plethysm_points) + " random points");

  // Group algebra
  using namespace group_algebra;
  bool idem = true;
  bool orth = true;
  bool traces = true;
  GroupAlgebraElement sum;
  for (Irrep y : kAllIrreps) {
    const auto p = young(y);
    idem = idem && p * p == p;
    traces = traces && p.trace(d) == Rational(irrep_dimension(y, d));
    sum = sum + p;
    for (Irrep z : kAllIrreps)
      if (z != y) orth = orth && (p * young(z)).coeffs().empty();
  }
  check("Young projectors idempotent in the group algebra", idem);
  check("Young projectors mutually orthogonal in the group algebra", orth);
  check("projector traces by cycle counting equal dimensions", traces);
  check("projectors sum to Alt^2 ⊗ Alt^2", sum == alt2_alt2());

  bool t_ok = true;
  bool signs = true;
  for (Irrep y : kAllIrreps) {
    if (!irrep_exists(y, d)) continue;
    t_ok = t_ok && symbolic_expectation(y, flip_aa(), d) == t_closed(y);
    const Rational expected = y == Irrep::two_one_one ? -1 : 1;
    signs = signs && symbolic_expectation(y, flip_aa() * flip_bb(), d) == expected;
  }
  check("t-vector (-1, 1/2, 0) by cycle counting", t_ok);
  check("flip-flip expectations (+1, +1, -1)", signs);

  const OverlapTable symbolic = overlap_table_symbolic(d);
  const OverlapTable closed = overlap_table_closed(d);
  check("overlap table by cycle counting equals closed forms", detail::overlap_tables_equal(symbolic, closed));
  check("overlap columns sum to 1", detail::columns_sum_to_one(closed));

  if (level == VerifyLevel::fast) return rep;

  // Explicit matrices
  std::vector<SparseRMatrix> proj;
  for (Irrep y : kAllIrreps) proj.push_back(young_projector(y, d));
  bool m_idem = true;
  bool m_adj = true;
  bool m_orth = true;
  bool m_tr = true;
  SparseRMatrix m_sum = proj[0];
  for (std::size_t a = 0; a < 3; ++a) {
    m_idem = m_idem && multiply(proj[a], proj[a]) == proj[a];
    m_adj = m_adj && transpose(proj[a]) == proj[a];
    m_tr = m_tr && trace(proj[a]) == Rational(weyl_dimension(partition_of(kAllIrreps[a]), d));
    for (std::size_t b = a + 1; b < 3; ++b) m_orth = m_orth && detail::is_zero(multiply(proj[a], proj[b]));
    if (a > 0) m_sum = add(m_sum, proj[a]);
  }
  check("Young projector matrices idempotent", m_idem);
  check("Young projector matrices symmetric", m_adj);
  check("Young projector matrices mutually orthogonal", m_orth);
  check("Young projector traces equal Weyl dimensions", m_tr);
  check("Young projector matrices sum to Alt^2 ⊗ Alt^2", m_sum == to_operator(alt2_alt2(), d));

  const TVector tv = t_vector(d);
  bool tv_ok = tv.reduced_states_match;
  for (std::size_t k = 0; k < tv.irreps.size(); ++k) tv_ok = tv_ok && tv.t[k] == t_closed(tv.irreps[k]);
  check("reduced states and t-vector from explicit matrices", tv_ok);

  bool pt_trace = true;
  for (Irrep y : kAllIrreps) {
    if (!irrep_exists(y, d)) continue;
    pt_trace = pt_trace && trace(partial_transpose(rho_state(y, d), gamma_factors())) == 1;
  }
  check("partial transpose preserves trace of each state", pt_trace);

  const PsiQP ops = psi_q_pp(d);
  const std::array<const SparseRMatrix*, 3> pq{&ops.psi, &ops.q, &ops.p_tilde};
  const std::array<Rational, 3> expected_tr{psi_dimension(d), q_dimension(d), p_tilde_dimension(d)};
  bool pq_idem = true;
  bool pq_orth = true;
  bool pq_tr = true;
  for (std::size_t a = 0; a < 3; ++a) {
    pq_idem = pq_idem && multiply(*pq[a], *pq[a]) == *pq[a] && transpose(*pq[a]) == *pq[a];
    pq_tr = pq_tr && trace(*pq[a]) == expected_tr[a];
    for (std::size_t b = a + 1; b < 3; ++b) pq_orth = pq_orth && detail::is_zero(multiply(*pq[a], *pq[b]));
  }
  check("Psi, Q, P~ are symmetric idempotents", pq_idem);
  check("Psi, Q, P~ mutually orthogonal", pq_orth);
  check("Psi, Q, P~ traces (1, d^2-1, (d(d-1)/2)^2-d^2)", pq_tr);
  check("Psi + Q + P~ = Alt^2 ⊗ Alt^2", add(add(ops.psi, ops.q), ops.p_tilde) == ops.alt2_alt2);
  check("Psi from its vector equals the sandwiched form", ops.psi == psi_from_sandwich(d));

  OverlapTable explicit_table = overlap_table(d);
  check("explicit overlap table equals closed forms", detail::overlap_tables_equal(explicit_table, closed));
  const OverlapTable proj_table = projector_overlap_table(d);
  bool proj_ok = proj_table.columns == closed.columns && detail::columns_sum_to_one(proj_table);
  for (std::size_t c = 0; proj_ok && c < closed.columns.size(); ++c) {
    proj_ok = proj_table.entries[0][c] == closed.entries[0][c] && proj_table.entries[1][c] == 2 * closed.entries[1][c];
  }
  check("projector overlaps: Q row is twice the Q/2 row", proj_ok);
  rep.overlaps = std::move(explicit_table);
  return rep;
}

}  // namespace antisym
