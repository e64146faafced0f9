#pragma once

// Exact operators on (C^d)^{⊗4} with factors ordered A, B, A', B':
// the S4 action, the Young projectors onto the (1,1,1,1), (2,2) and (2,1,1)
// components of Alt^2 ⊗ Alt^2, the normalized states on them, the
// Psi / Q / P~ decomposition of the partially transposed picture, and the
// resulting LP constraint matrices.
//
// Every identity is available along two routes: explicit sparse matrices,
// and symbolic traces via tr V_pi = d^{#cycles(pi)}.

#include "antisym/matrix.hpp"
#include "antisym/rational.hpp"
#include "antisym/young.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace antisym {

// Permutation of {0,1,2,3}; images[k] is where slot k is sent.
class Perm4 {
 public:
  Perm4() : images_{0, 1, 2, 3} {}
  explicit Perm4(std::array<int, 4> images) : images_(images) {
    std::array<bool, 4> seen{};
    for (int v : images_) {
      if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)]) throw domain_error("not a permutation of 4 points");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  // Cycle in 1-based notation, e.g. cycle({1, 3}) is the transposition (13).
  static Perm4 cycle(std::initializer_list<int> points) {
    std::array<int, 4> img{0, 1, 2, 3};
    std::vector<int> p(points);
    for (std::size_t k = 0; k < p.size(); ++k) img[static_cast<std::size_t>(p[k] - 1)] = p[(k + 1) % p.size()] - 1;
    return Perm4(img);
  }

  static std::vector<Perm4> all() {
    std::vector<Perm4> out;
    std::array<int, 4> img{0, 1, 2, 3};
    do {
      out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

  int operator()(int k) const { return images_[static_cast<std::size_t>(k)]; }

  // (a * b)(k) = a(b(k))
  friend Perm4 operator*(const Perm4& a, const Perm4& b) {
    std::array<int, 4> img{};
    for (int k = 0; k < 4; ++k) img[static_cast<std::size_t>(k)] = a(b(k));
    return Perm4(img);
  }

  Perm4 inverse() const {
    std::array<int, 4> img{};
    for (int k = 0; k < 4; ++k) img[static_cast<std::size_t>(images_[static_cast<std::size_t>(k)])] = k;
    return Perm4(img);
  }

  int cycle_count() const {
    std::array<bool, 4> seen{};
    int cycles = 0;
    for (int k = 0; k < 4; ++k) {
      if (seen[static_cast<std::size_t>(k)]) continue;
      ++cycles;
      for (int j = k; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
      }
    }
    return cycles;
  }

  int sign() const { return (4 - cycle_count()) % 2 == 0 ? 1 : -1; }

  auto operator<=>(const Perm4&) const = default;

 private:
  std::array<int, 4> images_;
};

// Element of the rational group algebra Q[S4].
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  GroupAlgebraElement(const Perm4& p, const Rational& c = 1) { add(p, c); }

  static GroupAlgebraElement identity() { return GroupAlgebraElement(Perm4()); }

  void add(const Perm4& p, const Rational& c) {
    Rational& slot = coeffs_[p];
    slot += c;
    if (sgn(slot) == 0) coeffs_.erase(p);
  }

  const std::map<Perm4, Rational>& coeffs() const { return coeffs_; }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r = a;
    for (const auto& [p, c] : b.coeffs_) r.add(p, c);
    return r;
  }
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r = a;
    for (const auto& [p, c] : b.coeffs_) r.add(p, -c);
    return r;
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r;
    for (const auto& [p, c] : a.coeffs_)
      for (const auto& [q, e] : b.coeffs_) r.add(p * q, c * e);
    return r;
  }
  friend GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a) {
    GroupAlgebraElement r;
    for (const auto& [p, c] : a.coeffs_) r.add(p, s * c);
    return r;
  }

  // Trace of the represented operator on (C^d)^{⊗4}.
  Rational trace(int d) const {
    Rational t = 0;
    for (const auto& [p, c] : coeffs_) t += c * pow(Rational(d), static_cast<unsigned>(p.cycle_count()));
    return t;
  }

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  std::map<Perm4, Rational> coeffs_;
};

namespace detail {

inline std::size_t pow_size(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  for (unsigned k = 0; k < exp; ++k) r *= base;
  return r;
}

inline void require_dim(int d, int min_d) {
  if (d < min_d) throw domain_error("dimension d=" + std::to_string(d) + " below the supported minimum " +
                                    std::to_string(min_d));
}

}  // namespace detail

// V_pi moves the content of slot k to slot pi(k); V_{ab} = V_a V_b.
inline SparseRMatrix perm_operator(const Perm4& pi, int d) {
  detail::require_dim(d, 2);
  const FactorDims dims(4, static_cast<std::size_t>(d));
  const std::size_t side = detail::pow_size(static_cast<std::size_t>(d), 4);
  detail::FactorIndexer idx(dims);
  SparseRMatrix m(side, side);
  std::vector<std::size_t> in, out(4);
  for (std::size_t col = 0; col < side; ++col) {
    idx.split(col, in);
    for (int k = 0; k < 4; ++k) out[static_cast<std::size_t>(pi(k))] = in[static_cast<std::size_t>(k)];
    m.add(idx.join(out), col, 1);
  }
  m.normalize();
  m.set_factors(dims);
  return m;
}

inline SparseRMatrix to_operator(const GroupAlgebraElement& x, int d) {
  detail::require_dim(d, 2);
  const FactorDims dims(4, static_cast<std::size_t>(d));
  const std::size_t side = detail::pow_size(static_cast<std::size_t>(d), 4);
  detail::FactorIndexer idx(dims);
  SparseRMatrix m(side, side);
  std::vector<std::size_t> in, out(4);
  for (std::size_t col = 0; col < side; ++col) {
    idx.split(col, in);
    for (const auto& [pi, c] : x.coeffs()) {
      for (int k = 0; k < 4; ++k) out[static_cast<std::size_t>(pi(k))] = in[static_cast<std::size_t>(k)];
      m.add(idx.join(out), col, c);
    }
  }
  m.normalize();
  m.set_factors(dims);
  return m;
}

// ---------------------------------------------------------------------------
// Young projectors

enum class Irrep { alt4, two_two, two_one_one };

inline constexpr std::array<Irrep, 3> kAllIrreps{Irrep::alt4, Irrep::two_two, Irrep::two_one_one};

inline Partition partition_of(Irrep y) {
  switch (y) {
    case Irrep::alt4: return {1, 1, 1, 1};
    case Irrep::two_two: return {2, 2};
    case Irrep::two_one_one: return {2, 1, 1};
  }
  return {};
}

inline std::string irrep_name(Irrep y) {
  switch (y) {
    case Irrep::alt4: return "(1,1,1,1)";
    case Irrep::two_two: return "(2,2)";
    case Irrep::two_one_one: return "(2,1,1)";
  }
  return "?";
}

inline std::size_t irrep_index(Irrep y) { return static_cast<std::size_t>(y); }

namespace group_algebra {

inline GroupAlgebraElement e() { return GroupAlgebraElement::identity(); }
inline GroupAlgebraElement t(int a, int b) { return GroupAlgebraElement(Perm4::cycle({a, b})); }

// 1/4 (e - (12))(e - (34)): projector onto Alt^2 ⊗ Alt^2.
inline GroupAlgebraElement alt2_alt2() { return make_rational(1, 4) * ((e() - t(1, 2)) * (e() - t(3, 4))); }

inline GroupAlgebraElement antisymmetrizer() {
  GroupAlgebraElement r;
  for (const Perm4& p : Perm4::all()) r.add(p, make_rational(p.sign(), 24));
  return r;
}

inline GroupAlgebraElement young_two_two() {
  return make_rational(1, 48) *
         ((e() - t(1, 2)) * (e() - t(3, 4)) * (e() + t(1, 3)) * (e() + t(2, 4)) * (e() - t(1, 2)) * (e() - t(3, 4)));
}

inline GroupAlgebraElement young(Irrep y) {
  switch (y) {
    case Irrep::alt4: return antisymmetrizer();
    case Irrep::two_two: return young_two_two();
    case Irrep::two_one_one: return alt2_alt2() - antisymmetrizer() - young_two_two();
  }
  return {};
}

// F_{AA'} and F_{BB'} in the ABA'B' ordering.
inline GroupAlgebraElement flip_aa() { return t(1, 3); }
inline GroupAlgebraElement flip_bb() { return t(2, 4); }

}  // namespace group_algebra

// Closed-form dimension of each component.
inline Integer irrep_dimension(Irrep y, int d) {
  const Integer D = d;
  switch (y) {
    case Irrep::alt4: return D * (D - 1) * (D - 2) * (D - 3) / 24;
    case Irrep::two_two: return (D + 1) * D * D * (D - 1) / 12;
    case Irrep::two_one_one: return (D + 1) * D * (D - 1) * (D - 2) / 8;
  }
  return 0;
}

inline SparseRMatrix young_projector(Irrep y, int d) {
  detail::require_dim(d, 3);
  return to_operator(group_algebra::young(y), d);
}

inline bool irrep_exists(Irrep y, int d) { return irrep_dimension(y, d) > 0; }

// rho_y = P_y / dim P_y.
inline SparseRMatrix rho_state(Irrep y, int d) {
  detail::require_dim(d, 3);
  if (!irrep_exists(y, d)) {
    throw degenerate_input_error("state " + irrep_name(y) + " does not exist at d=" + std::to_string(d));
  }
  return scale(young_projector(y, d), make_rational(Integer(1), irrep_dimension(y, d)));
}

// ---------------------------------------------------------------------------
// Two-factor Werner pieces

inline RMatrix swap_operator(int d) {
  const auto n = static_cast<std::size_t>(d);
  RMatrix f(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f(i * n + j, j * n + i) = 1;
  return f.with_factors({n, n});
}

// Projectors onto the antisymmetric / symmetric subspace of C^d ⊗ C^d.
inline RMatrix antisymmetric_projector(int d) {
  const auto n = static_cast<std::size_t>(d);
  return scale(subtract(RMatrix::identity(n * n), swap_operator(d)), make_rational(1, 2)).with_factors({n, n});
}

inline RMatrix symmetric_projector(int d) {
  const auto n = static_cast<std::size_t>(d);
  return scale(add(RMatrix::identity(n * n), swap_operator(d)), make_rational(1, 2)).with_factors({n, n});
}

// alpha_d and sigma_d.
inline RMatrix antisymmetric_state(int d) {
  return scale(antisymmetric_projector(d), make_rational(Integer(1), binomial(d, 2)));
}

inline RMatrix symmetric_state(int d) {
  return scale(symmetric_projector(d), make_rational(Integer(1), binomial(d + 1, 2)));
}

// Maximally entangled state |Phi><Phi| on C^d ⊗ C^d.
inline RMatrix max_entangled(int d) {
  const auto n = static_cast<std::size_t>(d);
  RMatrix phi(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) phi(i * n + i, j * n + j) = make_rational(1, d);
  return phi.with_factors({n, n});
}

// ---------------------------------------------------------------------------
// Reduced states and the t-vector

struct WernerWeights {
  Rational alpha;  // weight on alpha_d
  Rational sigma;  // weight on sigma_d
};

// Closed forms: tr_{BB'} rho_y = w_alpha alpha + w_sigma sigma.
inline WernerWeights reduced_weights(Irrep y) {
  switch (y) {
    case Irrep::alt4: return {1, 0};
    case Irrep::two_two: return {make_rational(1, 4), make_rational(3, 4)};
    case Irrep::two_one_one: return {make_rational(1, 2), make_rational(1, 2)};
  }
  return {};
}

// t_y = tr (tr_{BB'} rho_y) F_{AA'}, closed form.
inline Rational t_closed(Irrep y) {
  const auto w = reduced_weights(y);
  return w.sigma - w.alpha;  // tr alpha F = -1, tr sigma F = +1
}

struct TVector {
  std::vector<Irrep> irreps;   // components that exist at this d
  std::vector<Rational> t;     // t_y from explicit matrices
  bool reduced_states_match = false;  // tr_{BB'} rho_y equals the Werner mixture exactly
};

// Explicit-matrix computation: partial trace over B, B', then overlap with
// the swap of A and A'.
inline TVector t_vector(int d) {
  detail::require_dim(d, 3);
  TVector out;
  out.reduced_states_match = true;
  const RMatrix f = swap_operator(d);
  const RMatrix alpha = antisymmetric_state(d);
  const RMatrix sigma = symmetric_state(d);
  for (Irrep y : kAllIrreps) {
    if (!irrep_exists(y, d)) continue;
    const RMatrix reduced = to_dense(partial_trace(rho_state(y, d), {0, 2}));
    out.irreps.push_back(y);
    out.t.push_back(trace(multiply(reduced, f)));
    const auto w = reduced_weights(y);
    if (!(reduced == add(scale(alpha, w.alpha), scale(sigma, w.sigma)))) out.reduced_states_match = false;
  }
  return out;
}

// Symbolic route: tr rho_y X for X in the group algebra, by cycle counting.
inline Rational symbolic_expectation(Irrep y, const GroupAlgebraElement& x, int d) {
  return (group_algebra::young(y) * x).trace(d) / Rational(irrep_dimension(y, d));
}

// ---------------------------------------------------------------------------
// Psi, Q, P~

struct PsiQP {
  SparseRMatrix psi;
  SparseRMatrix q;
  SparseRMatrix p_tilde;
  SparseRMatrix alt2_alt2;  // P_{(1,1)} ⊗ P_{(1,1)}
  // Half of q, i.e. the sandwich with prefactor 2d/(d-2). The overlap table
  // and T_d are expressed in the basis {psi, q_half, alt2_alt2 - psi - q_half}.
  SparseRMatrix q_half;
};

inline Rational psi_dimension(int) { return 1; }
inline Rational q_dimension(int d) { return Rational(d * d - 1); }
inline Rational p_tilde_dimension(int d) {
  const Rational m = Rational(binomial(d, 2));
  return m * m - d * d;
}

// |Psi><Psi| built from its vector: |Psi> ∝ sum_{i<j} |psi_ij>_{AB} |psi_ij>_{A'B'}.
inline SparseRMatrix psi_from_vector(int d) {
  const auto n = static_cast<std::size_t>(d);
  const FactorDims dims(4, n);
  detail::FactorIndexer idx(dims);
  std::vector<Rational> v(detail::pow_size(n, 4));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // |ij> - |ji> on both pairs
      const std::size_t a[2] = {i, j};
      const int s[2] = {1, -1};
      for (int u = 0; u < 2; ++u)
        for (int w = 0; w < 2; ++w) v[idx.join({a[u], a[1 - u], a[w], a[1 - w]})] += s[u] * s[w];
    }
  }
  // |psi_ij> carries 1/sqrt2, |Psi> carries 1/sqrt(C(d,2)).
  const Rational norm = make_rational(Integer(1), 4 * binomial(d, 2));
  SparseRMatrix m(v.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (sgn(v[r]) == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (sgn(v[c]) != 0) m.add(r, c, v[r] * v[c] * norm);
  }
  m.normalize();
  m.set_factors(dims);
  return m;
}

// Projectors onto the three components of Alt^2 ⊗ conj(Alt^2). The
// sandwich (P⊗P)((1-Phi)_{AA'} ⊗ Phi_{BB'})(P⊗P) has trace (d^2-1)(d-2)/(4d),
// so the projector Q carries the prefactor 4d/(d-2).
inline PsiQP psi_q_pp(int d) {
  if (d == 2) throw degenerate_input_error("P~ has negative nominal dimension at d=2");
  detail::require_dim(d, 3);
  const auto n = static_cast<std::size_t>(d);
  PsiQP out;
  out.alt2_alt2 = to_operator(group_algebra::alt2_alt2(), d);
  out.psi = psi_from_vector(d);

  const RMatrix phi = max_entangled(d);
  const RMatrix one_minus_phi = subtract(RMatrix::identity(n * n), phi);
  const SparseRMatrix x = multiply(embed_local(one_minus_phi, {0, 2}, n, 4), embed_local(phi, {1, 3}, n, 4));
  out.q_half = scale(multiply(multiply(out.alt2_alt2, x), out.alt2_alt2), make_rational(2 * d, d - 2));
  out.q = scale(out.q_half, 2);
  out.p_tilde = subtract(subtract(out.alt2_alt2, out.q), out.psi);
  return out;
}

// Psi through the sandwiched form 2d/(d-1) (P⊗P)(Phi_{AA'} ⊗ Phi_{BB'})(P⊗P).
inline SparseRMatrix psi_from_sandwich(int d) {
  const auto n = static_cast<std::size_t>(d);
  const SparseRMatrix pp = to_operator(group_algebra::alt2_alt2(), d);
  const RMatrix phi = max_entangled(d);
  const SparseRMatrix x = multiply(embed_local(phi, {0, 2}, n, 4), embed_local(phi, {1, 3}, n, 4));
  return scale(multiply(multiply(pp, x), pp), make_rational(2 * d, d - 1));
}

// ---------------------------------------------------------------------------
// Partial-transpose overlaps

enum class OverlapRow { psi, q, p_tilde };

inline constexpr std::array<OverlapRow, 3> kAllOverlapRows{OverlapRow::psi, OverlapRow::q, OverlapRow::p_tilde};

inline std::string overlap_row_name(OverlapRow r) {
  switch (r) {
    case OverlapRow::psi: return "Psi";
    case OverlapRow::q: return "Q";
    case OverlapRow::p_tilde: return "P~";
  }
  return "?";
}

// tr rho_y^Gamma X for X in {Psi, Q/2, P~ + Q/2}, closed forms (valid for d >= 3).
// The projector overlaps follow as Q: 2 q_val, P~: 1 - psi_val - 2 q_val.
inline Rational overlap_closed(OverlapRow row, Irrep y, int d) {
  const Rational D = d;
  const Rational psi_val = (y == Irrep::two_one_one ? -2 : 2) / (D * (D - 1));
  Rational q_val;
  switch (y) {
    case Irrep::alt4: q_val = -2 * (D + 1) / (D * (D - 2)); break;
    case Irrep::two_two: q_val = 1 / D; break;
    case Irrep::two_one_one: q_val = 2 / (D * (D - 2)); break;
  }
  switch (row) {
    case OverlapRow::psi: return psi_val;
    case OverlapRow::q: return q_val;
    case OverlapRow::p_tilde: return 1 - psi_val - q_val;
  }
  return 0;
}

// Overlap table: rows Psi, Q, P~; one column per component existing at d.
struct OverlapTable {
  int d = 0;
  std::vector<Irrep> columns;
  std::array<std::vector<Rational>, 3> entries;  // entries[row][col]

  const Rational& at(OverlapRow r, std::size_t col) const { return entries[static_cast<std::size_t>(r)][col]; }
};

// Gamma transposes factors A' and B'.
inline const std::set<std::size_t>& gamma_factors() {
  static const std::set<std::size_t> flip{2, 3};
  return flip;
}

// Explicit matrices: tr(rho_y^Gamma X) for X in {Psi, Q/2, P~ + Q/2}.
inline OverlapTable overlap_table(int d) {
  detail::require_dim(d, 3);
  const PsiQP ops = psi_q_pp(d);
  const SparseRMatrix rest = subtract(subtract(ops.alt2_alt2, ops.psi), ops.q_half);
  OverlapTable t;
  t.d = d;
  for (Irrep y : kAllIrreps) {
    if (!irrep_exists(y, d)) continue;
    t.columns.push_back(y);
    const SparseRMatrix rho_gamma = partial_transpose(rho_state(y, d), gamma_factors());
    t.entries[0].push_back(trace_of_product(rho_gamma, ops.psi));
    t.entries[1].push_back(trace_of_product(rho_gamma, ops.q_half));
    t.entries[2].push_back(trace_of_product(rho_gamma, rest));
  }
  return t;
}

// Explicit matrices: tr(rho_y^Gamma X) for the projectors X in {Psi, Q, P~}.
inline OverlapTable projector_overlap_table(int d) {
  detail::require_dim(d, 3);
  const PsiQP ops = psi_q_pp(d);
  OverlapTable t;
  t.d = d;
  for (Irrep y : kAllIrreps) {
    if (!irrep_exists(y, d)) continue;
    t.columns.push_back(y);
    const SparseRMatrix rho_gamma = partial_transpose(rho_state(y, d), gamma_factors());
    t.entries[0].push_back(trace_of_product(rho_gamma, ops.psi));
    t.entries[1].push_back(trace_of_product(rho_gamma, ops.q));
    t.entries[2].push_back(trace_of_product(rho_gamma, ops.p_tilde));
  }
  return t;
}

// Symbolic route: Phi^Gamma = F/d reduces every overlap to expectations of
// flips in rho_y, evaluated by cycle counting.
inline OverlapTable overlap_table_symbolic(int d) {
  detail::require_dim(d, 3);
  using namespace group_algebra;
  const Rational D = d;
  OverlapTable t;
  t.d = d;
  for (Irrep y : kAllIrreps) {
    if (!irrep_exists(y, d)) continue;
    t.columns.push_back(y);
    const Rational ff = symbolic_expectation(y, flip_aa() * flip_bb(), d);
    const Rational fb = symbolic_expectation(y, flip_bb(), d);
    const Rational psi = 2 / (D * (D - 1)) * ff;
    const Rational q = 2 / (D - 2) * fb - 2 / (D * (D - 2)) * ff;
    t.entries[0].push_back(psi);
    t.entries[1].push_back(q);
    t.entries[2].push_back(1 - psi - q);
  }
  return t;
}

inline OverlapTable overlap_table_closed(int d) {
  OverlapTable t;
  t.d = d;
  for (Irrep y : kAllIrreps) {
    if (!irrep_exists(y, d)) continue;
    t.columns.push_back(y);
    for (OverlapRow r : kAllOverlapRows) t.entries[static_cast<std::size_t>(r)].push_back(overlap_closed(r, y, d));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Constraint matrices

// The printed variant of entry (3,3) of T_d uses numerator 2d-3; the value that
// follows from rescaling the overlap matrix has numerator 2. The projector
// variant builds both matrices from the overlaps with the projectors Q and P~
// instead of Q/2 and P~ + Q/2, which tightens the P~ row at finite d.
enum class TdVariant { derived, printed, projector };

struct ConstraintMatrices {
  std::optional<RMatrix> t_hat;  // absent for d = infinity
  RMatrix t;
};

inline RMatrix t_infinity() { return RMatrix{{1, 1, -1}, {-2, 1, 0}, {1, 1, 1}}; }

// Rows Psi, Q, P~; columns (1,1,1,1), (2,2), (2,1,1). std::nullopt means d = infinity.
inline ConstraintMatrices constraint_matrices(std::optional<int> d, TdVariant variant = TdVariant::derived) {
  if (!d) return {std::nullopt, t_infinity()};
  detail::require_dim(*d, 3);
  RMatrix t_hat(3, 3);
  for (OverlapRow r : kAllOverlapRows)
    for (Irrep y : kAllIrreps) t_hat(static_cast<std::size_t>(r), irrep_index(y)) = overlap_closed(r, y, *d);

  const Rational D = *d;
  if (variant == TdVariant::projector) {
    for (std::size_t c = 0; c < 3; ++c) {
      t_hat(1, c) *= 2;
      t_hat(2, c) = 1 - t_hat(0, c) - t_hat(1, c);
    }
  }
  RMatrix t = t_hat;
  for (std::size_t c = 0; c < 3; ++c) {
    t(0, c) *= D * (D - 1) / 2;
    t(1, c) *= variant == TdVariant::projector ? D / 2 : D;
  }
  if (variant == TdVariant::printed) t(2, 2) = 1 - (2 * D - 3) / (D * (D - 1) * (D - 2));
  return {t_hat, t};
}

}  // namespace antisym
