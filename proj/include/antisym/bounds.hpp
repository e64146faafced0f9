#pragma once

// Entanglement bounds for the antisymmetric state alpha_d:
//   * the antisymmetric-extension CMI bound (squashed entanglement / key),
//   * entanglement-cost and relative-entropy lower bounds from zeta,
//   * the relative-entropy continuity function,
//   * a floating-point see-saw that lower-bounds the maximal purity.

#include "antisym/rational.hpp"
#include "antisym/zeta.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace antisym {

// A bound whose value is log_scale * log2(exact_core) when the core is exact.
struct BoundReport {
  std::string name;
  std::optional<Rational> exact_core;
  Rational log_scale = 1;
  double log2_value = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string provenance;

  std::optional<std::string> parameter(const std::string& key) const {
    for (const auto& [k, v] : parameters)
      if (k == key) return v;
    return std::nullopt;
  }
};

inline BoundReport make_log_report(std::string name, Rational core, Rational scale, std::string provenance) {
  BoundReport r;
  r.name = std::move(name);
  r.log2_value = to_double(scale) * log2(core);
  r.exact_core = std::move(core);
  r.log_scale = std::move(scale);
  r.provenance = std::move(provenance);
  return r;
}

inline std::string dimension_label(std::optional<int> d) { return d ? std::to_string(*d) : std::string("inf"); }

// ---------------------------------------------------------------------------
// Squashed entanglement via antisymmetric extensions

struct CmiExtension {
  int k = 0;
  Rational ratio;  // 2^{CMI}
  double bits = 0;
};

inline CmiExtension cmi_extension(int d, int k) {
  if (d < 3) throw domain_error("the extension bound needs d >= 3");
  if (k < 2 || k > d) throw domain_error("extension size k must lie in 2..d");
  const Rational product = make_rational(k, k - 1) * make_rational(d - k + 2, d - k + 1);
  const Integer b1 = binomial(d, k - 1);
  const Rational binomials = make_rational(b1 * b1, binomial(d, k - 2) * binomial(d, k));
  if (product != binomials) throw std::logic_error("extension ratio formulas disagree");
  return {k, product, log2(product)};
}

inline std::vector<CmiExtension> cmi_table(int d) {
  std::vector<CmiExtension> out;
  for (int k = 2; k <= d; ++k) out.push_back(cmi_extension(d, k));
  return out;
}

struct SquashedBound {
  BoundReport report;
  int argmin_k = 0;
  Rational min_ratio;
  std::vector<CmiExtension> table;
};

// Half the smallest CMI over k. For odd d the minimum is attained twice;
// the smaller k is reported.
inline SquashedBound squashed_upper(int d) {
  SquashedBound out;
  out.table = cmi_table(d);
  const CmiExtension* best = &out.table.front();
  for (const auto& row : out.table)
    if (row.ratio < best->ratio) best = &row;
  out.argmin_k = best->k;
  out.min_ratio = best->ratio;
  out.report = make_log_report("E_sq / K_D upper", best->ratio, make_rational(1, 2), "antisymmetric-extension CMI bound");
  out.report.parameters = {{"d", std::to_string(d)}, {"k", std::to_string(best->k)}};
  return out;
}

// Closed form of the minimal ratio: ((d+2)/d)^2 for even d, (d+3)/(d-1) for odd d.
inline Rational squashed_closed_ratio(int d) {
  if (d < 3) throw domain_error("the extension bound needs d >= 3");
  if (d % 2 == 0) return pow(make_rational(d + 2, d), 2);
  return make_rational(d + 3, d - 1);
}

inline int squashed_closed_argmin(int d) { return d % 2 == 0 ? d / 2 + 1 : (d + 1) / 2; }

// ---------------------------------------------------------------------------
// Lower bounds from the purity programme

enum class BoundMode { lp, analytic };

inline std::string to_string(BoundMode m) { return m == BoundMode::lp ? "lp" : "analytic"; }

struct PurityBound {
  Rational zeta;
  std::optional<ZetaResult> lp;  // set in lp mode
};

// zeta for (n, d); at d = infinity the truncated programme is used unless
// another form is requested. Analytic mode returns (3/4)^n.
inline PurityBound purity_bound(unsigned n, std::optional<int> d, BoundMode mode,
                                std::optional<ZetaForm> form = std::nullopt) {
  if (n == 0) throw domain_error("number of copies must be positive");
  if (mode == BoundMode::analytic) {
    if (d && *d < 3) throw domain_error("zeta needs d >= 3");
    return {pow(make_rational(3, 4), n), std::nullopt};
  }
  const ZetaForm f = form.value_or(d ? ZetaForm::full3 : ZetaForm::truncated2);
  ZetaResult r = solve_zeta(n, d, Parity::none, f);
  Rational z = r.value;
  return {std::move(z), std::move(r)};
}

// E_C >= E_F(alpha^{⊗n})/n >= -(1/n) log2 zeta.
inline BoundReport ec_lower(unsigned n, std::optional<int> d, BoundMode mode,
                            std::optional<ZetaForm> form = std::nullopt) {
  const PurityBound p = purity_bound(n, d, mode, form);
  BoundReport r = make_log_report("E_C lower (" + to_string(mode) + ")", p.zeta, make_rational(-1, long(n)),
                                  mode == BoundMode::lp ? "collision entropy via PPT purity LP"
                                                        : "collision entropy via analytic dual point");
  r.parameters = {{"n", std::to_string(n)}, {"d", dimension_label(d)}, {"mode", to_string(mode)}};
  return r;
}

// The relative entropy bound uses the square root of the maximal purity.
inline BoundReport er_lower(unsigned n, std::optional<int> d, BoundMode mode,
                            std::optional<ZetaForm> form = std::nullopt) {
  const PurityBound p = purity_bound(n, d, mode, form);
  BoundReport r = make_log_report("E_R lower (" + to_string(mode) + ")", p.zeta, make_rational(-1, 2 * long(n)),
                                  "overlap with separable states via square root of purity");
  r.parameters = {{"n", std::to_string(n)}, {"d", dimension_label(d)}, {"mode", to_string(mode)}};
  return r;
}

// log2((d+2)/d): regularized PPT relative entropy, reported for contrast.
inline BoundReport er_ppt_contrast(int d) {
  if (d < 2) throw domain_error("dimension must be at least 2");
  BoundReport r = make_log_report("E_R,PPT (regularized)", make_rational(d + 2, d), 1, "Rains-type PPT relative entropy");
  r.parameters = {{"d", std::to_string(d)}};
  return r;
}

inline double binary_entropy(double p) {
  if (p < 0 || p > 1) throw domain_error("probability outside [0, 1]");
  if (p == 0 || p == 1) return 0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

// 2 (eps + h(eps)) log2 d.
inline double continuity_delta(double eps, int d) {
  if (!(eps >= 0 && eps <= 1)) throw domain_error("eps must lie in [0, 1]");
  if (d < 2) throw domain_error("dimension must be at least 2");
  return 2 * (eps + binary_entropy(eps)) * std::log2(static_cast<double>(d));
}

// ---------------------------------------------------------------------------
// See-saw purity oracle (double precision)

struct PurityResult {
  double value = 0;
  unsigned n = 0;
  int d = 0;
  unsigned restarts = 0;
  unsigned iterations = 0;
  std::uint64_t seed = 0;
  std::vector<double> per_restart;
  std::vector<std::vector<double>> histories;  // objective after each step, per restart
};

namespace detail {

// n copies of the antisymmetric subspace of C^d ⊗ C^d. Coordinates are with
// respect to (|ij> - |ji>)/sqrt(2), i < j lexicographic, tensored over
// copies. Full vectors are indexed (A_1..A_n, B_1..B_n), A most significant.
class AntisymmetricPower {
 public:
  AntisymmetricPower(unsigned n, int d) : n_(n), d_(d) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) pairs_.emplace_back(i, j);
    side_ = 1;
    for (unsigned c = 0; c < n; ++c) side_ *= static_cast<std::size_t>(d);
    dim_ = 1;
    for (unsigned c = 0; c < n; ++c) dim_ *= pairs_.size();
  }

  std::size_t dim() const { return dim_; }

  // Coefficient vector -> d^n x d^n matrix M with psi = sum M(a,b) |a>_A |b>_B.
  Eigen::MatrixXd embed(const Eigen::VectorXd& c) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(side_), static_cast<Eigen::Index>(side_));
    const double amp = std::pow(std::sqrt(0.5), static_cast<double>(n_));
    for (std::size_t idx = 0; idx < dim_; ++idx) {
      if (c[static_cast<Eigen::Index>(idx)] == 0) continue;
      for_each_term(idx, [&](std::size_t a, std::size_t b, int sign) {
        m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) += sign * amp * c[static_cast<Eigen::Index>(idx)];
      });
    }
    return m;
  }

  // Orthogonal projection of a full vector (as matrix) onto the subspace.
  Eigen::VectorXd restrict(const Eigen::MatrixXd& m) const {
    Eigen::VectorXd c(static_cast<Eigen::Index>(dim_));
    const double amp = std::pow(std::sqrt(0.5), static_cast<double>(n_));
    for (std::size_t idx = 0; idx < dim_; ++idx) {
      double s = 0;
      for_each_term(idx, [&](std::size_t a, std::size_t b, int sign) {
        s += sign * m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      });
      c[static_cast<Eigen::Index>(idx)] = amp * s;
    }
    return c;
  }

 private:
  // Visit the 2^n computational-basis terms of basis vector idx.
  template <typename F>
  void for_each_term(std::size_t idx, F&& f) const {
    std::vector<std::pair<int, int>> sel(n_);
    for (unsigned c = n_; c-- > 0;) {
      sel[c] = pairs_[idx % pairs_.size()];
      idx /= pairs_.size();
    }
    for (unsigned mask = 0; mask < (1u << n_); ++mask) {
      std::size_t a = 0;
      std::size_t b = 0;
      int sign = 1;
      for (unsigned c = 0; c < n_; ++c) {
        auto [i, j] = sel[c];
        if (mask & (1u << c)) {
          std::swap(i, j);
          sign = -sign;
        }
        a = a * static_cast<std::size_t>(d_) + static_cast<std::size_t>(i);
        b = b * static_cast<std::size_t>(d_) + static_cast<std::size_t>(j);
      }
      f(a, b, sign);
    }
  }

  unsigned n_;
  int d_;
  std::vector<std::pair<int, int>> pairs_;
  std::size_t side_ = 1;
  std::size_t dim_ = 1;
};

inline double purity_of(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd rho = m * m.transpose();
  return (rho * rho).trace();
}

// Top eigenvector of c -> P_S (rho_A ⊗ 1) P_S c by power iteration from `start`.
inline Eigen::VectorXd top_eigenvector(const AntisymmetricPower& space, const Eigen::MatrixXd& rho_a,
                                       Eigen::VectorXd v, unsigned max_steps = 100000) {
  double lambda = 0;
  for (unsigned step = 0; step < max_steps; ++step) {
    Eigen::VectorXd w = space.restrict(rho_a * space.embed(v));
    const double next = v.dot(w);
    const double norm = w.norm();
    if (norm == 0) break;
    v = w / norm;
    if (std::abs(next - lambda) <= 1e-13 * std::abs(next)) break;
    lambda = next;
  }
  return v;
}

inline std::pair<double, std::vector<double>> seesaw_restart(const AntisymmetricPower& space, unsigned iterations,
                                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd psi(static_cast<Eigen::Index>(space.dim()));
  for (Eigen::Index i = 0; i < psi.size(); ++i) psi[i] = gauss(rng);
  psi.normalize();

  Eigen::MatrixXd m = space.embed(psi);
  double value = purity_of(m);
  std::vector<double> history{value};
  for (unsigned it = 0; it < iterations; ++it) {
    const Eigen::MatrixXd rho_a = m * m.transpose();
    Eigen::VectorXd phi = top_eigenvector(space, rho_a, psi);
    const Eigen::MatrixXd mphi = space.embed(phi);
    const double next = purity_of(mphi);
    if (next < value) break;  // rounding noise at the fixed point
    const double gain = next - value;
    psi = std::move(phi);
    m = mphi;
    value = next;
    history.push_back(value);
    if (gain < 1e-12) break;
  }
  return {value, std::move(history)};
}

}  // namespace detail

// Worker threads for see-saw restarts, from ANTISYM_THREADS (default 1).
inline unsigned seesaw_threads() {
  const char* env = std::getenv("ANTISYM_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) throw domain_error("ANTISYM_THREADS must be an integer >= 1");
  return static_cast<unsigned>(v);
}

inline PurityResult purity_seesaw(unsigned n, int d, unsigned restarts, unsigned iterations, std::uint64_t seed,
                                  unsigned threads = 0) {
  if (n == 0 || restarts == 0 || iterations == 0) throw domain_error("n, restarts and iterations must be positive");
  if (d < 2) throw domain_error("dimension must be at least 2");
  const double full_dim = std::pow(static_cast<double>(d), 2.0 * n);
  if (full_dim > 65536.0) throw resource_error("see-saw is limited to d^(2n) <= 2^16");
  if (threads == 0) threads = seesaw_threads();

  const detail::AntisymmetricPower space(n, d);
  PurityResult out;
  out.n = n;
  out.d = d;
  out.restarts = restarts;
  out.iterations = iterations;
  out.seed = seed;
  out.per_restart.resize(restarts);
  out.histories.resize(restarts);

  auto work = [&](unsigned first) {
    for (unsigned r = first; r < restarts; r += threads) {
      auto [value, history] = detail::seesaw_restart(space, iterations, seed + r);
      out.per_restart[r] = value;
      out.histories[r] = std::move(history);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min(threads, restarts); ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  out.value = *std::max_element(out.per_restart.begin(), out.per_restart.end());
  return out;
}

}  // namespace antisym
