#pragma once

// Partitions, Weyl dimensions, semistandard tableaux and Schur polynomials,
// plus the two plethysm decompositions Sym^2(Alt^2) and Alt^2(Alt^2) of U(d).
//
// Tableaux use the usual convention: entries weakly increase along rows and
// strictly increase down columns.

#include "antisym/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace antisym {

class Partition {
 public:
  Partition() = default;

  // Trailing zeros are dropped; parts must be weakly decreasing and >= 0.
  Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw domain_error("partition with a negative part");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) throw domain_error("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
  }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  // Parts padded with zeros to `length`.
  std::vector<int> padded(std::size_t length) const {
    std::vector<int> p(parts_);
    p.resize(std::max(length, p.size()), 0);
    return p;
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n (in reverse lexicographic order).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Weyl dimension formula for the U(d) irrep with highest weight lambda.
inline Integer weyl_dimension(const Partition& lambda, int d) {
  if (d < 1) throw domain_error("dimension must be positive");
  if (static_cast<int>(lambda.length()) > d) return 0;
  const auto l = lambda.padded(static_cast<std::size_t>(d));
  Integer num = 1;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) num *= l[i] - l[j] - i + j;
  Integer den = 1;
  for (int k = 1; k < d; ++k) den *= factorial(k);
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// A filled Young diagram; rows[i][j] is the entry in row i, column j.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  bool is_semistandard() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != shape[i]) return false;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (rows[i][j] < 1) return false;
        if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
        if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
      }
    }
    return rows.size() == shape.length();
  }
};

// Visit every semistandard tableau of shape lambda with entries in 1..d,
// filling boxes in row-major order. Intended for small shapes.
inline void for_each_ssyt(const Partition& lambda, int d, const std::function<void(const Tableau&)>& visit) {
  if (lambda.size() > 8) throw resource_error("tableau enumeration is capped at 8 boxes");
  Tableau t{lambda, {}};
  for (std::size_t i = 0; i < lambda.length(); ++i) t.rows.emplace_back(static_cast<std::size_t>(lambda[i]), 0);
  std::vector<std::pair<std::size_t, std::size_t>> boxes;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(lambda[i]); ++j) boxes.emplace_back(i, j);

  std::function<void(std::size_t)> fill = [&](std::size_t b) {
    if (b == boxes.size()) {
      visit(t);
      return;
    }
    const auto [i, j] = boxes[b];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t.rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, t.rows[i - 1][j] + 1);
    for (int v = lo; v <= d; ++v) {
      t.rows[i][j] = v;
      fill(b + 1);
    }
  };
  fill(0);
}

namespace detail {

// Sub-partitions mu of lambda such that lambda/mu is a horizontal strip,
// i.e. lambda[i+1] <= mu[i] <= lambda[i].
inline void for_each_horizontal_strip(const Partition& lambda, const std::function<void(const Partition&)>& visit) {
  const std::size_t len = lambda.length();
  std::vector<int> mu(len, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == len) {
      visit(Partition(mu));
      return;
    }
    for (int m = lambda[i + 1]; m <= lambda[i]; ++m) {
      mu[i] = m;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace detail

// Number of SSYT of shape lambda with entries in 1..d. The boxes holding the
// largest entry form a horizontal strip, giving a recursion memoized on
// (shape, largest entry).
inline Integer ssyt_count(const Partition& lambda, int d) {
  std::map<std::pair<Partition, int>, Integer> memo;
  std::function<Integer(const Partition&, int)> count = [&](const Partition& shape, int max_entry) -> Integer {
    if (shape.size() == 0) return 1;
    if (max_entry <= 0 || static_cast<int>(shape.length()) > max_entry) return 0;
    const auto key = std::make_pair(shape, max_entry);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    detail::for_each_horizontal_strip(shape, [&](const Partition& mu) { total += count(mu, max_entry - 1); });
    memo.emplace(key, total);
    return total;
  };
  return count(lambda, d);
}

// Schur polynomial s_lambda(x_1, ..., x_d): sum over SSYT of the product of
// x_{entry}. Evaluated through the same horizontal-strip recursion, which
// groups tableaux by the boxes carrying the largest entry.
inline Rational schur_eval(const Partition& lambda, std::span<const Rational> values) {
  const int d = static_cast<int>(values.size());
  std::map<std::pair<Partition, int>, Rational> memo;
  std::function<Rational(const Partition&, int)> eval = [&](const Partition& shape, int max_entry) -> Rational {
    if (shape.size() == 0) return 1;
    if (max_entry <= 0 || static_cast<int>(shape.length()) > max_entry) return 0;
    const auto key = std::make_pair(shape, max_entry);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational total = 0;
    const Rational& x = values[static_cast<std::size_t>(max_entry - 1)];
    detail::for_each_horizontal_strip(shape, [&](const Partition& mu) {
      total += eval(mu, max_entry - 1) * pow(x, static_cast<unsigned>(shape.size() - mu.size()));
    });
    memo.emplace(key, total);
    return total;
  };
  return eval(lambda, d);
}

inline Rational schur_eval(const Partition& lambda, const std::vector<Rational>& values) {
  return schur_eval(lambda, std::span<const Rational>(values));
}

enum class PlethysmKind { sym2, alt2 };

struct PlethysmCheck {
  Rational lhs;
  Rational rhs;
  bool equal;
};

// Products x_k x_l for k < l, in lexicographic order of (k, l).
inline std::vector<Rational> pair_products(std::span<const Rational> x) {
  std::vector<Rational> z;
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t l = k + 1; l < x.size(); ++l) z.push_back(x[k] * x[l]);
  return z;
}

// Character of Sym^2(Alt^2) or Alt^2(Alt^2) evaluated at x (left side, from
// the defining sums over pairs of pairs) against the Schur-function side.
inline PlethysmCheck plethysm_check(PlethysmKind kind, std::span<const Rational> x) {
  if (x.size() < 3) throw domain_error("plethysm check needs d >= 3");
  const auto z = pair_products(x);
  Rational lhs = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i; j < z.size(); ++j) {
      if (kind == PlethysmKind::alt2 && i == j) continue;
      lhs += z[i] * z[j];
    }
  }
  Rational rhs = kind == PlethysmKind::sym2 ? schur_eval({2, 2}, x) + schur_eval({1, 1, 1, 1}, x)
                                            : schur_eval({2, 1, 1}, x);
  const bool equal = lhs == rhs;
  return {std::move(lhs), std::move(rhs), equal};
}

inline PlethysmCheck plethysm_check(PlethysmKind kind, const std::vector<Rational>& x) {
  return plethysm_check(kind, std::span<const Rational>(x));
}

// Dimensions of the plethysm pieces as closed polynomials in d.
struct RepDims {
  Integer sym2_alt2;       // dim Sym^2(Alt^2)
  Integer alt4;            // dim (1,1,1,1)
  Integer two_two;         // dim (2,2)
  Integer two_one_one;     // dim (2,1,1) = dim Alt^2(Alt^2)
  bool verified = false;   // every cross-check below held
};

inline RepDims lemma_rep_dims(int d) {
  if (d < 3) throw domain_error("representation dimensions need d >= 3");
  const Integer D = d;
  RepDims r;
  r.sym2_alt2 = D * (D - 1) * (D * D - D + 2) / 8;
  r.alt4 = D * (D - 1) * (D - 2) * (D - 3) / 24;
  r.two_two = (D + 1) * D * D * (D - 1) / 12;
  r.two_one_one = (D + 1) * D * (D - 1) * (D - 2) / 8;

  const Integer m = D * (D - 1) / 2;  // dim Alt^2
  r.verified = r.alt4 == weyl_dimension({1, 1, 1, 1}, d) && r.two_two == weyl_dimension({2, 2}, d) &&
               r.two_one_one == weyl_dimension({2, 1, 1}, d) && r.sym2_alt2 == r.alt4 + r.two_two &&
               r.sym2_alt2 == binomial(m.get_si() + 1, 2) && r.two_one_one == binomial(m.get_si(), 2) &&
               r.sym2_alt2 + r.two_one_one == m * m;
  return r;
}

}  // namespace antisym
