#pragma once

// Dense and sparse matrices of exact rationals with tensor-factor structure.
//
// Index convention for tensor products is Kronecker order: factor 0 is the
// most significant digit of a row/column index.

#include "antisym/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

namespace antisym {

using FactorDims = std::vector<std::size_t>;

namespace detail {

inline std::size_t product(const FactorDims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// Mixed-radix digit decomposition of a flat index.
class FactorIndexer {
 public:
  explicit FactorIndexer(FactorDims dims) : dims_(std::move(dims)) {}

  void split(std::size_t index, std::vector<std::size_t>& digits) const {
    digits.resize(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
      digits[k] = index % dims_[k];
      index /= dims_[k];
    }
  }

  std::size_t join(const std::vector<std::size_t>& digits) const {
    std::size_t index = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) index = index * dims_[k] + digits[k];
    return index;
  }

  // Join only the digits at the listed positions, in that order.
  std::size_t join_subset(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& positions) const {
    std::size_t index = 0;
    for (std::size_t k : positions) index = index * dims_[k] + digits[k];
    return index;
  }

  const FactorDims& dims() const { return dims_; }

 private:
  FactorDims dims_;
};

inline std::vector<std::size_t> checked_subset(const std::set<std::size_t>& subset, std::size_t factor_count) {
  for (std::size_t k : subset) {
    if (k >= factor_count) throw structural_error("factor index out of range");
  }
  return {subset.begin(), subset.end()};
}

}  // namespace detail

class RMatrix {
 public:
  RMatrix() = default;

  RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  RMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw structural_error("entry count does not match shape");
  }

  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw structural_error("ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RMatrix identity(std::size_t n) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RMatrix scalar(const Rational& c) { return RMatrix(1, 1, {c}); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const { return data_; }

  const FactorDims& factor_dims() const { return factor_dims_; }
  bool has_factors() const { return !factor_dims_.empty(); }

  RMatrix& set_factors(FactorDims dims) {
    if (!dims.empty() && (detail::product(dims) != rows_ || !is_square())) {
      throw structural_error("factor dimensions must multiply to the side of a square matrix");
    }
    factor_dims_ = std::move(dims);
    return *this;
  }

  RMatrix with_factors(FactorDims dims) const {
    RMatrix copy = *this;
    copy.set_factors(std::move(dims));
    return copy;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  // Entry equality; factor metadata is not compared.
  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
  FactorDims factor_dims_;
};

inline std::ostream& operator<<(std::ostream& os, const RMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]\n";
  }
  return os;
}

// Row-compressed sparse matrix. Rows are kept sorted by column with no
// explicit zeros once normalize() has run; all operations below return
// normalized matrices.
class SparseRMatrix {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
  };
  using Row = std::vector<Entry>;

  SparseRMatrix() = default;
  SparseRMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseRMatrix identity(std::size_t n) {
    SparseRMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, 1});
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }

  const Row& row(std::size_t i) const { return rows_[i]; }

  // Accumulating insert; call normalize() after a batch of inserts.
  void add(std::size_t i, std::size_t j, const Rational& v) { rows_[i].push_back({j, v}); }

  SparseRMatrix& normalize() {
    for (Row& r : rows_) {
      std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
      Row merged;
      merged.reserve(r.size());
      for (Entry& e : r) {
        if (!merged.empty() && merged.back().col == e.col) {
          merged.back().value += e.value;
        } else {
          merged.push_back(std::move(e));
        }
      }
      std::erase_if(merged, [](const Entry& e) { return sgn(e.value) == 0; });
      r = std::move(merged);
    }
    return *this;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const Row& r : rows_) n += r.size();
    return n;
  }

  Rational at(std::size_t i, std::size_t j) const {
    const Row& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
    return (it != r.end() && it->col == j) ? it->value : Rational(0);
  }

  const FactorDims& factor_dims() const { return factor_dims_; }
  bool has_factors() const { return !factor_dims_.empty(); }

  SparseRMatrix& set_factors(FactorDims dims) {
    if (!dims.empty() && (detail::product(dims) != rows() || !is_square())) {
      throw structural_error("factor dimensions must multiply to the side of a square matrix");
    }
    factor_dims_ = std::move(dims);
    return *this;
  }

  bool is_zero() const { return nonzeros() == 0; }

  friend bool operator==(const SparseRMatrix& a, const SparseRMatrix& b) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Row& ra = a.rows_[i];
      const Row& rb = b.rows_[i];
      if (ra.size() != rb.size()) return false;
      for (std::size_t k = 0; k < ra.size(); ++k) {
        if (ra[k].col != rb[k].col || ra[k].value != rb[k].value) return false;
      }
    }
    return true;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
  FactorDims factor_dims_;
};

// ---------------------------------------------------------------------------
// Conversion

inline SparseRMatrix to_sparse(const RMatrix& m) {
  SparseRMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) s.add(i, j, m(i, j));
    }
  }
  s.normalize();
  if (m.has_factors()) s.set_factors(m.factor_dims());
  return s;
}

inline RMatrix to_dense(const SparseRMatrix& s) {
  RMatrix m(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (const auto& e : s.row(i)) m(i, e.col) = e.value;
  }
  if (s.has_factors()) m.set_factors(s.factor_dims());
  return m;
}

// ---------------------------------------------------------------------------
// Dense operations

namespace detail {

inline void require_same_shape(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) {
  if (r1 != r2 || c1 != c2) throw structural_error("shape mismatch");
}

inline FactorDims tensor_factors(const FactorDims& a, std::size_t a_side, bool a_square, const FactorDims& b,
                                 std::size_t b_side, bool b_square) {
  if (!a_square || !b_square) return {};
  FactorDims dims = a.empty() ? FactorDims{a_side} : a;
  if (b.empty()) {
    dims.push_back(b_side);
  } else {
    dims.insert(dims.end(), b.begin(), b.end());
  }
  return dims;
}

template <class M>
const FactorDims& require_factors(const M& m) {
  if (!m.is_square()) throw structural_error("operation needs a square matrix");
  if (!m.has_factors()) throw structural_error("operation needs factor dimensions");
  return m.factor_dims();
}

}  // namespace detail

inline RMatrix add(const RMatrix& a, const RMatrix& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  RMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  if (a.has_factors()) c.set_factors(a.factor_dims());
  return c;
}

inline RMatrix subtract(const RMatrix& a, const RMatrix& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  RMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  if (a.has_factors()) c.set_factors(a.factor_dims());
  return c;
}

inline RMatrix scale(const RMatrix& a, const Rational& s) {
  RMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * s;
  if (a.has_factors()) c.set_factors(a.factor_dims());
  return c;
}

inline RMatrix multiply(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw structural_error("shape mismatch in multiply");
  RMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  if (a.has_factors() && c.is_square()) c.set_factors(a.factor_dims());
  return c;
}

inline RMatrix transpose(const RMatrix& a) {
  RMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  if (a.has_factors()) t.set_factors(a.factor_dims());
  return t;
}

inline Rational trace(const RMatrix& a) {
  if (!a.is_square()) throw structural_error("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

inline RMatrix tensor_product(const RMatrix& a, const RMatrix& b) {
  RMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (sgn(aij) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  }
  c.set_factors(detail::tensor_factors(a.factor_dims(), a.rows(), a.is_square(), b.factor_dims(), b.rows(),
                                       b.is_square()));
  return c;
}

inline RMatrix tensor_power(const RMatrix& a, unsigned n) {
  RMatrix r = RMatrix::scalar(1);
  for (unsigned k = 0; k < n; ++k) r = tensor_product(r, a);
  return r;
}

// Trace over every factor not in `keep`; the result carries the kept
// factor dimensions in their original order.
inline RMatrix partial_trace(const RMatrix& m, const std::set<std::size_t>& keep) {
  const FactorDims& dims = detail::require_factors(m);
  const auto kept = detail::checked_subset(keep, dims.size());
  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (!keep.count(k)) traced.push_back(k);

  FactorDims kept_dims;
  for (std::size_t k : kept) kept_dims.push_back(dims[k]);
  const std::size_t side = detail::product(kept_dims);
  RMatrix out(side, side);
  detail::FactorIndexer idx(dims);
  std::vector<std::size_t> rd, cd;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    idx.split(i, rd);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) == 0) continue;
      idx.split(j, cd);
      bool diagonal = true;
      for (std::size_t k : traced) diagonal = diagonal && rd[k] == cd[k];
      if (diagonal) out(idx.join_subset(rd, kept), idx.join_subset(cd, kept)) += m(i, j);
    }
  }
  if (!kept_dims.empty()) out.set_factors(kept_dims);
  return out;
}

// Transpose the indices of the listed factors. An involution.
inline RMatrix partial_transpose(const RMatrix& m, const std::set<std::size_t>& flip) {
  const FactorDims& dims = detail::require_factors(m);
  const auto flipped = detail::checked_subset(flip, dims.size());
  RMatrix out(m.rows(), m.cols());
  detail::FactorIndexer idx(dims);
  std::vector<std::size_t> rd, cd;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    idx.split(i, rd);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      idx.split(j, cd);
      auto r2 = rd;
      auto c2 = cd;
      for (std::size_t k : flipped) std::swap(r2[k], c2[k]);
      out(idx.join(r2), idx.join(c2)) = m(i, j);
    }
  }
  out.set_factors(dims);
  return out;
}

// ---------------------------------------------------------------------------
// Sparse operations

inline SparseRMatrix add(const SparseRMatrix& a, const SparseRMatrix& b) {
  detail::require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  SparseRMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& e : a.row(i)) c.add(i, e.col, e.value);
    for (const auto& e : b.row(i)) c.add(i, e.col, e.value);
  }
  c.normalize();
  if (a.has_factors()) c.set_factors(a.factor_dims());
  return c;
}

inline SparseRMatrix scale(const SparseRMatrix& a, const Rational& s) {
  SparseRMatrix c(a.rows(), a.cols());
  if (sgn(s) != 0) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const auto& e : a.row(i)) c.add(i, e.col, e.value * s);
  }
  c.normalize();
  if (a.has_factors()) c.set_factors(a.factor_dims());
  return c;
}

inline SparseRMatrix subtract(const SparseRMatrix& a, const SparseRMatrix& b) { return add(a, scale(b, -1)); }

inline SparseRMatrix multiply(const SparseRMatrix& a, const SparseRMatrix& b) {
  if (a.cols() != b.rows()) throw structural_error("shape mismatch in multiply");
  SparseRMatrix c(a.rows(), b.cols());
  // Dense accumulator reused across rows.
  std::vector<Rational> acc(b.cols());
  std::vector<char> used(b.cols(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    touched.clear();
    for (const auto& ea : a.row(i)) {
      for (const auto& eb : b.row(ea.col)) {
        if (!used[eb.col]) {
          used[eb.col] = 1;
          acc[eb.col] = 0;
          touched.push_back(eb.col);
        }
        acc[eb.col] += ea.value * eb.value;
      }
    }
    for (std::size_t j : touched) {
      c.add(i, j, acc[j]);
      used[j] = 0;
    }
  }
  c.normalize();
  if (a.has_factors() && c.is_square()) c.set_factors(a.factor_dims());
  return c;
}

inline SparseRMatrix transpose(const SparseRMatrix& a) {
  SparseRMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& e : a.row(i)) t.add(e.col, i, e.value);
  t.normalize();
  if (a.has_factors()) t.set_factors(a.factor_dims());
  return t;
}

inline Rational trace(const SparseRMatrix& a) {
  if (!a.is_square()) throw structural_error("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

// tr(a b) without forming the product.
inline Rational trace_of_product(const SparseRMatrix& a, const SparseRMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw structural_error("shape mismatch in trace_of_product");
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& e : a.row(i)) t += e.value * b.at(e.col, i);
  return t;
}

inline SparseRMatrix tensor_product(const SparseRMatrix& a, const SparseRMatrix& b) {
  SparseRMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& ea : a.row(i))
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (const auto& eb : b.row(k)) c.add(i * b.rows() + k, ea.col * b.cols() + eb.col, ea.value * eb.value);
  c.normalize();
  c.set_factors(detail::tensor_factors(a.factor_dims(), a.rows(), a.is_square(), b.factor_dims(), b.rows(),
                                       b.is_square()));
  return c;
}

inline SparseRMatrix partial_trace(const SparseRMatrix& m, const std::set<std::size_t>& keep) {
  const FactorDims& dims = detail::require_factors(m);
  const auto kept = detail::checked_subset(keep, dims.size());
  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (!keep.count(k)) traced.push_back(k);

  FactorDims kept_dims;
  for (std::size_t k : kept) kept_dims.push_back(dims[k]);
  const std::size_t side = detail::product(kept_dims);
  SparseRMatrix out(side, side);
  detail::FactorIndexer idx(dims);
  std::vector<std::size_t> rd, cd;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    idx.split(i, rd);
    for (const auto& e : m.row(i)) {
      idx.split(e.col, cd);
      bool diagonal = true;
      for (std::size_t k : traced) diagonal = diagonal && rd[k] == cd[k];
      if (diagonal) out.add(idx.join_subset(rd, kept), idx.join_subset(cd, kept), e.value);
    }
  }
  out.normalize();
  if (!kept_dims.empty()) out.set_factors(kept_dims);
  return out;
}

inline SparseRMatrix partial_transpose(const SparseRMatrix& m, const std::set<std::size_t>& flip) {
  const FactorDims& dims = detail::require_factors(m);
  const auto flipped = detail::checked_subset(flip, dims.size());
  SparseRMatrix out(m.rows(), m.cols());
  detail::FactorIndexer idx(dims);
  std::vector<std::size_t> rd, cd;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) {
      idx.split(i, rd);
      idx.split(e.col, cd);
      for (std::size_t k : flipped) std::swap(rd[k], cd[k]);
      out.add(idx.join(rd), idx.join(cd), e.value);
    }
  }
  out.normalize();
  out.set_factors(dims);
  return out;
}

// Place `op`, acting on the tensor factors `sites` (in that order), into a
// space of `factor_count` factors of dimension `d`; identity elsewhere.
inline SparseRMatrix embed_local(const RMatrix& op, const std::vector<std::size_t>& sites, std::size_t d,
                                 std::size_t factor_count) {
  std::size_t local_side = 1;
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (sites[k] >= factor_count) throw structural_error("site index out of range");
    local_side *= d;
  }
  if (op.rows() != local_side || op.cols() != local_side) throw structural_error("local operator has wrong size");

  const FactorDims dims(factor_count, d);
  const std::size_t side = detail::product(dims);
  detail::FactorIndexer idx(dims);
  detail::FactorIndexer local_idx(FactorDims(sites.size(), d));
  SparseRMatrix out(side, side);
  std::vector<std::size_t> rd, ld;
  for (std::size_t i = 0; i < side; ++i) {
    idx.split(i, rd);
    const std::size_t local_row = idx.join_subset(rd, sites);
    for (std::size_t lc = 0; lc < local_side; ++lc) {
      const Rational& v = op(local_row, lc);
      if (sgn(v) == 0) continue;
      local_idx.split(lc, ld);
      auto cd = rd;
      for (std::size_t k = 0; k < sites.size(); ++k) cd[sites[k]] = ld[k];
      out.add(i, idx.join(cd), v);
    }
  }
  out.normalize();
  out.set_factors(dims);
  return out;
}

}  // namespace antisym
