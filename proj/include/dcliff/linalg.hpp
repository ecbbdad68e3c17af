#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "dcliff/scalar_field.hpp"

namespace Eigen {

// Exact scalars: Eigen is used purely as a dense container here, so the
// precision hooks are never consulted.
template <>
struct NumTraits<dcliff::Rational> : GenericNumTraits<dcliff::Rational> {
  using Real = dcliff::Rational;
  using NonInteger = dcliff::Rational;
  using Literal = dcliff::Rational;
  using Nested = dcliff::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<dcliff::Coefficient> : GenericNumTraits<dcliff::Coefficient> {
  using Real = dcliff::Coefficient;
  using NonInteger = dcliff::Coefficient;
  using Literal = dcliff::Coefficient;
  using Nested = dcliff::Coefficient;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace dcliff {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixExact = MatrixX<Coefficient>;
using VectorExact = VectorX<Coefficient>;

template <class Scalar>
inline bool is_zero_scalar(const Scalar& x) {
  return x.is_zero();
}

template <class Scalar>
struct RrefResult {
  MatrixX<Scalar> matrix;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_cols;
};

// Reduced row echelon form. The pivot in each column is the first row (from
// the current position down) holding a nonzero entry.
template <class Scalar>
RrefResult<Scalar> rref(MatrixX<Scalar> a) {
  RrefResult<Scalar> out;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero_scalar(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index k = c; k < cols; ++k)
      if (!is_zero_scalar(a(r, k))) a(r, k) = a(r, k) * inv;
    for (Eigen::Index q = 0; q < rows; ++q) {
      if (q == r || is_zero_scalar(a(q, c))) continue;
      const Scalar f = a(q, c);
      for (Eigen::Index k = c; k < cols; ++k)
        if (!is_zero_scalar(a(r, k))) a(q, k) = a(q, k) - f * a(r, k);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(a);
  return out;
}

template <class Scalar>
Eigen::Index rank(const MatrixX<Scalar>& a) {
  return rref(a).rank;
}

// Basis of the right null space, one vector per free column.
template <class Scalar>
std::vector<VectorX<Scalar>> kernel_basis(const MatrixX<Scalar>& a) {
  const auto red = rref(a);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : red.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<VectorX<Scalar>> out;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Constant(cols, Scalar(0));
    v(free) = Scalar(1);
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
      v(red.pivot_cols[i]) = -red.matrix(static_cast<Eigen::Index>(i), free);
    out.push_back(std::move(v));
  }
  return out;
}

template <class Scalar>
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

// Incrementally maintained span of sparse vectors, kept in echelon form: every
// stored vector has a distinct leading index with coefficient 1, and no other
// stored vector has a nonzero entry there.
template <class Scalar>
class EchelonBasis {
 public:
  // Residue of v after elimination against the stored vectors.
  SparseVector<Scalar> reduce(SparseVector<Scalar> v) const {
    normalize(v);
    for (const auto& b : rows_) {
      const Scalar f = entry(v, b.front().first);
      if (is_zero_scalar(f)) continue;
      v = axpy(v, -f, b);
    }
    return v;
  }

  bool contains(const SparseVector<Scalar>& v) const { return reduce(v).empty(); }

  // Appends the residue of v if nonzero; returns whether the span grew.
  bool insert(const SparseVector<Scalar>& v) {
    auto r = reduce(v);
    if (r.empty()) return false;
    const Scalar inv = Scalar(1) / r.front().second;
    for (auto& e : r) e.second = e.second * inv;
    const std::size_t lead = r.front().first;
    for (auto& b : rows_) {
      const Scalar f = entry(b, lead);
      if (!is_zero_scalar(f)) b = axpy(b, -f, r);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), lead,
                                [](const SparseVector<Scalar>& row, std::size_t key) { return row.front().first < key; });
    rows_.insert(pos, std::move(r));
    return true;
  }

  std::size_t size() const { return rows_.size(); }
  const std::vector<SparseVector<Scalar>>& rows() const { return rows_; }

  static void normalize(SparseVector<Scalar>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < v.size();) {
      Scalar s = v[r].second;
      std::size_t q = r + 1;
      for (; q < v.size() && v[q].first == v[r].first; ++q) s = s + v[q].second;
      if (!is_zero_scalar(s)) v[w++] = {v[r].first, s};
      r = q;
    }
    v.resize(w);
  }

 private:
  static Scalar entry(const SparseVector<Scalar>& v, std::size_t idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, std::size_t key) { return e.first < key; });
    if (it != v.end() && it->first == idx) return it->second;
    return Scalar(0);
  }

  // x + f * y for sorted sparse vectors.
  static SparseVector<Scalar> axpy(const SparseVector<Scalar>& x, const Scalar& f, const SparseVector<Scalar>& y) {
    SparseVector<Scalar> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, f * y[j].second);
        ++j;
      } else {
        Scalar s = x[i].second + f * y[j].second;
        if (!is_zero_scalar(s)) out.emplace_back(x[i].first, s);
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<SparseVector<Scalar>> rows_;
};

template <class Scalar>
bool span_insert(EchelonBasis<Scalar>& basis, const SparseVector<Scalar>& v) {
  return basis.insert(v);
}

template <class Scalar>
struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

// Rank of a sparse matrix: rows and columns are split into the connected
// components of their incidence graph and each block is reduced densely.
template <class Scalar>
std::size_t sparse_rank(std::size_t rows, std::size_t cols, const std::vector<Triplet<Scalar>>& entries) {
  // Union-find over rows [0, rows) and columns [rows, rows + cols).
  std::vector<std::size_t> parent(rows + cols);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& t : entries) {
    if (is_zero_scalar(t.value)) continue;
    parent[find(t.row)] = find(rows + t.col);
  }
  std::vector<std::size_t> block_of(rows + cols);
  std::vector<std::size_t> local(rows + cols);
  std::vector<std::pair<std::size_t, std::size_t>> dims;  // (rows, cols) per block
  std::vector<std::size_t> root_block(rows + cols, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < rows + cols; ++x) {
    const std::size_t r = find(x);
    if (root_block[r] == static_cast<std::size_t>(-1)) {
      root_block[r] = dims.size();
      dims.emplace_back(0, 0);
    }
    const std::size_t b = root_block[r];
    block_of[x] = b;
    local[x] = x < rows ? dims[b].first++ : dims[b].second++;
  }
  std::vector<MatrixX<Scalar>> blocks;
  blocks.reserve(dims.size());
  for (const auto& [r, c] : dims)
    blocks.push_back(MatrixX<Scalar>::Constant(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c), Scalar(0)));
  for (const auto& t : entries) {
    if (is_zero_scalar(t.value)) continue;
    auto& blk = blocks[block_of[t.row]];
    auto& v = blk(static_cast<Eigen::Index>(local[t.row]), static_cast<Eigen::Index>(local[rows + t.col]));
    v = v + t.value;
  }
  std::size_t total = 0;
  for (const auto& blk : blocks)
    if (blk.rows() > 0 && blk.cols() > 0) total += static_cast<std::size_t>(rank(blk));
  return total;
}

}  // namespace dcliff
