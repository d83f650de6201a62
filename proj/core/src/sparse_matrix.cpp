#include "leibcoh/sparse_matrix.hpp"

#include <limits>

#include "detail/field_ops.hpp"
#include "leibcoh/errors.hpp"

namespace leibcoh {

using detail::MatrixAccess;
using detail::SVec;

SparseMatrix::SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), colptr_(cols + 1, 0) {
  if (rows > std::numeric_limits<std::uint32_t>::max())
    throw ResourceLimitExceeded("row count exceeds 32-bit index range");
}

SparseMatrix SparseMatrix::from_triplets(FieldSpec field, std::size_t rows, std::size_t cols,
                                         const std::vector<Triplet>& triplets) {
  return detail::dispatch(field, [&](auto f) {
    detail::TripletBuilder<decltype(f)> b(f, rows, cols);
    for (const auto& t : triplets) {
      if (t.value.field() != field) throw DimensionMismatch("triplet field differs from matrix field");
      b.add(t.row, t.col, f.from_scalar(t.value));
    }
    return b.build();
  });
}

SparseMatrix SparseMatrix::from_dense(FieldSpec field, const std::vector<std::vector<Scalar>>& row_major,
                                      std::size_t cols) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < row_major.size(); ++i) {
    if (row_major[i].size() != cols) throw DimensionMismatch("ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j)
      if (!row_major[i][j].is_zero()) t.push_back({i, j, row_major[i][j]});
  }
  return from_triplets(field, row_major.size(), cols, t);
}

SparseMatrix SparseMatrix::from_dense(FieldSpec field, const std::vector<std::vector<long>>& row_major,
                                      std::size_t cols) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < row_major.size(); ++i) {
    if (row_major[i].size() != cols) throw DimensionMismatch("ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j)
      if (row_major[i][j] != 0) t.push_back({i, j, Scalar(field, row_major[i][j])});
  }
  return from_triplets(field, row_major.size(), cols, t);
}

SparseMatrix SparseMatrix::identity(FieldSpec field, std::size_t n) {
  return detail::dispatch(field, [&](auto f) {
    using E = typename decltype(f)::E;
    std::vector<SVec<E>> cols(n);
    if (!decltype(f)::is_zero(f.one()))
      for (std::size_t j = 0; j < n; ++j) cols[j].push_back({static_cast<std::uint32_t>(j), f.one()});
    return MatrixAccess::from_columns(f, n, cols);
  });
}

SparseMatrix SparseMatrix::hstack(const std::vector<SparseMatrix>& blocks) {
  if (blocks.empty()) return SparseMatrix();
  FieldSpec field = blocks[0].field();
  std::size_t rows = blocks[0].rows();
  for (const auto& b : blocks)
    if (b.rows() != rows || b.field() != field) throw DimensionMismatch("hstack: incompatible blocks");
  return detail::dispatch(field, [&](auto f) {
    using E = typename decltype(f)::E;
    std::vector<SVec<E>> cols;
    for (const auto& b : blocks)
      for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(MatrixAccess::column(f, b, j));
    return MatrixAccess::from_columns(f, rows, cols);
  });
}

SparseMatrix SparseMatrix::vstack(const std::vector<SparseMatrix>& blocks) {
  if (blocks.empty()) return SparseMatrix();
  FieldSpec field = blocks[0].field();
  std::size_t cols = blocks[0].cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols || b.field() != field) throw DimensionMismatch("vstack: incompatible blocks");
    rows += b.rows();
  }
  return detail::dispatch(field, [&](auto f) {
    using E = typename decltype(f)::E;
    std::vector<SVec<E>> out(cols);
    std::uint32_t offset = 0;
    for (const auto& b : blocks) {
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = b.col_begin(j); k < b.col_end(j); ++k)
          out[j].push_back({static_cast<std::uint32_t>(b.row_of(k) + offset), MatrixAccess::raw(f, b, k)});
      offset += static_cast<std::uint32_t>(b.rows());
    }
    return MatrixAccess::from_columns(f, rows, out);
  });
}

Scalar SparseMatrix::value(std::size_t k) const {
  return field_.is_rationals() ? Scalar(field_, rationals_[k]) : Scalar(field_, static_cast<long>(residues_[k]));
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("index out of range");
  auto first = rowidx_.begin() + static_cast<std::ptrdiff_t>(colptr_[j]);
  auto last = rowidx_.begin() + static_cast<std::ptrdiff_t>(colptr_[j + 1]);
  auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(i));
  if (it == last || *it != i) return Scalar::zero(field_);
  return value(static_cast<std::size_t>(it - rowidx_.begin()));
}

SparseMatrix SparseMatrix::transpose() const {
  return detail::dispatch(field_, [&](auto f) {
    using E = typename decltype(f)::E;
    std::vector<SVec<E>> out(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t k = colptr_[j]; k < colptr_[j + 1]; ++k)
        out[rowidx_[k]].push_back({static_cast<std::uint32_t>(j), MatrixAccess::raw(f, *this, k)});
    return MatrixAccess::from_columns(f, cols_, out);
  });
}

SparseMatrix SparseMatrix::negated() const { return scaled(-Scalar::one(field_)); }

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
  if (s.field() != field_) throw DimensionMismatch("scalar field differs from matrix field");
  return detail::dispatch(field_, [&](auto f) {
    using F = decltype(f);
    using E = typename F::E;
    E a = f.from_scalar(s);
    std::vector<SVec<E>> out(cols_);
    if (!F::is_zero(a))
      for (std::size_t j = 0; j < cols_; ++j) {
        out[j] = MatrixAccess::column(f, *this, j);
        detail::scale_in_place(f, out[j], a);
      }
    return MatrixAccess::from_columns(f, rows_, out);
  });
}

SparseMatrix SparseMatrix::select_columns(std::span<const std::size_t> cols) const {
  return detail::dispatch(field_, [&](auto f) {
    using E = typename decltype(f)::E;
    std::vector<SVec<E>> out;
    out.reserve(cols.size());
    for (std::size_t j : cols) {
      if (j >= cols_) throw DimensionMismatch("column index out of range");
      out.push_back(MatrixAccess::column(f, *this, j));
    }
    return MatrixAccess::from_columns(f, rows_, out);
  });
}

SparseMatrix SparseMatrix::select_rows(std::span<const std::size_t> rows) const {
  std::vector<long> where(rows_, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw DimensionMismatch("row index out of range");
    where[rows[i]] = static_cast<long>(i);
  }
  return detail::dispatch(field_, [&](auto f) {
    detail::TripletBuilder<decltype(f)> b(f, rows.size(), cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t k = colptr_[j]; k < colptr_[j + 1]; ++k)
        if (where[rowidx_[k]] >= 0) b.add(static_cast<std::size_t>(where[rowidx_[k]]), j, MatrixAccess::raw(f, *this, k));
    return b.build();
  });
}

std::vector<Scalar> SparseMatrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw DimensionMismatch("apply: vector length");
  std::vector<Scalar> y(rows_, Scalar::zero(field_));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t k = colptr_[j]; k < colptr_[j + 1]; ++k) y[rowidx_[k]] += value(k) * x[j];
  }
  return y;
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_, Scalar::zero(field_)));
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t k = colptr_[j]; k < colptr_[j + 1]; ++k) d[rowidx_[k]][j] = value(k);
  return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows() || a.field() != b.field()) throw DimensionMismatch("product: incompatible shapes");
  return detail::dispatch(a.field(), [&](auto f) {
    using E = typename decltype(f)::E;
    detail::Accumulator<decltype(f)> acc(f, a.rows());
    std::vector<SVec<E>> out(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t k = b.col_begin(j); k < b.col_end(j); ++k) {
        const E& s = MatrixAccess::raw(f, b, k);
        std::size_t c = b.row_of(k);
        for (std::size_t l = a.col_begin(c); l < a.col_end(c); ++l)
          acc.addmul(static_cast<std::uint32_t>(a.row_of(l)), s, MatrixAccess::raw(f, a, l));
      }
      out[j] = acc.take();
    }
    return MatrixAccess::from_columns(f, a.rows(), out);
  });
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field())
    throw DimensionMismatch("sum: incompatible shapes");
  return detail::dispatch(a.field(), [&](auto f) {
    using E = typename decltype(f)::E;
    std::vector<SVec<E>> out(a.cols());
    E minus_one = f.neg(f.one());
    for (std::size_t j = 0; j < a.cols(); ++j)
      detail::sub_scaled(f, MatrixAccess::column(f, a, j), minus_one, MatrixAccess::column(f, b, j), out[j]);
    return MatrixAccess::from_columns(f, a.rows(), out);
  });
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + b.negated(); }

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && colptr_ == o.colptr_ &&
         rowidx_ == o.rowidx_ && residues_ == o.residues_ && rationals_ == o.rationals_;
}

}  // namespace leibcoh
