#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "leibcoh/field.hpp"

namespace leibcoh {

namespace detail {
struct MatrixAccess;
}

// Immutable compressed-column matrix over a FieldSpec.  Row indices are
// strictly increasing within each column and no zero value is stored.
class SparseMatrix {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };

  SparseMatrix() : colptr_(1, 0) {}
  SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  // Duplicate positions are summed; zero sums are dropped.
  static SparseMatrix from_triplets(FieldSpec field, std::size_t rows, std::size_t cols,
                                    const std::vector<Triplet>& triplets);
  static SparseMatrix from_dense(FieldSpec field, const std::vector<std::vector<Scalar>>& row_major,
                                 std::size_t cols);
  static SparseMatrix from_dense(FieldSpec field, const std::vector<std::vector<long>>& row_major,
                                 std::size_t cols);
  static SparseMatrix identity(FieldSpec field, std::size_t n);
  static SparseMatrix hstack(const std::vector<SparseMatrix>& blocks);
  static SparseMatrix vstack(const std::vector<SparseMatrix>& blocks);

  FieldSpec field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return rowidx_.size(); }

  // Entries of column j occupy positions [col_begin(j), col_end(j)).
  std::size_t col_begin(std::size_t j) const { return colptr_[j]; }
  std::size_t col_end(std::size_t j) const { return colptr_[j + 1]; }
  std::size_t row_of(std::size_t k) const { return rowidx_[k]; }
  Scalar value(std::size_t k) const;
  Scalar at(std::size_t i, std::size_t j) const;

  SparseMatrix transpose() const;
  SparseMatrix negated() const;
  SparseMatrix scaled(const Scalar& s) const;
  SparseMatrix select_columns(std::span<const std::size_t> cols) const;
  SparseMatrix select_rows(std::span<const std::size_t> rows) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  std::vector<std::vector<Scalar>> to_dense() const;
  bool is_zero() const noexcept { return rowidx_.empty(); }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  bool operator==(const SparseMatrix& o) const;

 private:
  friend struct detail::MatrixAccess;

  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> colptr_;
  std::vector<std::uint32_t> rowidx_;
  std::vector<std::uint32_t> residues_;
  std::vector<mpq_class> rationals_;
};

}  // namespace leibcoh
