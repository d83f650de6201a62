#pragma once

#include <cstddef>
#include <vector>

#include "leibcoh/sparse_matrix.hpp"

namespace leibcoh {

namespace detail {
struct SubspaceAccess;
}

// Linear subspace of F^n held in canonical form: the basis columns are in
// reduced column echelon form (pivot = first nonzero row, pivot entry 1, zero
// in every other pivot row) sorted by pivot.  Equal subspaces therefore have
// identical bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(FieldSpec field, std::size_t ambient);
  static Subspace full(FieldSpec field, std::size_t ambient);
  // Column span of `vectors`.
  static Subspace span(const SparseMatrix& vectors);

  FieldSpec field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const SparseMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<std::size_t> non_pivots() const;

  bool contains(const SparseMatrix& vectors) const;
  bool contains(const Subspace& other) const;
  // Coordinates of each column of `vectors` in basis(); throws
  // ValidationError if some column is not in the subspace.
  SparseMatrix coordinates(const SparseMatrix& vectors) const;
  // (ambient - dim) x ambient matrix with kernel exactly this subspace; it
  // reads off the non-pivot coordinates after reduction.
  SparseMatrix quotient_projection() const;
  // ambient x (ambient - dim) inclusion of the standard vectors at the
  // non-pivot rows, a complement of this subspace.
  SparseMatrix complement_inclusion() const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  friend struct detail::SubspaceAccess;
  Subspace(SparseMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  SparseMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace leibcoh
