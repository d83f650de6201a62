#include "leibcoh/subspace.hpp"

#include "detail/subspace_access.hpp"
#include "leibcoh/errors.hpp"

namespace leibcoh {

using detail::MatrixAccess;
using detail::SVec;

Subspace Subspace::zero(FieldSpec field, std::size_t ambient) {
  return Subspace(SparseMatrix(field, ambient, 0), {});
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(SparseMatrix::identity(field, ambient), std::move(pivots));
}

Subspace Subspace::span(const SparseMatrix& vectors) {
  return detail::dispatch(vectors.field(), [&](auto f) {
    detail::Echelon<decltype(f)> ech(f, vectors.rows());
    for (std::size_t j = 0; j < vectors.cols(); ++j) ech.insert(MatrixAccess::column(f, vectors, j));
    return detail::SubspaceAccess::from_echelon(f, ech);
  });
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_dim(); ++i) {
    if (k < pivots_.size() && pivots_[k] == i)
      ++k;
    else
      out.push_back(i);
  }
  return out;
}

SparseMatrix Subspace::quotient_projection() const {
  std::size_t n = ambient_dim();
  std::vector<long> pos(n, -1);
  std::vector<std::size_t> free = non_pivots();
  for (std::size_t t = 0; t < free.size(); ++t) pos[free[t]] = static_cast<long>(t);
  return detail::dispatch(field(), [&](auto f) {
    using E = typename decltype(f)::E;
    std::vector<SVec<E>> cols(n);
    for (std::size_t t = 0; t < free.size(); ++t) cols[free[t]].push_back({static_cast<std::uint32_t>(t), f.one()});
    for (std::size_t k = 0; k < pivots_.size(); ++k)
      for (std::size_t l = basis_.col_begin(k); l < basis_.col_end(k); ++l) {
        long t = pos[basis_.row_of(l)];
        if (t >= 0)
          cols[pivots_[k]].push_back({static_cast<std::uint32_t>(t), f.neg(MatrixAccess::raw(f, basis_, l))});
      }
    return MatrixAccess::from_columns(f, free.size(), cols);
  });
}

SparseMatrix Subspace::complement_inclusion() const {
  std::vector<std::size_t> free = non_pivots();
  return SparseMatrix::identity(field(), ambient_dim()).select_columns(free);
}

bool Subspace::contains(const SparseMatrix& vectors) const {
  if (vectors.rows() != ambient_dim() || vectors.field() != field())
    throw DimensionMismatch("contains: ambient dimension differs");
  return (quotient_projection() * vectors).is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() > dim()) return false;
  return contains(other.basis());
}

SparseMatrix Subspace::coordinates(const SparseMatrix& vectors) const {
  if (!contains(vectors)) throw ValidationError("vector outside subspace");
  return vectors.select_rows(pivots_);
}

}  // namespace leibcoh
