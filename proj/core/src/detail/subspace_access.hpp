#pragma once

#include <vector>

#include "detail/echelon.hpp"
#include "leibcoh/subspace.hpp"

namespace leibcoh::detail {

struct SubspaceAccess {
  // Canonical subspace from an echelon basis; reduces the basis in place.
  template <class F>
  static Subspace from_echelon(const F& f, Echelon<F>& ech) {
    ech.make_reduced();
    std::vector<SVec<typename F::E>> cols;
    std::vector<std::size_t> pivots;
    for (std::size_t k : ech.by_pivot()) {
      cols.push_back(ech.vector(k));
      pivots.push_back(ech.pivot(k));
    }
    return Subspace(MatrixAccess::from_columns(f, ech.ambient(), cols), std::move(pivots));
  }

  // Echelon preloaded with the (already canonical) basis of s.
  template <class F>
  static Echelon<F> load(const F& f, const Subspace& s, std::size_t tag_dim = 0) {
    Echelon<F> ech(f, s.ambient_dim(), tag_dim);
    for (std::size_t j = 0; j < s.dim(); ++j) {
      SVec<typename F::E> tag;
      if (tag_dim) tag.push_back({static_cast<std::uint32_t>(j), f.one()});
      ech.insert(MatrixAccess::column(f, s.basis(), j), std::move(tag));
    }
    return ech;
  }
};

}  // namespace leibcoh::detail
