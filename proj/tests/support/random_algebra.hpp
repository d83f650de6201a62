#pragma once

// Random valid left Leibniz algebras: a hemi-semidirect product of an abelian
// algebra with a module of commuting matrices, seen through a random basis.

#include <random>
#include <string>
#include <vector>

#include "leibcoh/catalog.hpp"
#include "leibcoh/linalg.hpp"
#include "random_matrix.hpp"

namespace testutil {

// Same algebra in the basis given by the columns of the invertible matrix t.
inline leibcoh::LeibnizAlgebra change_basis(const leibcoh::LeibnizAlgebra& l, const leibcoh::SparseMatrix& t) {
  using namespace leibcoh;
  FieldSpec f = l.field();
  std::size_t n = l.dim();
  SparseMatrix t_inv = solve(t, SparseMatrix::identity(f, n));
  auto column = [&](const SparseMatrix& m, std::size_t j) {
    std::vector<Scalar> v(n, Scalar::zero(f));
    for (std::size_t k = m.col_begin(j); k < m.col_end(j); ++k) v[m.row_of(k)] = m.value(k);
    return v;
  };
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i));
  StructureConstants c(f, names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> prod = t_inv.apply(l.multiply(column(t, i), column(t, j)));
      std::vector<Term> terms;
      for (std::size_t k = 0; k < n; ++k)
        if (!prod[k].is_zero()) terms.push_back({k, prod[k]});
      c.set_product(i, j, terms);
    }
  return LeibnizAlgebra(std::move(c));
}

inline leibcoh::LeibnizAlgebra random_leibniz(std::mt19937_64& rng, leibcoh::FieldSpec f) {
  using namespace leibcoh;
  std::uniform_int_distribution<std::size_t> pick_k(1, 2), pick_m(1, 3);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::size_t k = pick_k(rng), m = pick_m(rng);
  LeibnizAlgebra g = catalog("abelian(" + std::to_string(k) + ")", f);
  SparseMatrix x = random_matrix(rng, f, m, m, 0.6);
  SparseMatrix id = SparseMatrix::identity(f, m);
  std::vector<SparseMatrix> acts{x};
  if (k == 2) acts.push_back(id.scaled(Scalar(f, coeff(rng))) + x.scaled(Scalar(f, coeff(rng))) + (x * x).scaled(Scalar(f, coeff(rng))));
  LeibnizAlgebra h = hemi_semidirect(LeftModule(g, m, acts));
  std::size_t n = h.dim();
  SparseMatrix t;
  do t = random_matrix(rng, f, n, n, 0.7);
  while (rank(t) != n);
  return change_basis(h, t);
}

}  // namespace testutil
