#pragma once

#include <cstddef>

#include "leibcoh/sparse_matrix.hpp"
#include "leibcoh/subspace.hpp"

namespace leibcoh {

// Sparse elimination with Markowitz-style pivoting; fraction-free over Q.
std::size_t rank(const SparseMatrix& m);

Subspace kernel_basis(const SparseMatrix& m);
Subspace image_basis(const SparseMatrix& m);

Subspace intersection(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
// dim a - dim b; throws ValidationError unless b is contained in a.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

struct SubspaceRelation {
  Subspace intersection;
  Subspace sum;
  bool a_contains_b;
  bool b_contains_a;
};
SubspaceRelation subspace_ops(const Subspace& a, const Subspace& b);

// {v : m v in w}.
Subspace preimage(const SparseMatrix& m, const Subspace& w);
// m(v).
Subspace image_of(const SparseMatrix& m, const Subspace& v);

// Some X with a X = b; throws ValidationError when b is not in the column
// space of a.
SparseMatrix solve(const SparseMatrix& a, const SparseMatrix& b);

enum class ComplementOrder { forward, reverse };

// Representatives in `sub` of a basis of sub/quot: the basis vectors of `sub`
// that are independent modulo `quot`, scanned in the given order.
SparseMatrix quotient_basis(const Subspace& sub, const Subspace& quot,
                            ComplementOrder order = ComplementOrder::forward);

// Matrix of the map sub_src/quot_src -> sub_dst/quot_dst induced by f, in the
// quotient bases chosen by quotient_basis.  Throws ValidationError when f does
// not carry sub_src into sub_dst and quot_src into quot_dst.
SparseMatrix induced_map(const SparseMatrix& f, const Subspace& src_sub, const Subspace& src_quot,
                         const Subspace& dst_sub, const Subspace& dst_quot,
                         ComplementOrder order = ComplementOrder::forward);

}  // namespace leibcoh
