#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/bimodule.hpp"
#include "leibcoh/sparse_matrix.hpp"
#include "leibcoh/subspace.hpp"

namespace leibcoh {

// Cap on the structural nonzeros of a single differential.  The default is
// 10^7, overridden by the environment variable LEIBCOH_MAX_NNZ.
std::size_t default_max_nnz();

struct Budget {
  std::size_t max_nnz = default_max_nnz();
};

// dims[n] = dim C^n for n = 0..top; d[n]: C^n -> C^{n+1} for n < top.
class CochainComplex {
 public:
  CochainComplex() = default;
  // Throws DimensionMismatch on inconsistent shapes and ValidationError when
  // some D_{n+1} D_n is nonzero.
  CochainComplex(FieldSpec field, std::vector<std::size_t> dims, std::vector<SparseMatrix> d);

  FieldSpec field() const noexcept { return field_; }
  std::size_t top() const noexcept { return dims_.empty() ? 0 : dims_.size() - 1; }
  std::size_t dim(std::size_t n) const { return n < dims_.size() ? dims_[n] : 0; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const SparseMatrix& d(std::size_t n) const { return d_.at(n); }
  const std::vector<SparseMatrix>& differentials() const noexcept { return d_; }

  // Ker D_n, for n < top.
  Subspace cycles(std::size_t n) const;
  // Im D_{n-1}; zero in degree 0.
  Subspace boundaries(std::size_t n) const;

 private:
  FieldSpec field_;
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix> d_;
};

struct CohomologyTable {
  std::vector<std::size_t> dims;          // dim H^n, n = 0..size-1
  std::vector<std::size_t> cochain_dims;  // dim C^n
  std::vector<std::size_t> ranks;         // rank D_n
};

// H^n for n < top, by rank-nullity.  Ranks of different degrees run
// concurrently; the result does not depend on scheduling.
CohomologyTable cohomology(const CochainComplex& c);

// Degreewise maps commuting with the differentials (checked).
class ComplexMap {
 public:
  ComplexMap() = default;
  // Throws ValidationError when f D != D f in some degree.
  ComplexMap(CochainComplex source, CochainComplex target, std::vector<SparseMatrix> maps);

  const CochainComplex& source() const noexcept { return source_; }
  const CochainComplex& target() const noexcept { return target_; }
  const SparseMatrix& map(std::size_t n) const { return maps_.at(n); }
  std::size_t top() const noexcept { return maps_.empty() ? 0 : maps_.size() - 1; }

 private:
  CochainComplex source_;
  CochainComplex target_;
  std::vector<SparseMatrix> maps_;
};

// Coboundaries.  Basis of CL^n: tuples (i_1..i_n) in lexicographic order with
// the module index fastest, i.e. index ((i_1 d + i_2) d + ...) m + k.
// Throws ResourceLimitExceeded above the nonzero cap.
SparseMatrix coboundary_bimodule(const Bimodule& m, std::size_t n, const Budget& budget = {});
SparseMatrix coboundary_left(const LeftModule& m, std::size_t n, const Budget& budget = {});
// Alternating cochains on strictly increasing tuples, lexicographic, module
// index fastest.  Throws ValidationError unless the algebra is Lie.
SparseMatrix ce_coboundary(const LeftModule& m, std::size_t n, const Budget& budget = {});

// dim CL^n = dim M (dim L)^n, and the alternating analogue with binomials.
std::size_t leibniz_cochain_dim(std::size_t dim_l, std::size_t dim_m, std::size_t n);
std::size_t ce_cochain_dim(std::size_t dim_l, std::size_t dim_m, std::size_t n);

// Complexes in degrees 0..top.
CochainComplex leibniz_complex(const Bimodule& m, std::size_t top, const Budget& budget = {});
CochainComplex left_complex(const LeftModule& m, std::size_t top, const Budget& budget = {});
CochainComplex ce_complex(const LeftModule& m, std::size_t top, const Budget& budget = {});

enum class Variant { leibniz_bimodule, leibniz_left, chevalley_eilenberg };
const char* to_string(Variant v);

// dim H^n for n = 0..n_max.  The left variants use the left action only.
CohomologyTable cohomology(const Bimodule& m, std::size_t n_max, Variant variant = Variant::leibniz_bimodule,
                           const Budget& budget = {});

// Cokernel of an injective chain map, on the complement of the echelon
// image basis, with the projection from the target.
struct Cokernel {
  CochainComplex complex;
  std::vector<SparseMatrix> projection;
};
Cokernel cokernel(const ComplexMap& i);

// A cokernel complex read with a degree shift: relative degree n is
// cokernel degree n + shift.
struct RelativeComplex {
  ComplexMap inclusion;
  Cokernel quotient;
  std::size_t shift = 0;
  CohomologyTable table;  // relative degrees 0..n_max
};

// Chain maps.
// C(g,M) -> CL(g,M_s), w -> (x_1..x_n -> w(x_1..x_n)).
ComplexMap ce_inclusion(const LeftModule& m, std::size_t top, const Budget& budget = {});
// CL(Q,M) -> CL(L,M) along pi, M given over Q.
ComplexMap epi_inclusion(const AlgebraMorphism& pi, const Bimodule& m, std::size_t top, const Budget& budget = {});
// C^{n+1}(g,F) -> C^n(g,g*), w -> (x_I -> w(x_I, .)), n >= 0.
ComplexMap exterior_dual(const LeibnizAlgebra& g, std::size_t top, const Budget& budget = {});

// CL(L|Q,M) = Coker(CL(Q,M) -> CL(L,M)) read from cokernel degree 1.
// Throws ValidationError unless pi is surjective.
RelativeComplex relative_epi_complex(const AlgebraMorphism& pi, const Bimodule& m, std::size_t n_max,
                                     const Budget& budget = {});
// CR(g) = Coker(m) read from cokernel degree 1; classes in CR^n take n + 2
// arguments.
RelativeComplex cr_complex(const LeibnizAlgebra& g, std::size_t n_max, const Budget& budget = {});
// C_rel(g,M) = Coker(C(g,M) -> CL(g,M_s)) read from cokernel degree 2.
RelativeComplex rel_complex(const LeftModule& m, std::size_t n_max, const Budget& budget = {});

struct BilinearForms {
  std::size_t dim = 0;                // invariant symmetric bilinear forms
  std::size_t cartan_koszul_rank = 0;  // rank of w -> [w(xy, z)] into H^3(g,F)
};
// Throws ValidationError for non-Lie input and in characteristic 2.
BilinearForms invariant_bilinear_forms(const LeibnizAlgebra& g);

// Exactness of the long exact sequence of 0 -> A -> B -> C -> 0.
struct LesNode {
  char space;  // 'A', 'B' or 'C'
  std::size_t degree;
  std::size_t dim;
  std::size_t rank_in;
  std::size_t rank_out;
  bool exact;
};
struct LesReport {
  std::vector<LesNode> nodes;
  std::vector<std::size_t> connecting_ranks;  // delta^n: H^n(C) -> H^{n+1}(A)
  bool lift_independent = true;  // delta recomputed with another lift agrees
  bool exact() const;
};
// Needs top() >= n_max + 2 on every complex.  Throws ValidationError unless
// the triple is short exact in every degree.
LesReport les_exactness(const ComplexMap& i, const ComplexMap& p, std::size_t n_max);
// Projection onto a cokernel as a chain map.
ComplexMap projection_map(const ComplexMap& i, const Cokernel& q);

struct ShiftReport {
  std::vector<std::size_t> lhs;  // index n
  std::vector<std::size_t> rhs;  // same index n, shifted quantity
  bool ok = true;
};
// dim HL^n(L, M_a) against dim HL^{n-1}(L, Hom(L,M)_s) for 1 <= n <= n_max,
// and HL^0(L, M_a) against dim M (stored at index 0).
ShiftReport antisym_shift_check(const LeftModule& m, std::size_t n_max, const Budget& budget = {});
// dim HL^n(L,F) against dim HL^{n-1}(L,(L*)_s) for 1 <= n <= n_max.
ShiftReport coadj_shift_check(const LeibnizAlgebra& l, std::size_t n_max, const Budget& budget = {});

}  // namespace leibcoh
