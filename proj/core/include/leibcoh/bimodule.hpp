#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/sparse_matrix.hpp"
#include "leibcoh/subspace.hpp"

namespace leibcoh {

enum class ModuleAxiom {
  left,   // (xy)m = x(ym) - y(xm)
  mixed,  // (xm)y = x(my) - m(xy)
  right,  // (mx)y = m(xy) - x(my)
};

struct ModuleViolation {
  ModuleAxiom axiom;
  std::size_t i, j;
};

const char* to_string(ModuleAxiom a);

// Action matrices act on coordinate columns: coords(x_i . m) = left[i] coords(m).
std::vector<ModuleViolation> check_left_module(const LeibnizAlgebra& l, const std::vector<SparseMatrix>& left);
std::vector<ModuleViolation> check_bimodule(const LeibnizAlgebra& l, const std::vector<SparseMatrix>& left,
                                            const std::vector<SparseMatrix>& right);

class LeftModule {
 public:
  LeftModule() = default;
  // Throws ValidationError when the module axiom fails.
  LeftModule(LeibnizAlgebra algebra, std::size_t dim, std::vector<SparseMatrix> left);

  const LeibnizAlgebra& algebra() const noexcept { return algebra_; }
  FieldSpec field() const noexcept { return algebra_.field(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<SparseMatrix>& left() const noexcept { return left_; }
  const SparseMatrix& left(std::size_t i) const { return left_[i]; }

 private:
  LeibnizAlgebra algebra_;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix> left_;
};

class Bimodule {
 public:
  Bimodule() = default;
  // Throws ValidationError when any of the three axioms fails.
  Bimodule(LeibnizAlgebra algebra, std::size_t dim, std::vector<SparseMatrix> left, std::vector<SparseMatrix> right);

  const LeibnizAlgebra& algebra() const noexcept { return algebra_; }
  FieldSpec field() const noexcept { return algebra_.field(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<SparseMatrix>& left() const noexcept { return left_; }
  const std::vector<SparseMatrix>& right() const noexcept { return right_; }
  const SparseMatrix& left(std::size_t i) const { return left_[i]; }
  const SparseMatrix& right(std::size_t i) const { return right_[i]; }
  LeftModule left_module() const { return LeftModule(algebra_, dim_, left_); }
  bool is_symmetric() const;
  bool is_antisymmetric() const;

 private:
  LeibnizAlgebra algebra_;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix> left_;
  std::vector<SparseMatrix> right_;
};

// Right action m.x = -x.m.
Bimodule symmetrize(const LeftModule& m);
// Trivial right action.
Bimodule antisymmetrize(const LeftModule& m);

LeftModule trivial_module(const LeibnizAlgebra& l, std::size_t dim = 1);
Bimodule trivial_bimodule(const LeibnizAlgebra& l, std::size_t dim = 1);
// One-dimensional module F_lambda: x_i acts by weights[i].  Validated.
LeftModule weight_module(const LeibnizAlgebra& l, const std::vector<Scalar>& weights);
LeftModule adjoint_left(const LeibnizAlgebra& l);
Bimodule adjoint_bimodule(const LeibnizAlgebra& l);
// L* with (x.f)(y) = -f(xy).
LeftModule dual_module(const LeibnizAlgebra& l);
// Hom_F(N, M) with (x.f)(n) = x.f(n) - f(x.n); coordinate of n_a -> m_k at
// index a * dim M + k.
LeftModule hom_module(const LeftModule& n, const LeftModule& m);
// Hom_F(L, M) with L acting on itself from the left.
LeftModule hom_module(const LeibnizAlgebra& l, const LeftModule& m);
// x.(m (x) n) = (x.m) (x) n + m (x) (x.n); index m_index * dim N + n_index.
LeftModule tensor_modules(const LeftModule& m, const LeftModule& n);

// {m : x.m = 0 for all x}.
Subspace left_invariants(const LeftModule& m);
// {m : m.x = 0 for all x in I}; I must be a left ideal (checked).
Subspace invariants(const Bimodule& m, const Subspace& ideal);
Subspace invariants(const Bimodule& m);

struct AntisymKernel {
  Subspace m0;
  Bimodule sub;        // M_0
  Bimodule quotient;   // M_sym = M / M_0
};
AntisymKernel antisym_kernel(const Bimodule& m);

// dim of {phi : phi(x.m) = x.phi(m)} via a linear solve.
std::size_t hom_space(const LeftModule& m, const LeftModule& n);

// {x : x.m = 0 = m.x for all m}.
Subspace annihilator(const Bimodule& m);

// Sub- and quotient modules along an invariant subspace (checked).
LeftModule sub_module(const LeftModule& m, const Subspace& w);
LeftModule quotient_module(const LeftModule& m, const Subspace& w);
Bimodule sub_bimodule(const Bimodule& m, const Subspace& w);
Bimodule quotient_bimodule(const Bimodule& m, const Subspace& w);

// Smallest submodule containing the columns of `vectors`.
Subspace generated_submodule(const LeftModule& m, const SparseMatrix& vectors);

// Restriction along pi: L -> Q.
LeftModule pullback(const LeftModule& m, const AlgebraMorphism& pi);
Bimodule pullback(const Bimodule& m, const AlgebraMorphism& pi);
// Module over Q = pi(L) from a module over L on which ker(pi) acts trivially
// (checked).
LeftModule descend(const LeftModule& m, const AlgebraMorphism& pi);

}  // namespace leibcoh
