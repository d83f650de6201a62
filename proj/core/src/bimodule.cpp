#include "leibcoh/bimodule.hpp"

#include "leibcoh/errors.hpp"
#include "leibcoh/linalg.hpp"

namespace leibcoh {

namespace {

// Action of x_i x_j expressed through the basis matrices.
SparseMatrix action_of_product(const LeibnizAlgebra& l, const std::vector<SparseMatrix>& acts, std::size_t i,
                               std::size_t j, std::size_t dim) {
  SparseMatrix out(l.field(), dim, dim);
  for (const auto& t : l.product(i, j)) out = out + acts[t.index].scaled(t.coeff);
  return out;
}

void check_shapes(const LeibnizAlgebra& l, const std::vector<SparseMatrix>& acts, std::size_t dim) {
  if (acts.size() != l.dim()) throw DimensionMismatch("one action matrix per basis element required");
  for (const auto& a : acts)
    if (a.rows() != dim || a.cols() != dim || a.field() != l.field())
      throw DimensionMismatch("action matrix has the wrong shape or field");
}

std::size_t module_dim(const std::vector<SparseMatrix>& acts) { return acts.empty() ? 0 : acts[0].rows(); }

void throw_first(const LeibnizAlgebra& l, const std::vector<ModuleViolation>& bad) {
  if (bad.empty()) return;
  const auto& v = bad.front();
  throw ValidationError(std::string("module axiom ") + to_string(v.axiom) + " fails for (" + l.basis_names()[v.i] +
                        ", " + l.basis_names()[v.j] + ")");
}

// Combination sum_k x[k] acts[k] for x given as a column of a matrix.
SparseMatrix action_of_vector(const LeibnizAlgebra& l, const std::vector<SparseMatrix>& acts, const SparseMatrix& x,
                              std::size_t col, std::size_t dim) {
  SparseMatrix out(l.field(), dim, dim);
  for (std::size_t k = x.col_begin(col); k < x.col_end(col); ++k) out = out + acts[x.row_of(k)].scaled(x.value(k));
  return out;
}

std::vector<SparseMatrix> restrict_all(const std::vector<SparseMatrix>& acts, const Subspace& w) {
  std::vector<SparseMatrix> out;
  for (const auto& a : acts) {
    SparseMatrix img = a * w.basis();
    if (!w.contains(img)) throw ValidationError("subspace is not invariant under the action");
    out.push_back(w.coordinates(img));
  }
  return out;
}

std::vector<SparseMatrix> project_all(const std::vector<SparseMatrix>& acts, const Subspace& w) {
  SparseMatrix proj = w.quotient_projection();
  SparseMatrix inc = w.complement_inclusion();
  std::vector<SparseMatrix> out;
  for (const auto& a : acts) {
    if (!w.contains(a * w.basis())) throw ValidationError("subspace is not invariant under the action");
    out.push_back(proj * a * inc);
  }
  return out;
}

std::vector<SparseMatrix> pull(const std::vector<SparseMatrix>& acts, const AlgebraMorphism& pi, std::size_t dim) {
  std::vector<SparseMatrix> out;
  for (std::size_t i = 0; i < pi.source().dim(); ++i)
    out.push_back(action_of_vector(pi.target(), acts, pi.matrix(), i, dim));
  return out;
}

}  // namespace

const char* to_string(ModuleAxiom a) {
  switch (a) {
    case ModuleAxiom::left:
      return "(xy)m = x(ym) - y(xm)";
    case ModuleAxiom::mixed:
      return "(xm)y = x(my) - m(xy)";
    case ModuleAxiom::right:
      return "(mx)y = m(xy) - x(my)";
  }
  return "?";
}

std::vector<ModuleViolation> check_left_module(const LeibnizAlgebra& l, const std::vector<SparseMatrix>& left) {
  check_shapes(l, left, module_dim(left));
  std::vector<ModuleViolation> out;
  std::size_t dim = module_dim(left);
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!(action_of_product(l, left, i, j, dim) == left[i] * left[j] - left[j] * left[i]))
        out.push_back({ModuleAxiom::left, i, j});
  return out;
}

std::vector<ModuleViolation> check_bimodule(const LeibnizAlgebra& l, const std::vector<SparseMatrix>& left,
                                            const std::vector<SparseMatrix>& right) {
  std::vector<ModuleViolation> out = check_left_module(l, left);
  std::size_t dim = module_dim(left);
  check_shapes(l, right, dim);
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      SparseMatrix rij = action_of_product(l, right, i, j, dim);
      if (!(right[j] * left[i] == left[i] * right[j] - rij)) out.push_back({ModuleAxiom::mixed, i, j});
      if (!(right[j] * right[i] == rij - left[i] * right[j])) out.push_back({ModuleAxiom::right, i, j});
    }
  return out;
}

LeftModule::LeftModule(LeibnizAlgebra algebra, std::size_t dim, std::vector<SparseMatrix> left)
    : algebra_(std::move(algebra)), dim_(dim), left_(std::move(left)) {
  check_shapes(algebra_, left_, dim_);
  throw_first(algebra_, check_left_module(algebra_, left_));
}

Bimodule::Bimodule(LeibnizAlgebra algebra, std::size_t dim, std::vector<SparseMatrix> left,
                   std::vector<SparseMatrix> right)
    : algebra_(std::move(algebra)), dim_(dim), left_(std::move(left)), right_(std::move(right)) {
  check_shapes(algebra_, left_, dim_);
  check_shapes(algebra_, right_, dim_);
  throw_first(algebra_, check_bimodule(algebra_, left_, right_));
}

bool Bimodule::is_symmetric() const {
  for (std::size_t i = 0; i < left_.size(); ++i)
    if (!(left_[i] + right_[i]).is_zero()) return false;
  return true;
}

bool Bimodule::is_antisymmetric() const {
  for (const auto& r : right_)
    if (!r.is_zero()) return false;
  return true;
}

Bimodule symmetrize(const LeftModule& m) {
  std::vector<SparseMatrix> right;
  for (const auto& a : m.left()) right.push_back(a.negated());
  return Bimodule(m.algebra(), m.dim(), m.left(), std::move(right));
}

Bimodule antisymmetrize(const LeftModule& m) {
  std::vector<SparseMatrix> right(m.algebra().dim(), SparseMatrix(m.field(), m.dim(), m.dim()));
  return Bimodule(m.algebra(), m.dim(), m.left(), std::move(right));
}

LeftModule trivial_module(const LeibnizAlgebra& l, std::size_t dim) {
  return LeftModule(l, dim, std::vector<SparseMatrix>(l.dim(), SparseMatrix(l.field(), dim, dim)));
}

Bimodule trivial_bimodule(const LeibnizAlgebra& l, std::size_t dim) { return antisymmetrize(trivial_module(l, dim)); }

LeftModule weight_module(const LeibnizAlgebra& l, const std::vector<Scalar>& weights) {
  if (weights.size() != l.dim()) throw DimensionMismatch("one weight per basis element required");
  std::vector<SparseMatrix> acts;
  for (const auto& w : weights) acts.push_back(SparseMatrix::from_triplets(l.field(), 1, 1, {{0, 0, w}}));
  return LeftModule(l, 1, std::move(acts));
}

LeftModule adjoint_left(const LeibnizAlgebra& l) {
  std::vector<SparseMatrix> acts;
  for (std::size_t i = 0; i < l.dim(); ++i) acts.push_back(l.left_multiplication(i));
  return LeftModule(l, l.dim(), std::move(acts));
}

Bimodule adjoint_bimodule(const LeibnizAlgebra& l) {
  std::vector<SparseMatrix> left, right;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    left.push_back(l.left_multiplication(i));
    right.push_back(l.right_multiplication(i));
  }
  return Bimodule(l, l.dim(), std::move(left), std::move(right));
}

LeftModule dual_module(const LeibnizAlgebra& l) {
  std::vector<SparseMatrix> acts;
  for (std::size_t i = 0; i < l.dim(); ++i) acts.push_back(l.left_multiplication(i).transpose().negated());
  return LeftModule(l, l.dim(), std::move(acts));
}

LeftModule hom_module(const LeftModule& n, const LeftModule& m) {
  const LeibnizAlgebra& l = m.algebra();
  if (n.field() != m.field() || n.algebra().dim() != l.dim())
    throw DimensionMismatch("hom_module: modules over different algebras");
  std::size_t dn = n.dim(), dm = m.dim();
  std::vector<SparseMatrix> acts;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    std::vector<SparseMatrix::Triplet> t;
    const SparseMatrix& am = m.left(i);
    const SparseMatrix& an = n.left(i);
    // E_{a,k}: n_a -> m_k.  x.E_{a,k} = sum_l AM[l][k] E_{a,l} - sum_b AN[a][b] E_{b,k}.
    for (std::size_t a = 0; a < dn; ++a)
      for (std::size_t k = 0; k < dm; ++k) {
        std::size_t col = a * dm + k;
        for (std::size_t e = am.col_begin(k); e < am.col_end(k); ++e) t.push_back({a * dm + am.row_of(e), col, am.value(e)});
      }
    SparseMatrix ant = an.transpose();
    for (std::size_t a = 0; a < dn; ++a)
      for (std::size_t e = ant.col_begin(a); e < ant.col_end(a); ++e) {
        std::size_t b = ant.row_of(e);
        for (std::size_t k = 0; k < dm; ++k) t.push_back({b * dm + k, a * dm + k, -ant.value(e)});
      }
    acts.push_back(SparseMatrix::from_triplets(l.field(), dn * dm, dn * dm, t));
  }
  return LeftModule(l, dn * dm, std::move(acts));
}

LeftModule hom_module(const LeibnizAlgebra& l, const LeftModule& m) { return hom_module(adjoint_left(l), m); }

LeftModule tensor_modules(const LeftModule& m, const LeftModule& n) {
  const LeibnizAlgebra& l = m.algebra();
  if (n.field() != m.field() || n.algebra().dim() != l.dim())
    throw DimensionMismatch("tensor_modules: modules over different algebras");
  std::size_t dm = m.dim(), dn = n.dim();
  std::vector<SparseMatrix> acts;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    std::vector<SparseMatrix::Triplet> t;
    const SparseMatrix& am = m.left(i);
    const SparseMatrix& an = n.left(i);
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t b = 0; b < dn; ++b) {
        std::size_t col = a * dn + b;
        for (std::size_t e = am.col_begin(a); e < am.col_end(a); ++e) t.push_back({am.row_of(e) * dn + b, col, am.value(e)});
        for (std::size_t e = an.col_begin(b); e < an.col_end(b); ++e) t.push_back({a * dn + an.row_of(e), col, an.value(e)});
      }
    acts.push_back(SparseMatrix::from_triplets(l.field(), dm * dn, dm * dn, t));
  }
  return LeftModule(l, dm * dn, std::move(acts));
}

Subspace left_invariants(const LeftModule& m) {
  if (m.left().empty()) return Subspace::full(m.field(), m.dim());
  return kernel_basis(SparseMatrix::vstack(m.left()));
}

Subspace invariants(const Bimodule& m, const Subspace& ideal) {
  const LeibnizAlgebra& l = m.algebra();
  if (!is_left_ideal(l, ideal)) throw ValidationError("invariants: subspace is not a left ideal");
  if (ideal.dim() == 0) return Subspace::full(m.field(), m.dim());
  std::vector<SparseMatrix> blocks;
  for (std::size_t c = 0; c < ideal.dim(); ++c) blocks.push_back(action_of_vector(l, m.right(), ideal.basis(), c, m.dim()));
  return kernel_basis(SparseMatrix::vstack(blocks));
}

Subspace invariants(const Bimodule& m) { return invariants(m, Subspace::full(m.field(), m.algebra().dim())); }

AntisymKernel antisym_kernel(const Bimodule& m) {
  std::vector<SparseMatrix> gens;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) gens.push_back(m.left(i) + m.right(i));
  Subspace m0 = gens.empty() ? Subspace::zero(m.field(), m.dim()) : Subspace::span(SparseMatrix::hstack(gens));
  return {m0, sub_bimodule(m, m0), quotient_bimodule(m, m0)};
}

std::size_t hom_space(const LeftModule& m, const LeftModule& n) { return left_invariants(hom_module(m, n)).dim(); }

Subspace annihilator(const Bimodule& m) {
  const LeibnizAlgebra& l = m.algebra();
  std::size_t d = m.dim();
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t e = m.left(i).col_begin(j); e < m.left(i).col_end(j); ++e)
        t.push_back({j * d + m.left(i).row_of(e), i, m.left(i).value(e)});
      for (std::size_t e = m.right(i).col_begin(j); e < m.right(i).col_end(j); ++e)
        t.push_back({d * d + j * d + m.right(i).row_of(e), i, m.right(i).value(e)});
    }
  }
  return kernel_basis(SparseMatrix::from_triplets(l.field(), 2 * d * d, l.dim(), t));
}

LeftModule sub_module(const LeftModule& m, const Subspace& w) {
  return LeftModule(m.algebra(), w.dim(), restrict_all(m.left(), w));
}

LeftModule quotient_module(const LeftModule& m, const Subspace& w) {
  return LeftModule(m.algebra(), m.dim() - w.dim(), project_all(m.left(), w));
}

Bimodule sub_bimodule(const Bimodule& m, const Subspace& w) {
  return Bimodule(m.algebra(), w.dim(), restrict_all(m.left(), w), restrict_all(m.right(), w));
}

Bimodule quotient_bimodule(const Bimodule& m, const Subspace& w) {
  return Bimodule(m.algebra(), m.dim() - w.dim(), project_all(m.left(), w), project_all(m.right(), w));
}

Subspace generated_submodule(const LeftModule& m, const SparseMatrix& vectors) {
  Subspace w = Subspace::span(vectors);
  for (;;) {
    std::vector<SparseMatrix> parts{w.basis()};
    for (const auto& a : m.left()) parts.push_back(a * w.basis());
    Subspace next = Subspace::span(SparseMatrix::hstack(parts));
    if (next.dim() == w.dim()) return next;
    w = std::move(next);
  }
}

LeftModule pullback(const LeftModule& m, const AlgebraMorphism& pi) {
  if (m.algebra().dim() != pi.target().dim()) throw DimensionMismatch("pullback: module over another algebra");
  return LeftModule(pi.source(), m.dim(), pull(m.left(), pi, m.dim()));
}

Bimodule pullback(const Bimodule& m, const AlgebraMorphism& pi) {
  if (m.algebra().dim() != pi.target().dim()) throw DimensionMismatch("pullback: module over another algebra");
  return Bimodule(pi.source(), m.dim(), pull(m.left(), pi, m.dim()), pull(m.right(), pi, m.dim()));
}

LeftModule descend(const LeftModule& m, const AlgebraMorphism& pi) {
  if (m.algebra().dim() != pi.source().dim()) throw DimensionMismatch("descend: module over another algebra");
  Subspace ker = kernel_basis(pi.matrix());
  for (std::size_t c = 0; c < ker.dim(); ++c)
    if (!action_of_vector(pi.source(), m.left(), ker.basis(), c, m.dim()).is_zero())
      throw ValidationError("descend: kernel of the projection acts nontrivially");
  // Any preimage of each target basis vector gives the same action.
  SparseMatrix lift = solve(pi.matrix(), SparseMatrix::identity(m.field(), pi.target().dim()));
  std::vector<SparseMatrix> acts;
  for (std::size_t b = 0; b < pi.target().dim(); ++b)
    acts.push_back(action_of_vector(pi.source(), m.left(), lift, b, m.dim()));
  return LeftModule(pi.target(), m.dim(), std::move(acts));
}

}  // namespace leibcoh
