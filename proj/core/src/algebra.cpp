#include "leibcoh/algebra.hpp"

#include <set>
#include <stdexcept>

#include "leibcoh/errors.hpp"
#include "leibcoh/linalg.hpp"

namespace leibcoh {

namespace {

using Dense = std::vector<Scalar>;

Dense basis_product(const StructureConstants& c, std::size_t i, std::size_t j) {
  Dense out(c.dim(), Scalar::zero(c.field()));
  for (const auto& t : c.product(i, j)) out[t.index] += t.coeff;
  return out;
}

Dense multiply_dense(const StructureConstants& c, const Dense& a, const Dense& b) {
  Dense out(c.dim(), Scalar::zero(c.field()));
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < c.dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar s = a[i] * b[j];
      for (const auto& t : c.product(i, j)) out[t.index] += s * t.coeff;
    }
  }
  return out;
}

Dense unit(const StructureConstants& c, std::size_t i) {
  Dense out(c.dim(), Scalar::zero(c.field()));
  out[i] = Scalar::one(c.field());
  return out;
}

}  // namespace

StructureConstants::StructureConstants(FieldSpec field, std::vector<std::string> basis_names)
    : field_(field), names_(std::move(basis_names)), table_(names_.size() * names_.size()) {}

std::size_t StructureConstants::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::out_of_range("unknown basis element: " + name);
}

void StructureConstants::set_product(std::size_t i, std::size_t j, std::vector<Term> terms) {
  if (i >= dim() || j >= dim()) throw DimensionMismatch("product index out of range");
  Dense acc(dim(), Scalar::zero(field_));
  for (const auto& t : terms) {
    if (t.index >= dim()) throw DimensionMismatch("product term index out of range");
    if (t.coeff.field() != field_) throw DimensionMismatch("product coefficient from another field");
    acc[t.index] += t.coeff;
  }
  auto& slot = table_[i * dim() + j];
  slot.clear();
  for (std::size_t k = 0; k < dim(); ++k)
    if (!acc[k].is_zero()) slot.push_back({k, acc[k]});
}

void StructureConstants::set_product(const std::string& a, const std::string& b,
                                     const std::vector<std::pair<std::string, long>>& terms) {
  std::vector<Term> t;
  for (const auto& [name, v] : terms) t.push_back({index_of(name), Scalar(field_, v)});
  set_product(index_of(a), index_of(b), std::move(t));
}

SparseMatrix StructureConstants::left_multiplication(std::size_t i) const {
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& term : product(i, j)) t.push_back({term.index, j, term.coeff});
  return SparseMatrix::from_triplets(field_, dim(), dim(), t);
}

SparseMatrix StructureConstants::right_multiplication(std::size_t i) const {
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& term : product(j, i)) t.push_back({term.index, j, term.coeff});
  return SparseMatrix::from_triplets(field_, dim(), dim(), t);
}

std::vector<LeibnizViolation> check_left_leibniz(const StructureConstants& c) {
  std::vector<LeibnizViolation> out;
  std::size_t n = c.dim();
  std::vector<Dense> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = basis_product(c, i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Dense lhs = multiply_dense(c, unit(c, i), prod[j * n + k]);
        Dense r1 = multiply_dense(c, prod[i * n + j], unit(c, k));
        Dense r2 = multiply_dense(c, unit(c, j), prod[i * n + k]);
        for (std::size_t t = 0; t < n; ++t)
          if (!(lhs[t] == r1[t] + r2[t])) {
            out.push_back({i, j, k});
            break;
          }
      }
  return out;
}

LeibnizAlgebra::LeibnizAlgebra(StructureConstants c) : c_(std::move(c)) {
  std::set<std::string> names(c_.basis_names().begin(), c_.basis_names().end());
  if (names.size() != c_.dim()) throw ValidationError("basis names are not unique");
  auto bad = check_left_leibniz(c_);
  if (!bad.empty()) {
    const auto& v = bad.front();
    throw ValidationError("left Leibniz identity fails at (" + c_.basis_names()[v.i] + ", " +
                          c_.basis_names()[v.j] + ", " + c_.basis_names()[v.k] + ")");
  }
  for (std::size_t i = 0; i < c_.dim(); ++i) {
    left_.push_back(c_.left_multiplication(i));
    right_.push_back(c_.right_multiplication(i));
  }
}

std::vector<Scalar> LeibnizAlgebra::multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  if (a.size() != dim() || b.size() != dim()) throw DimensionMismatch("multiply: vector length");
  return multiply_dense(c_, a, b);
}

AlgebraMorphism::AlgebraMorphism(LeibnizAlgebra source, LeibnizAlgebra target, SparseMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim() || matrix_.field() != source_.field() ||
      source_.field() != target_.field())
    throw DimensionMismatch("morphism matrix has the wrong shape");
  auto col = [&](std::size_t i) {
    std::vector<Scalar> v(target_.dim(), Scalar::zero(target_.field()));
    for (std::size_t k = matrix_.col_begin(i); k < matrix_.col_end(i); ++k) v[matrix_.row_of(k)] = matrix_.value(k);
    return v;
  };
  for (std::size_t i = 0; i < source_.dim(); ++i)
    for (std::size_t j = 0; j < source_.dim(); ++j) {
      std::vector<Scalar> xy(source_.dim(), Scalar::zero(source_.field()));
      for (const auto& t : source_.product(i, j)) xy[t.index] += t.coeff;
      if (matrix_.apply(xy) != target_.multiply(col(i), col(j)))
        throw ValidationError("map does not preserve the product of " + source_.basis_names()[i] + " and " +
                              source_.basis_names()[j]);
    }
}

bool AlgebraMorphism::is_surjective() const { return rank(matrix_) == target_.dim(); }

Subspace leibniz_kernel(const LeibnizAlgebra& l) {
  std::vector<SparseMatrix::Triplet> t;
  std::size_t n = l.dim(), col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++col) {
      for (const auto& term : l.product(i, j)) t.push_back({term.index, col, term.coeff});
      if (j != i)
        for (const auto& term : l.product(j, i)) t.push_back({term.index, col, term.coeff});
    }
  return Subspace::span(SparseMatrix::from_triplets(l.field(), n, col, t));
}

bool is_lie(const LeibnizAlgebra& l) { return leibniz_kernel(l).dim() == 0; }

Subspace left_center(const LeibnizAlgebra& l) {
  std::vector<SparseMatrix> blocks;
  for (std::size_t j = 0; j < l.dim(); ++j) blocks.push_back(l.right_multiplication(j));
  if (blocks.empty()) return Subspace::zero(l.field(), 0);
  return kernel_basis(SparseMatrix::vstack(blocks));
}

bool is_left_ideal(const LeibnizAlgebra& l, const Subspace& i) {
  if (i.ambient_dim() != l.dim()) throw DimensionMismatch("ideal lives in another space");
  for (std::size_t k = 0; k < l.dim(); ++k)
    if (!i.contains(l.left_multiplication(k) * i.basis())) return false;
  return true;
}

bool is_two_sided_ideal(const LeibnizAlgebra& l, const Subspace& i) {
  if (!is_left_ideal(l, i)) return false;
  for (std::size_t k = 0; k < l.dim(); ++k)
    if (!i.contains(l.right_multiplication(k) * i.basis())) return false;
  return true;
}

QuotientAlgebra quotient_algebra(const LeibnizAlgebra& l, const Subspace& ideal) {
  if (!is_two_sided_ideal(l, ideal)) throw ValidationError("quotient_algebra: not a two-sided ideal");
  std::vector<std::size_t> keep = ideal.non_pivots();
  SparseMatrix proj = ideal.quotient_projection();
  std::vector<std::string> names;
  for (std::size_t k : keep) names.push_back(l.basis_names()[k]);
  StructureConstants c(l.field(), names);
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) {
      std::vector<Scalar> xy(l.dim(), Scalar::zero(l.field()));
      for (const auto& t : l.product(keep[a], keep[b])) xy[t.index] += t.coeff;
      std::vector<Scalar> img = proj.apply(xy);
      std::vector<Term> terms;
      for (std::size_t k = 0; k < img.size(); ++k)
        if (!img[k].is_zero()) terms.push_back({k, img[k]});
      c.set_product(a, b, std::move(terms));
    }
  LeibnizAlgebra q(std::move(c));
  AlgebraMorphism pi(l, q, proj);
  return {std::move(q), std::move(pi)};
}

QuotientAlgebra canonical_lie(const LeibnizAlgebra& l) { return quotient_algebra(l, leibniz_kernel(l)); }

}  // namespace leibcoh
