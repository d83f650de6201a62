#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leibcoh/field.hpp"
#include "leibcoh/sparse_matrix.hpp"
#include "leibcoh/subspace.hpp"

namespace leibcoh {

struct Term {
  std::size_t index;
  Scalar coeff;
};

// Unvalidated multiplication table: x_i x_j = sum of terms in product(i, j).
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(FieldSpec field, std::vector<std::string> basis_names);

  FieldSpec field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  // Throws std::out_of_range for an unknown name.
  std::size_t index_of(const std::string& name) const;

  // Replaces x_i x_j; terms with equal index are summed, zeros dropped.
  void set_product(std::size_t i, std::size_t j, std::vector<Term> terms);
  void set_product(const std::string& a, const std::string& b, const std::vector<std::pair<std::string, long>>& terms);
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  // Matrix of y -> x_i y.
  SparseMatrix left_multiplication(std::size_t i) const;
  // Matrix of y -> y x_i.
  SparseMatrix right_multiplication(std::size_t i) const;

 private:
  FieldSpec field_;
  std::vector<std::string> names_;
  std::vector<std::vector<Term>> table_;
};

struct LeibnizViolation {
  std::size_t i, j, k;
};

// Triples (i, j, k) with x_i(x_j x_k) != (x_i x_j)x_k + x_j(x_i x_k).
std::vector<LeibnizViolation> check_left_leibniz(const StructureConstants& c);

// A left Leibniz algebra; construction validates the identity on all basis
// triples and the uniqueness of basis names.
class LeibnizAlgebra {
 public:
  LeibnizAlgebra() = default;
  // Throws ValidationError on any violation.
  explicit LeibnizAlgebra(StructureConstants c);

  FieldSpec field() const noexcept { return c_.field(); }
  std::size_t dim() const noexcept { return c_.dim(); }
  const std::vector<std::string>& basis_names() const noexcept { return c_.basis_names(); }
  std::size_t index_of(const std::string& name) const { return c_.index_of(name); }
  const StructureConstants& constants() const noexcept { return c_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return c_.product(i, j); }
  const SparseMatrix& left_multiplication(std::size_t i) const { return left_[i]; }
  const SparseMatrix& right_multiplication(std::size_t i) const { return right_[i]; }
  // Product of coordinate vectors.
  std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;

 private:
  StructureConstants c_;
  std::vector<SparseMatrix> left_;
  std::vector<SparseMatrix> right_;
};

// Linear map between algebras preserving products; validated on basis pairs.
class AlgebraMorphism {
 public:
  AlgebraMorphism() = default;
  // matrix is target.dim() x source.dim().  Throws ValidationError.
  AlgebraMorphism(LeibnizAlgebra source, LeibnizAlgebra target, SparseMatrix matrix);

  const LeibnizAlgebra& source() const noexcept { return source_; }
  const LeibnizAlgebra& target() const noexcept { return target_; }
  const SparseMatrix& matrix() const noexcept { return matrix_; }
  bool is_surjective() const;

 private:
  LeibnizAlgebra source_;
  LeibnizAlgebra target_;
  SparseMatrix matrix_;
};

// Span of all squares v v, via x_i x_i and x_i x_j + x_j x_i.
Subspace leibniz_kernel(const LeibnizAlgebra& l);
bool is_lie(const LeibnizAlgebra& l);
// {c : c x = 0 for all x}.
Subspace left_center(const LeibnizAlgebra& l);
bool is_left_ideal(const LeibnizAlgebra& l, const Subspace& i);
bool is_two_sided_ideal(const LeibnizAlgebra& l, const Subspace& i);

struct QuotientAlgebra {
  LeibnizAlgebra algebra;
  AlgebraMorphism projection;
};

// L / I with basis the standard vectors off the echelon pivots of I, in index
// order.  Throws ValidationError unless I is a two-sided ideal.
QuotientAlgebra quotient_algebra(const LeibnizAlgebra& l, const Subspace& ideal);
// L / Leib(L).
QuotientAlgebra canonical_lie(const LeibnizAlgebra& l);

}  // namespace leibcoh
