#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "leibcoh/catalog.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/linalg.hpp"

using namespace leibcoh;

namespace {

const FieldSpec Q = FieldSpec::rationals();

SparseMatrix dense(FieldSpec f, std::vector<std::vector<long>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return SparseMatrix::from_dense(f, rows, cols);
}

SparseMatrix scalar1(FieldSpec f, long v) { return dense(f, {{v}}); }

LeftModule f_lambda(const LeibnizAlgebra& l, long lambda) {
  // e acts by zero, h by lambda.
  std::vector<Scalar> w(l.dim(), Scalar::zero(l.field()));
  w[l.index_of("h")] = Scalar(l.field(), lambda);
  return weight_module(l, w);
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<SparseMatrix::Triplet> t;
  auto da = a.to_dense(), db = b.to_dense();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          Scalar v = da[i][j] * db[k][l];
          if (!v.is_zero()) t.push_back({i * b.rows() + k, j * b.cols() + l, v});
        }
  return SparseMatrix::from_triplets(a.field(), a.rows() * b.rows(), a.cols() * b.cols(), t);
}

// dim {phi : phi A_i = B_i phi} through the vectorized system
// (A_i^T (x) I - I (x) B_i) vec(phi) = 0 and dense elimination.
std::size_t intertwiners_oracle(const LeftModule& m, const LeftModule& n) {
  FieldSpec f = m.field();
  std::vector<SparseMatrix> blocks;
  SparseMatrix im = SparseMatrix::identity(f, m.dim()), in = SparseMatrix::identity(f, n.dim());
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    blocks.push_back(kron(m.left(i).transpose(), in) - kron(im, n.left(i)));
  return m.dim() * n.dim() - oracle::dense_rank(SparseMatrix::vstack(blocks));
}

// dim {v : A_i v = 0 for all i} by dense elimination.
std::size_t invariants_oracle(const LeftModule& m) {
  return m.dim() - oracle::dense_rank(SparseMatrix::vstack(m.left()));
}

std::vector<Bimodule> bimodule_grid(FieldSpec f) {
  std::vector<Bimodule> out;
  for (const auto& name : {"a", "heisenberg", "N", "A", "sl2", "borel_sl2", "hemi_sl2_L(2)"}) {
    LeibnizAlgebra l = catalog(name, f);
    out.push_back(adjoint_bimodule(l));
    out.push_back(symmetrize(dual_module(l)));
    out.push_back(antisymmetrize(dual_module(l)));
    out.push_back(symmetrize(adjoint_left(l)));
    out.push_back(antisymmetrize(hom_module(l, adjoint_left(l))));
    out.push_back(symmetrize(tensor_modules(dual_module(l), adjoint_left(l))));
    out.push_back(trivial_bimodule(l, 2));
  }
  LeibnizAlgebra a = catalog("a", f);
  for (long lambda = 0; lambda < 3; ++lambda) {
    out.push_back(symmetrize(f_lambda(a, lambda)));
    out.push_back(antisymmetrize(tensor_modules(dual_module(a), f_lambda(a, lambda))));
  }
  return out;
}

}  // namespace

TEST(CheckBimodule, AdjointAndWeightModulesPass) {
  for (const auto& name : {"a", "heisenberg", "N", "A", "sl2", "borel_sl2", "hemi_sl2_L(3)"}) {
    LeibnizAlgebra l = catalog(name, Q);
    Bimodule ad = adjoint_bimodule(l);
    EXPECT_TRUE(check_bimodule(l, ad.left(), ad.right()).empty()) << name;
  }
  LeibnizAlgebra a = catalog("a", Q);
  for (long lambda : {0, 1, 5}) {
    Bimodule m = symmetrize(f_lambda(a, lambda));
    EXPECT_TRUE(check_bimodule(a, m.left(), m.right()).empty());
  }
}

TEST(CheckBimodule, PlusLeftRightActionFails) {
  // F_1 over a with m.x = +x.m: (m.h).h = m while m.(hh) - h.(m.h) = -m, so
  // the identity (m x) y = m(xy) - x(m y) breaks at (h, h); the mixed
  // identity (x m) y = x(m y) - m(xy) still holds on every pair.
  LeibnizAlgebra a = catalog("a", Q);
  LeftModule f1 = f_lambda(a, 1);
  auto bad = check_bimodule(a, f1.left(), f1.left());
  ASSERT_FALSE(bad.empty());
  std::size_t h = a.index_of("h");
  bool hit = false;
  for (const auto& v : bad) {
    EXPECT_EQ(v.axiom, ModuleAxiom::right);
    hit = hit || (v.i == h && v.j == h);
  }
  EXPECT_TRUE(hit);
  EXPECT_THROW(Bimodule(a, 1, f1.left(), f1.left()), ValidationError);
}

TEST(CheckLeftModule, RejectsBadActions) {
  LeibnizAlgebra a = catalog("a", Q);
  // h -> 0, e -> 1 violates (he).m = h(em) - e(hm).
  EXPECT_THROW(LeftModule(a, 1, {scalar1(Q, 0), scalar1(Q, 1)}), ValidationError);
  EXPECT_THROW(LeftModule(a, 1, {scalar1(Q, 0)}), std::exception);
}

TEST(Symmetrize, TrivialAndAdjoint) {
  LeibnizAlgebra a = catalog("a", Q);
  LeftModule triv = trivial_module(a);
  EXPECT_TRUE(symmetrize(triv).is_antisymmetric());
  EXPECT_TRUE(antisymmetrize(triv).is_symmetric());
  Bimodule s = symmetrize(adjoint_left(a));
  EXPECT_TRUE(s.is_symmetric());
  LeibnizAlgebra big_a = catalog("A", Q);
  Bimodule fa = antisymmetrize(f_lambda(big_a, 1));
  EXPECT_EQ(invariants(fa).dim(), 1u);
}

TEST(AdjointBimodule, Examples) {
  LeibnizAlgebra s = catalog("sl2", Q);
  EXPECT_TRUE(adjoint_bimodule(s).is_symmetric());

  LeibnizAlgebra n = catalog("N", Q);
  Bimodule an = adjoint_bimodule(n);
  std::size_t e = n.index_of("e"), f = n.index_of("f");
  EXPECT_TRUE(an.right(f).at(e, f).is_one());
  EXPECT_EQ(an.right(f).nnz(), 1u);

  LeibnizAlgebra big_a = catalog("A", Q);
  Bimodule aa = adjoint_bimodule(big_a);
  std::size_t h = big_a.index_of("h"), ea = big_a.index_of("e");
  // m.h = mh is zero on the whole table; m.e = me sends h to e.
  EXPECT_TRUE(aa.right(h).is_zero());
  EXPECT_TRUE(aa.right(ea).at(ea, h).is_one());
  EXPECT_EQ(aa.right(ea).nnz(), 1u);
  EXPECT_TRUE(aa.left(h).at(ea, ea).is_one());
  EXPECT_EQ(aa.left(h).nnz(), 1u);
}

TEST(DualModule, Examples) {
  LeibnizAlgebra ab = catalog("abelian(3)", Q);
  for (const auto& m : dual_module(ab).left()) EXPECT_TRUE(m.is_zero());

  LeibnizAlgebra a = catalog("a", Q);
  LeftModule d = dual_module(a);
  std::size_t h = a.index_of("h"), e = a.index_of("e");
  EXPECT_EQ(d.left(h).at(e, e), Scalar(Q, -1));  // h.e* = -e*
  EXPECT_TRUE(d.left(h).at(h, h).is_zero());
  EXPECT_TRUE(d.left(e).at(h, e).is_one());  // e.e* = h*
  EXPECT_EQ(left_invariants(d).dim(), 1u);
}

TEST(HomModule, TrivialTargetIsDual) {
  for (const auto& name : {"a", "heisenberg", "N", "sl2"}) {
    LeibnizAlgebra l = catalog(name, Q);
    LeftModule h = hom_module(l, trivial_module(l));
    LeftModule d = dual_module(l);
    for (std::size_t i = 0; i < l.dim(); ++i) EXPECT_EQ(h.left(i), d.left(i)) << name;
  }
}

TEST(HomModule, SupersolvableWeightReductions) {
  LeibnizAlgebra big_a = catalog("A", Q);
  QuotientAlgebra q = canonical_lie(big_a);
  for (long lambda = 0; lambda < 3; ++lambda) {
    LeftModule fl = f_lambda(big_a, lambda);
    // Hom(A_Lie, F_lambda) over A_Lie is F_lambda.
    LeftModule down = descend(fl, q.projection);
    LeftModule hom_lie = hom_module(q.algebra, down);
    ASSERT_EQ(hom_lie.dim(), 1u);
    EXPECT_EQ(hom_lie.left(0).at(0, 0), Scalar(Q, lambda));
    // Hom(Leib(A), F_lambda) is F_{lambda-1}.
    LeftModule leib = sub_module(adjoint_left(big_a), leibniz_kernel(big_a));
    LeftModule hom_leib = hom_module(leib, fl);
    ASSERT_EQ(hom_leib.dim(), 1u);
    EXPECT_EQ(hom_leib.left(big_a.index_of("h")).at(0, 0), Scalar(Q, lambda - 1));
    EXPECT_TRUE(hom_leib.left(big_a.index_of("e")).is_zero());
  }
}

TEST(TensorModules, TrivialFactorIsIdentity) {
  LeibnizAlgebra s = catalog("sl2", Q);
  LeftModule l2 = sl2_irreducible(s, 2);
  LeftModule t = tensor_modules(trivial_module(s), l2);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(t.left(i), l2.left(i));
}

TEST(TensorModules, KillingPairingInvariant) {
  for (FieldSpec f : {Q, FieldSpec::prime(5), FieldSpec::prime(7)}) {
    LeibnizAlgebra s = catalog("sl2", f);
    LeftModule t = tensor_modules(sl2_irreducible(s, 2), sl2_irreducible(s, 2));
    EXPECT_EQ(left_invariants(t).dim(), 1u);
    EXPECT_EQ(invariants_oracle(t), 1u);
  }
}

TEST(TensorModules, SolvableExtension) {
  // 0 -> F_lambda -> a* (x) F_lambda -> F_{lambda-1} -> 0, invariants iff lambda = 0.
  LeibnizAlgebra a = catalog("a", Q);
  std::size_t h = a.index_of("h"), e = a.index_of("e");
  for (long lambda = 0; lambda < 4; ++lambda) {
    LeftModule t = tensor_modules(dual_module(a), f_lambda(a, lambda));
    SparseMatrix hstar = SparseMatrix::from_triplets(Q, 2, 1, {{h, 0, Scalar(Q, 1)}});
    Subspace w = Subspace::span(hstar);
    EXPECT_EQ(generated_submodule(t, hstar), w);
    LeftModule sub = sub_module(t, w), quot = quotient_module(t, w);
    EXPECT_EQ(sub.left(h).at(0, 0), Scalar(Q, lambda));
    EXPECT_TRUE(sub.left(e).is_zero());
    EXPECT_EQ(quot.left(h).at(0, 0), Scalar(Q, lambda - 1));
    EXPECT_TRUE(quot.left(e).is_zero());
    std::size_t expected = lambda == 0 ? 1 : 0;
    EXPECT_EQ(left_invariants(t).dim(), expected);
    EXPECT_EQ(invariants(symmetrize(t)).dim(), expected);
    EXPECT_EQ(invariants_oracle(t), expected);
  }
}

TEST(Invariants, Examples) {
  LeibnizAlgebra a = catalog("a", Q);
  EXPECT_EQ(invariants(antisymmetrize(adjoint_left(a))).dim(), 2u);
  EXPECT_EQ(invariants(symmetrize(f_lambda(a, 1))).dim(), 0u);
  Subspace hline = Subspace::span(SparseMatrix::from_triplets(Q, 2, 1, {{a.index_of("h"), 0, Scalar(Q, 1)}}));
  EXPECT_THROW(invariants(adjoint_bimodule(a), hline), ValidationError);
  Subspace eline = Subspace::span(SparseMatrix::from_triplets(Q, 2, 1, {{a.index_of("e"), 0, Scalar(Q, 1)}}));
  EXPECT_EQ(invariants(adjoint_bimodule(a), eline).dim(), 1u);
}

TEST(AntisymKernel, Examples) {
  LeibnizAlgebra a = catalog("a", Q);
  EXPECT_EQ(antisym_kernel(symmetrize(adjoint_left(a))).m0.dim(), 0u);
  EXPECT_EQ(antisym_kernel(trivial_bimodule(a, 3)).m0.dim(), 0u);
  LeibnizAlgebra n = catalog("N", Q);
  AntisymKernel k = antisym_kernel(adjoint_bimodule(n));
  EXPECT_EQ(k.m0, leibniz_kernel(n));
  EXPECT_EQ(k.m0.dim(), 1u);
}

TEST(HomSpace, Examples) {
  LeibnizAlgebra a = catalog("a", Q);
  EXPECT_EQ(hom_space(trivial_module(a), trivial_module(a)), 1u);

  LeibnizAlgebra l = catalog("hemi_sl2_L(2)", Q);
  LeftModule ad = adjoint_left(l);
  LeftModule leib = sub_module(ad, leibniz_kernel(l));
  EXPECT_EQ(hom_space(ad, leib), 2u);
  EXPECT_EQ(intertwiners_oracle(ad, leib), 2u);

  LeibnizAlgebra n = catalog("N", Q);
  EXPECT_EQ(hom_space(adjoint_left(n), adjoint_left(n)), intertwiners_oracle(adjoint_left(n), adjoint_left(n)));
}

TEST(HomSpace, AgreesWithKroneckerOracle) {
  for (FieldSpec f : {Q, FieldSpec::prime(5)}) {
    LeibnizAlgebra s = catalog("sl2", f);
    std::vector<LeftModule> mods{trivial_module(s), sl2_irreducible(s, 1), sl2_irreducible(s, 2), adjoint_left(s),
                                 dual_module(s)};
    for (const auto& m : mods)
      for (const auto& n : mods) EXPECT_EQ(hom_space(m, n), intertwiners_oracle(m, n));
  }
}

TEST(Sl2Irreducible, Examples) {
  LeibnizAlgebra s = catalog("sl2", Q);
  LeftModule l0 = sl2_irreducible(s, 0);
  EXPECT_EQ(l0.dim(), 1u);
  for (const auto& m : l0.left()) EXPECT_TRUE(m.is_zero());
  EXPECT_EQ(hom_space(adjoint_left(s), sl2_irreducible(s, 2)), 1u);
  FieldSpec f5 = FieldSpec::prime(5);
  LeibnizAlgebra s5 = catalog("sl2", f5);
  for (std::size_t n = 0; n < 5; ++n) EXPECT_TRUE(weight_vectors_generate(sl2_irreducible(s5, n)));
  EXPECT_THROW(sl2_irreducible(s5, 5), std::invalid_argument);
  for (std::size_t n = 0; n < 7; ++n) EXPECT_TRUE(weight_vectors_generate(sl2_irreducible(s, n)));
}

TEST(Irreducibility, TruncatedWeylModuleByEnumeration) {
  FieldSpec f3 = FieldSpec::prime(3);
  LeftModule m = truncated_weyl_module(catalog("heisenberg", f3));
  ASSERT_EQ(m.dim(), 3u);
  // Every nonzero vector, with its images under words of length <= 2, spans F_3^3.
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b)
      for (long c = 0; c < 3; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        SparseMatrix v = SparseMatrix::from_dense(f3, std::vector<std::vector<long>>{{a}, {b}, {c}}, 1);
        std::vector<SparseMatrix> words{v};
        for (const auto& x : m.left()) {
          words.push_back(x * v);
          for (const auto& y : m.left()) words.push_back(y * (x * v));
        }
        EXPECT_EQ(oracle::dense_rank(SparseMatrix::hstack(words)), 3u);
      }
}

TEST(Irreducibility, CompanionModuleHasNoRationalEigenvector) {
  LeibnizAlgebra a = catalog("a", Q);
  LeftModule m = companion_module(a);
  // Characteristic polynomial t^2 - 2; rational roots would be among +-1, +-2.
  const SparseMatrix& x = m.left(a.index_of("h"));
  for (long t : {-2, -1, 1, 2})
    EXPECT_EQ(oracle::dense_rank(x - SparseMatrix::identity(Q, 2).scaled(Scalar(Q, t))), 2u);
  EXPECT_EQ(x.at(0, 1), Scalar(Q, 2));
  EXPECT_TRUE(x.at(1, 0).is_one());
}

TEST(Annihilator, Examples) {
  LeibnizAlgebra a = catalog("a", Q);
  EXPECT_EQ(annihilator(trivial_bimodule(a)).dim(), 2u);
  Subspace ann = annihilator(symmetrize(f_lambda(a, 1)));
  EXPECT_EQ(ann, Subspace::span(SparseMatrix::from_triplets(Q, 2, 1, {{a.index_of("e"), 0, Scalar(Q, 1)}})));
  LeibnizAlgebra n = catalog("N", Q);
  EXPECT_EQ(annihilator(adjoint_bimodule(n)), leibniz_kernel(n));
}

TEST(PullbackDescend, RoundTripAndRejection) {
  LeibnizAlgebra big_a = catalog("A", Q);
  QuotientAlgebra q = canonical_lie(big_a);
  LeftModule down = descend(f_lambda(big_a, 2), q.projection);
  LeftModule up = pullback(down, q.projection);
  for (std::size_t i = 0; i < big_a.dim(); ++i) EXPECT_EQ(up.left(i), f_lambda(big_a, 2).left(i));
  // Squares act trivially on every left module, so rejection needs another ideal.
  LeibnizAlgebra a = catalog("a", Q);
  Subspace eline = Subspace::span(SparseMatrix::from_triplets(Q, 2, 1, {{a.index_of("e"), 0, Scalar(Q, 1)}}));
  QuotientAlgebra qa = quotient_algebra(a, eline);
  EXPECT_THROW(descend(adjoint_left(a), qa.projection), ValidationError);
  EXPECT_NO_THROW(descend(f_lambda(a, 3), qa.projection));
  Bimodule bs = pullback(symmetrize(down), q.projection);
  EXPECT_TRUE(bs.is_symmetric());
}

TEST(Properties, EveryConstructionPassesTheAxioms) {
  for (FieldSpec f : {Q, FieldSpec::prime(5)}) {
    for (const auto& m : bimodule_grid(f)) EXPECT_TRUE(check_bimodule(m.algebra(), m.left(), m.right()).empty());
  }
}

TEST(Properties, SymmetricInvariantsAndIrreducibles) {
  for (const auto& m : bimodule_grid(Q)) {
    Subspace inv = invariants(m);
    EXPECT_NO_THROW(sub_bimodule(m, inv));
    if (inv.dim() == 0) {
      EXPECT_TRUE(m.is_symmetric());
      EXPECT_TRUE(annihilator(m).contains(leibniz_kernel(m.algebra())));
    }
  }
}

TEST(Properties, AntisymKernelSplitsSymmetricQuotient) {
  for (const auto& m : bimodule_grid(Q)) {
    AntisymKernel k = antisym_kernel(m);
    EXPECT_TRUE(k.sub.is_antisymmetric());
    EXPECT_TRUE(k.quotient.is_symmetric());
    EXPECT_EQ(k.sub.dim() + k.quotient.dim(), m.dim());
  }
}

TEST(Properties, IrreducibleModulesHaveAllOrNothingInvariants) {
  std::vector<LeftModule> irreducible;
  LeibnizAlgebra a = catalog("a", Q), big_a = catalog("A", Q), s = catalog("sl2", Q);
  for (long lambda = 0; lambda < 3; ++lambda) {
    irreducible.push_back(f_lambda(a, lambda));
    irreducible.push_back(f_lambda(big_a, lambda));
  }
  for (std::size_t n = 0; n < 5; ++n) irreducible.push_back(sl2_irreducible(s, n));
  irreducible.push_back(companion_module(a));
  irreducible.push_back(truncated_weyl_module(catalog("heisenberg", FieldSpec::prime(3))));
  for (const auto& m : irreducible) {
    bool nontrivial = false;
    for (const auto& x : m.left()) nontrivial = nontrivial || !x.is_zero();
    Bimodule ms = symmetrize(m), ma = antisymmetrize(m);
    EXPECT_EQ(invariants(ma).dim(), m.dim());
    EXPECT_EQ(invariants(ms).dim(), nontrivial ? 0u : m.dim());
  }
}
