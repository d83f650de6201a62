#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/linalg.hpp"
#include "random_matrix.hpp"

using namespace leibcoh;

namespace {

const FieldSpec Q = FieldSpec::rationals();

SparseMatrix dense(FieldSpec f, std::vector<std::vector<long>> rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return SparseMatrix::from_dense(f, rows, cols);
}

}  // namespace

TEST(Scalar, RationalsAreCanonical) {
  Scalar a = Scalar::parse(Q, "6/-4");
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(a.rational().get_den(), 2);
  Scalar b = Scalar::parse(Q, "-0.75");
  EXPECT_EQ(b.to_string(), "-3/4");
  EXPECT_EQ((a * b).to_string(), "9/8");
  EXPECT_EQ((a / a).to_string(), "1");
  EXPECT_THROW(Scalar::parse(Q, "1/0"), ParseError);
  EXPECT_THROW(Scalar::parse(Q, "x"), ParseError);
}

TEST(Scalar, ResiduesStayInRange) {
  FieldSpec f5 = FieldSpec::prime(5);
  Scalar a(f5, -7);
  EXPECT_EQ(a.residue(), 3u);
  EXPECT_EQ(Scalar::parse(f5, "1/2").residue(), 3u);
  EXPECT_EQ((a * a.inverse()).residue(), 1u);
  EXPECT_EQ((-Scalar::zero(f5)).residue(), 0u);
  EXPECT_THROW(Scalar::parse(f5, "1/5"), ParseError);
  EXPECT_THROW(FieldSpec::prime(9), std::invalid_argument);
  EXPECT_EQ(FieldSpec::parse("F7").characteristic(), 7u);
  EXPECT_EQ(FieldSpec::parse("Q").characteristic(), 0u);
  EXPECT_THROW(a + Scalar(Q, 1), DimensionMismatch);
}

TEST(SparseMatrix, NoStoredZerosAndSortedRows) {
  std::vector<SparseMatrix::Triplet> t = {{2, 0, Scalar(Q, 1)}, {0, 0, Scalar(Q, 2)}, {2, 0, Scalar(Q, -1)}};
  SparseMatrix m = SparseMatrix::from_triplets(Q, 3, 1, t);
  ASSERT_EQ(m.nnz(), 1u);
  EXPECT_EQ(m.row_of(0), 0u);
  EXPECT_EQ(m.at(0, 0).to_string(), "2");
  EXPECT_TRUE(m.at(2, 0).is_zero());
}

TEST(SparseMatrix, ProductTransposeAndStacks) {
  SparseMatrix a = dense(Q, {{1, 2}, {0, 1}, {3, 0}});
  SparseMatrix b = dense(Q, {{1, 0, 1}, {2, 1, 0}});
  EXPECT_EQ(a * b, dense(Q, {{5, 2, 1}, {2, 1, 0}, {3, 0, 3}}));
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(SparseMatrix::hstack({a, a}).cols(), 4u);
  EXPECT_EQ(SparseMatrix::vstack({a, a}).rows(), 6u);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Rank, IdentityAndZero) {
  EXPECT_EQ(rank(SparseMatrix::identity(Q, 3)), 3u);
  EXPECT_EQ(rank(SparseMatrix(Q, 4, 7)), 0u);
}

TEST(Rank, SparseAgreesWithDenseOracleOverQ) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> size(1, 60);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = size(rng), c = size(rng);
    SparseMatrix m = trial % 2 ? testutil::random_matrix(rng, Q, r, c, 0.15)
                               : testutil::random_low_rank(rng, Q, r, c, std::min(r, c) / 2 + 1, 0.4);
    ASSERT_EQ(rank(m), oracle::bareiss_rank(m)) << "trial " << trial;
  }
}

TEST(Rank, SparseAgreesWithDenseOracleAt200) {
  std::mt19937_64 rng(7);
  for (FieldSpec f : {Q, FieldSpec::prime(5), FieldSpec::prime(2)}) {
    SparseMatrix a = testutil::random_low_rank(rng, f, 200, 200, 150, 0.02);
    SparseMatrix b = testutil::random_matrix(rng, f, 200, 200, 0.01);
    EXPECT_EQ(rank(a), oracle::dense_rank(a)) << f.name();
    EXPECT_EQ(rank(b), oracle::dense_rank(b)) << f.name();
  }
}

TEST(Rank, SparseAgreesWithDenseOracleModP) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> size(1, 80);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 2147483647u}) {
    FieldSpec f = FieldSpec::prime(p);
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t r = size(rng), c = size(rng);
      SparseMatrix m = trial % 2 ? testutil::random_matrix(rng, f, r, c, 0.1)
                                 : testutil::random_low_rank(rng, f, r, c, std::min(r, c) / 3 + 1, 0.3);
      ASSERT_EQ(rank(m), oracle::dense_rank_mod_p(m)) << "p=" << p << " trial " << trial;
    }
  }
}

TEST(Kernel, TrivialCases) {
  EXPECT_EQ(kernel_basis(SparseMatrix::identity(Q, 4)).dim(), 0u);
  EXPECT_EQ(kernel_basis(SparseMatrix(Q, 3, 5)), Subspace::full(Q, 5));
}

TEST(Kernel, MultiplyBackOverF3) {
  FieldSpec f3 = FieldSpec::prime(3);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    SparseMatrix m = testutil::random_matrix(rng, f3, 5, 8, 0.5);
    Subspace k = kernel_basis(m);
    EXPECT_TRUE((m * k.basis()).is_zero());
    EXPECT_EQ(k.dim() + rank(m), 8u);
  }
}

TEST(Kernel, RankNullityOverQ) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    SparseMatrix m = testutil::random_low_rank(rng, Q, 12, 15, 6, 0.4);
    Subspace k = kernel_basis(m);
    EXPECT_TRUE((m * k.basis()).is_zero());
    EXPECT_EQ(k.dim() + rank(m), 15u);
  }
}

TEST(Image, IdentityAndDuplicateColumns) {
  EXPECT_EQ(image_basis(SparseMatrix::identity(Q, 4)), Subspace::full(Q, 4));
  SparseMatrix m = dense(Q, {{1, 1, 0, 0}, {2, 2, 1, 1}, {0, 0, 3, 3}});
  EXPECT_EQ(image_basis(m).dim(), 2u);
}

TEST(Subspace, CanonicalFormIsUnique) {
  SparseMatrix a = dense(Q, {{1, 0}, {2, 1}, {3, 1}});
  SparseMatrix b = dense(Q, {{2, 1}, {5, 3}, {7, 4}});
  Subspace sa = Subspace::span(a), sb = Subspace::span(b);
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(sa.pivots(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(sa.contains(b));
  EXPECT_EQ(sa.coordinates(b).cols(), 2u);
}

TEST(SubspaceOps, IdempotenceAndZero) {
  std::mt19937_64 rng(5);
  Subspace a = Subspace::span(testutil::random_matrix(rng, Q, 6, 3, 0.7));
  Subspace zero = Subspace::zero(Q, 6);
  EXPECT_EQ(intersection(a, a), a);
  EXPECT_EQ(sum(a, a), a);
  EXPECT_EQ(intersection(a, zero), zero);
  EXPECT_EQ(sum(a, zero), a);
  EXPECT_EQ(quotient_dim(a, zero), a.dim());
}

TEST(SubspaceOps, ModularLawAgainstEchelonOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    SparseMatrix ma = testutil::random_matrix(rng, Q, 5, 3, 0.6, 2);
    SparseMatrix mb = testutil::random_matrix(rng, Q, 5, 3, 0.6, 2);
    Subspace a = Subspace::span(ma), b = Subspace::span(mb);
    auto rel = subspace_ops(a, b);
    // Oracle: dim(A+B) from the dense rank of the stacked generators.
    std::size_t sum_dim = oracle::bareiss_rank(SparseMatrix::hstack({ma, mb}));
    EXPECT_EQ(rel.sum.dim(), sum_dim);
    EXPECT_EQ(a.dim(), oracle::bareiss_rank(ma));
    EXPECT_EQ(a.dim() + b.dim(), rel.intersection.dim() + rel.sum.dim());
    EXPECT_TRUE(a.contains(rel.intersection));
    EXPECT_TRUE(b.contains(rel.intersection));
    EXPECT_TRUE(rel.sum.contains(a));
  }
}

TEST(SubspaceOps, QuotientDimRejectsNonSubspace) {
  Subspace a = Subspace::span(dense(Q, {{1}, {0}}));
  Subspace b = Subspace::span(dense(Q, {{0}, {1}}));
  EXPECT_THROW(quotient_dim(a, b), ValidationError);
}

TEST(Preimage, TrivialCases) {
  std::mt19937_64 rng(23);
  SparseMatrix m = testutil::random_matrix(rng, Q, 6, 7, 0.3);
  EXPECT_EQ(preimage(m, Subspace::full(Q, 6)), Subspace::full(Q, 7));
  EXPECT_EQ(preimage(m, Subspace::zero(Q, 6)), kernel_basis(m));
  EXPECT_THROW(preimage(m, Subspace::full(Q, 5)), DimensionMismatch);
}

TEST(Preimage, MembershipOracleOverF5) {
  FieldSpec f5 = FieldSpec::prime(5);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    SparseMatrix m = testutil::random_matrix(rng, f5, 7, 6, 0.35);
    Subspace w = Subspace::span(testutil::random_matrix(rng, f5, 7, 3, 0.5));
    Subspace pre = preimage(m, w);
    EXPECT_TRUE(w.contains(m * pre.basis()));
    EXPECT_TRUE(pre.contains(kernel_basis(m)));
    // dim preimage = dim ker + dim(im M ∩ W)
    EXPECT_EQ(pre.dim(), kernel_basis(m).dim() + intersection(image_basis(m), w).dim());
  }
}

TEST(Solve, RecoversRightHandSide) {
  std::mt19937_64 rng(31);
  SparseMatrix a = testutil::random_low_rank(rng, Q, 8, 6, 4, 0.5);
  SparseMatrix b = a * testutil::random_matrix(rng, Q, 6, 3, 0.5);
  EXPECT_EQ(a * solve(a, b), b);
  EXPECT_THROW(solve(SparseMatrix(Q, 2, 1), SparseMatrix::identity(Q, 2)), ValidationError);
}

TEST(InducedMap, IdentityAndZero) {
  std::mt19937_64 rng(37);
  Subspace sub = Subspace::span(testutil::random_matrix(rng, Q, 6, 4, 0.6));
  Subspace quot = Subspace::span(sub.basis().select_columns(std::vector<std::size_t>{0}));
  std::size_t d = sub.dim() - quot.dim();
  SparseMatrix id = induced_map(SparseMatrix::identity(Q, 6), sub, quot, sub, quot);
  EXPECT_EQ(id, SparseMatrix::identity(Q, d));
  SparseMatrix zero = induced_map(SparseMatrix(Q, 6, 6), sub, quot, sub, quot);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.rows(), d);
}

TEST(InducedMap, RejectsMapsThatLeaveTheSubspace) {
  Subspace line = Subspace::span(dense(Q, {{1}, {0}}));
  Subspace zero = Subspace::zero(Q, 2);
  SparseMatrix swap = dense(Q, {{0, 1}, {1, 0}});
  EXPECT_THROW(induced_map(swap, line, zero, line, zero), ValidationError);
  Subspace full = Subspace::full(Q, 2);
  EXPECT_THROW(induced_map(swap, full, line, full, line), ValidationError);
}

TEST(InducedMap, RankIndependentOfComplementOrder) {
  std::mt19937_64 rng(41);
  FieldSpec f7 = FieldSpec::prime(7);
  for (int trial = 0; trial < 20; ++trial) {
    SparseMatrix f = testutil::random_matrix(rng, f7, 6, 6, 0.4);
    Subspace src = Subspace::full(f7, 6);
    Subspace q = Subspace::span(testutil::random_matrix(rng, f7, 6, 2, 0.6));
    Subspace dq = image_of(f, q);
    SparseMatrix fwd = induced_map(f, src, q, Subspace::full(f7, 6), dq, ComplementOrder::forward);
    SparseMatrix rev = induced_map(f, src, q, Subspace::full(f7, 6), dq, ComplementOrder::reverse);
    EXPECT_EQ(rank(fwd), rank(rev));
  }
}
