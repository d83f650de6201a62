#include "leibcoh/spectral.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "leibcoh/errors.hpp"
#include "leibcoh/linalg.hpp"

namespace leibcoh {

FilteredComplex::FilteredComplex(CochainComplex complex, std::vector<std::vector<Subspace>> levels)
    : complex_(std::move(complex)), levels_(std::move(levels)) {
  if (levels_.size() != complex_.top() + 1) throw DimensionMismatch("filtration: one list of levels per degree");
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    const auto& lv = levels_[n];
    for (std::size_t p = 0; p < lv.size(); ++p) {
      if (lv[p].ambient_dim() != complex_.dim(n))
        throw DimensionMismatch("filtration: level (" + std::to_string(p) + ", " + std::to_string(n) + ") has the wrong ambient space");
      if (p == 0 && lv[0].dim() != complex_.dim(n))
        throw ValidationError("filtration: F^0 is not the whole space in degree " + std::to_string(n));
      if (p > 0 && !lv[p - 1].contains(lv[p]))
        throw ValidationError("filtration: not decreasing at (p, n) = (" + std::to_string(p) + ", " + std::to_string(n) + ")");
    }
  }
  for (std::size_t n = 0; n < complex_.top(); ++n)
    for (std::size_t p = 0; p < levels_[n].size(); ++p)
      if (!level(n + 1, static_cast<long>(p)).contains(complex_.d(n) * levels_[n][p].basis()))
        throw ValidationError("filtration: D does not preserve F^p at (p, n) = (" + std::to_string(p) + ", " +
                              std::to_string(n) + ")");
}

Subspace FilteredComplex::level(std::size_t n, long p) const {
  std::size_t dim = complex_.dim(n);
  if (p < 0) return Subspace::full(complex_.field(), dim);
  const auto& lv = levels_.at(n);
  if (static_cast<std::size_t>(p) >= lv.size()) return Subspace::zero(complex_.field(), dim);
  return lv[static_cast<std::size_t>(p)];
}

const PageEntry* PageTable::at(long p, long q) const {
  for (const auto& e : entries)
    if (e.p == p && e.q == q) return &e;
  return nullptr;
}

std::size_t PageTable::dim(long p, long q) const {
  const PageEntry* e = at(p, q);
  return e ? e->dim : 0;
}

namespace {

// Z_r, B_r and the resulting page pieces, memoized per (n, p) for one r.
class PageBuilder {
 public:
  // r < 0 stands for r = infinity.
  PageBuilder(const FilteredComplex& fc, long r) : fc_(fc), r_(r) {}

  const Subspace& z(std::size_t n, long p) {
    auto key = std::make_pair(n, p);
    auto it = z_.find(key);
    if (it != z_.end()) return it->second;
    const CochainComplex& c = fc_.complex();
    Subspace target = r_ < 0 ? Subspace::zero(c.field(), c.dim(n + 1)) : fc_.level(n + 1, p + r_);
    Subspace out = intersection(fc_.level(n, p), preimage(c.d(n), target));
    return z_.emplace(key, std::move(out)).first->second;
  }

  const Subspace& b(std::size_t n, long p) {
    auto key = std::make_pair(n, p);
    auto it = b_.find(key);
    if (it != b_.end()) return it->second;
    const CochainComplex& c = fc_.complex();
    Subspace out = Subspace::zero(c.field(), c.dim(n));
    if (n > 0) {
      Subspace src = r_ < 0 ? Subspace::full(c.field(), c.dim(n - 1)) : fc_.level(n - 1, p - r_ + 1);
      out = intersection(fc_.level(n, p), image_of(c.d(n - 1), src));
    }
    return b_.emplace(key, std::move(out)).first->second;
  }

  std::size_t dim(std::size_t n, long p) {
    Subspace next = fc_.level(n, p + 1);
    return sum(z(n, p), next).dim() - sum(b(n, p), next).dim();
  }

  // rank of d_r: E_r^{p} (degree n) -> E_r^{p+r} (degree n + 1).
  std::size_t d_rank(std::size_t n, long p, ComplementOrder order) {
    const CochainComplex& c = fc_.complex();
    const Subspace& zs = z(n, p);
    Subspace src_quot = intersection(zs, sum(b(n, p), fc_.level(n, p + 1)));
    Subspace next = fc_.level(n + 1, p + r_ + 1);
    Subspace dst_sub = sum(z(n + 1, p + r_), next);
    Subspace dst_quot = sum(b(n + 1, p + r_), next);
    return rank(induced_map(c.d(n), zs, src_quot, dst_sub, dst_quot, order));
  }

 private:
  const FilteredComplex& fc_;
  long r_;
  std::map<std::pair<std::size_t, long>, Subspace> z_, b_;
};

void require_top(const FilteredComplex& fc, std::size_t n_max) {
  if (fc.top() < n_max + 2) throw DimensionMismatch("pages: filtered complex too short for the requested degree");
}

}  // namespace

std::vector<PageTable> pages(const FilteredComplex& fc, std::size_t r_max, std::size_t n_max) {
  require_top(fc, n_max);
  std::vector<PageTable> out;
  for (std::size_t r = 0; r <= r_max; ++r) {
    PageBuilder pb(fc, static_cast<long>(r));
    PageTable t;
    t.r = r;
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t p = 0; p < fc.length(n); ++p) {
        long lp = static_cast<long>(p);
        std::size_t rk = pb.d_rank(n, lp, ComplementOrder::forward);
        if (rk != pb.d_rank(n, lp, ComplementOrder::reverse))
          throw std::logic_error("pages: d_" + std::to_string(r) + " rank depends on the chosen representatives");
        t.entries.push_back({lp, static_cast<long>(n) - lp, pb.dim(n, lp), rk});
      }
    out.push_back(std::move(t));
  }
  for (std::size_t r = 0; r + 1 < out.size(); ++r) {
    const PageTable& cur = out[r];
    long lr = static_cast<long>(r);
    for (const auto& e : out[r + 1].entries) {
      const PageEntry* here = cur.at(e.p, e.q);
      const PageEntry* in = cur.at(e.p - lr, e.q + lr - 1);
      std::size_t expect = here->dim - here->d_rank - (in ? in->d_rank : 0);
      if (e.dim != expect)
        throw std::logic_error("pages: E_" + std::to_string(r + 1) + " does not match the homology of E_" +
                               std::to_string(r) + " at (" + std::to_string(e.p) + ", " + std::to_string(e.q) + ")");
    }
  }
  return out;
}

PageTable infinity_page(const FilteredComplex& fc, std::size_t n_max) {
  require_top(fc, n_max);
  PageBuilder pb(fc, -1);
  PageTable t;
  t.infinite = true;
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t p = 0; p < fc.length(n); ++p) {
      long lp = static_cast<long>(p);
      t.entries.push_back({lp, static_cast<long>(n) - lp, pb.dim(n, lp), 0});
    }
  return t;
}

namespace {

std::size_t power(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

// Cokernel degrees shift..shift+top as a complex in degrees 0..top.
CochainComplex shifted(const CochainComplex& c, std::size_t shift) {
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> ds;
  for (std::size_t n = shift; n <= c.top(); ++n) dims.push_back(c.dim(n));
  for (std::size_t n = shift; n < c.top(); ++n) ds.push_back(c.d(n));
  return CochainComplex(c.field(), std::move(dims), std::move(ds));
}

// F^0..F^k where F^p is the common kernel of row blocks 0..p-1, projected to
// the cokernel.
std::vector<Subspace> levels_from_blocks(FieldSpec f, const std::vector<SparseMatrix>& blocks,
                                         const SparseMatrix& projection) {
  std::vector<Subspace> out{Subspace::full(f, projection.rows())};
  std::vector<SparseMatrix> rows;
  for (const auto& blk : blocks) {
    rows.push_back(blk);
    Subspace k = kernel_basis(SparseMatrix::vstack(rows));
    out.push_back(image_of(projection, k));
  }
  return out;
}

}  // namespace

FilteredComplex filtration_rel(const LeftModule& m, std::size_t n_max, const Budget& budget) {
  const std::size_t shift = 2, top = n_max + 2;
  ComplexMap i = ce_inclusion(m, top + shift, budget);
  Cokernel q = cokernel(i);
  FieldSpec f = m.field();
  std::size_t d = m.algebra().dim(), dm = m.dim();
  std::vector<std::vector<Subspace>> levels;
  for (std::size_t n = 0; n <= top; ++n) {
    std::size_t args = n + shift;
    std::size_t ambient = leibniz_cochain_dim(d, dm, args);
    // Block s: c vanishes on x (x) x in positions (s, s+1).
    std::vector<SparseMatrix> blocks;
    for (std::size_t s = 0; s + 1 <= n + 1; ++s) {
      std::vector<SparseMatrix::Triplet> t;
      std::size_t row = 0;
      std::size_t pre = power(d, s), post = power(d, args - s - 2);
      for (std::size_t a0 = 0; a0 < pre; ++a0)
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = a; b < d; ++b)
            for (std::size_t c0 = 0; c0 < post; ++c0)
              for (std::size_t k = 0; k < dm; ++k, ++row) {
                std::size_t ab = ((a0 * d + a) * d + b) * post + c0, ba = ((a0 * d + b) * d + a) * post + c0;
                t.push_back({row, ab * dm + k, Scalar::one(f)});
                if (a != b) t.push_back({row, ba * dm + k, Scalar::one(f)});
              }
      blocks.push_back(SparseMatrix::from_triplets(f, row, ambient, t));
    }
    levels.push_back(levels_from_blocks(f, blocks, q.projection[n + shift]));
  }
  return FilteredComplex(shifted(q.complex, shift), std::move(levels));
}

Bimodule descend_bimodule(const Bimodule& m, const QuotientAlgebra& q) {
  const AlgebraMorphism& pi = q.projection;
  if (m.algebra().dim() != pi.source().dim()) throw DimensionMismatch("descend_bimodule: module over another algebra");
  FieldSpec f = m.field();
  auto combine = [&](const std::vector<SparseMatrix>& acts, const SparseMatrix& x, std::size_t col) {
    SparseMatrix out(f, m.dim(), m.dim());
    for (std::size_t k = x.col_begin(col); k < x.col_end(col); ++k) out = out + acts[x.row_of(k)].scaled(x.value(k));
    return out;
  };
  Subspace ker = kernel_basis(pi.matrix());
  for (std::size_t c = 0; c < ker.dim(); ++c)
    if (!combine(m.left(), ker.basis(), c).is_zero() || !combine(m.right(), ker.basis(), c).is_zero())
      throw ValidationError("descend_bimodule: kernel of the projection acts nontrivially");
  SparseMatrix lift = solve(pi.matrix(), SparseMatrix::identity(f, pi.target().dim()));
  std::vector<SparseMatrix> left, right;
  for (std::size_t b = 0; b < pi.target().dim(); ++b) {
    left.push_back(combine(m.left(), lift, b));
    right.push_back(combine(m.right(), lift, b));
  }
  return Bimodule(pi.target(), m.dim(), std::move(left), std::move(right));
}

FilteredComplex filtration_ideal(const Bimodule& m, const Subspace& ideal, std::size_t n_max, const Budget& budget) {
  const LeibnizAlgebra& l = m.algebra();
  FieldSpec f = m.field();
  if (ideal.ambient_dim() != l.dim()) throw DimensionMismatch("filtration_ideal: ideal lives in another space");
  if (!is_two_sided_ideal(l, ideal)) throw ValidationError("filtration_ideal: I is not a two-sided ideal");
  if (!left_center(l).contains(ideal)) throw ValidationError("filtration_ideal: I is not in the left center");
  const SparseMatrix& ib = ideal.basis();
  auto acts_trivially = [&](const std::vector<SparseMatrix>& acts) {
    for (std::size_t c = 0; c < ib.cols(); ++c) {
      SparseMatrix out(f, m.dim(), m.dim());
      for (std::size_t k = ib.col_begin(c); k < ib.col_end(c); ++k) out = out + acts[ib.row_of(k)].scaled(ib.value(k));
      if (!out.is_zero()) return false;
    }
    return true;
  };
  if (!acts_trivially(m.left())) throw ValidationError("filtration_ideal: I acts nontrivially on M from the left");
  if (!acts_trivially(m.right())) throw ValidationError("filtration_ideal: I acts nontrivially on M from the right");

  const std::size_t shift = 1, top = n_max + 2;
  QuotientAlgebra q = quotient_algebra(l, ideal);
  ComplexMap i = epi_inclusion(q.projection, descend_bimodule(m, q), top + shift, budget);
  Cokernel coker = cokernel(i);
  std::size_t d = l.dim(), dm = m.dim();
  std::vector<std::vector<Subspace>> levels;
  for (std::size_t n = 0; n <= top; ++n) {
    std::size_t args = n + shift;
    std::size_t ambient = leibniz_cochain_dim(d, dm, args);
    // Block s: c vanishes when argument s lies in I.
    std::vector<SparseMatrix> blocks;
    for (std::size_t s = 0; s < args; ++s) {
      std::vector<SparseMatrix::Triplet> t;
      std::size_t row = 0;
      std::size_t pre = power(d, s), post = power(d, args - s - 1);
      for (std::size_t a0 = 0; a0 < pre; ++a0)
        for (std::size_t c = 0; c < ib.cols(); ++c)
          for (std::size_t c0 = 0; c0 < post; ++c0)
            for (std::size_t k = 0; k < dm; ++k, ++row)
              for (std::size_t e = ib.col_begin(c); e < ib.col_end(c); ++e) {
                std::size_t idx = (a0 * d + ib.row_of(e)) * post + c0;
                t.push_back({row, idx * dm + k, ib.value(e)});
              }
      blocks.push_back(SparseMatrix::from_triplets(f, row, ambient, t));
    }
    levels.push_back(levels_from_blocks(f, blocks, coker.projection[n + shift]));
  }
  return FilteredComplex(shifted(coker.complex, shift), std::move(levels));
}

namespace {

E2Report compare_e2(const PageTable& e2, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                    std::size_t n_max) {
  E2Report rep;
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t p = 0; p <= n; ++p) {
      std::size_t qq = n - p;
      std::size_t formula = rows[p] * cols[qq];
      std::size_t computed = e2.dim(static_cast<long>(p), static_cast<long>(qq));
      rep.entries.push_back({static_cast<long>(p), static_cast<long>(qq), computed, formula});
      if (computed != formula) rep.ok = false;
    }
  return rep;
}

}  // namespace

E2Report e2_check_rel(const LeftModule& m, std::size_t n_max, const Budget& budget) {
  FilteredComplex fc = filtration_rel(m, n_max, budget);
  PageTable e2 = pages(fc, 2, n_max).back();
  auto hr = cr_complex(m.algebra(), n_max, budget).table.dims;
  auto hl = cohomology(symmetrize(m), n_max, Variant::leibniz_bimodule, budget).dims;
  return compare_e2(e2, hr, hl, n_max);
}

E2Report e2_check_ideal(const Bimodule& m, const Subspace& ideal, std::size_t n_max, const Budget& budget) {
  FilteredComplex fc = filtration_ideal(m, ideal, n_max, budget);
  PageTable e2 = pages(fc, 2, n_max).back();
  const LeibnizAlgebra& l = m.algebra();
  QuotientAlgebra q = quotient_algebra(l, ideal);
  LeftModule i_mod = descend(sub_module(adjoint_left(l), ideal), q.projection);
  LeftModule i_dual = hom_module(i_mod, trivial_module(q.algebra));
  auto rows = cohomology(symmetrize(i_dual), n_max, Variant::leibniz_bimodule, budget).dims;
  auto cols = cohomology(m, n_max, Variant::leibniz_bimodule, budget).dims;
  return compare_e2(e2, rows, cols, n_max);
}

ConvergenceReport convergence_check(const FilteredComplex& fc, const CohomologyTable& target, std::size_t n_max) {
  PageTable inf = infinity_page(fc, n_max);
  ConvergenceReport rep;
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::size_t s = 0;
    for (const auto& e : inf.entries)
      if (e.p + e.q == static_cast<long>(n)) s += e.dim;
    rep.sums.push_back(s);
    rep.target.push_back(n < target.dims.size() ? target.dims[n] : 0);
    if (n >= target.dims.size() || s != target.dims[n]) rep.ok = false;
  }
  return rep;
}

}  // namespace leibcoh
