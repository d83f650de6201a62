#include "leibcoh/linalg.hpp"

#include <algorithm>

#include "detail/markowitz.hpp"
#include "detail/subspace_access.hpp"
#include "leibcoh/errors.hpp"

namespace leibcoh {

using detail::Echelon;
using detail::MatrixAccess;
using detail::SubspaceAccess;
using detail::SVec;

namespace {

std::size_t rank_mod_p(const detail::ModP& f, const SparseMatrix& m) {
  using E = std::uint32_t;
  auto combine = [f](SVec<E>& target, const SVec<E>& pivot, const E& pv, const E& tv, SVec<E>& out) {
    detail::sub_scaled(f, target, f.mul(tv, f.inv(pv)), pivot, out);
  };
  detail::MarkowitzRank<E> engine(m.rows(), MatrixAccess::columns(f, m), combine);
  return engine.run();
}

// Primitive integer multiple of a rational vector.
SVec<mpz_class> primitive(const SVec<mpq_class>& v) {
  mpz_class lcm = 1;
  for (const auto& e : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.val.get_den_mpz_t());
  SVec<mpz_class> out;
  out.reserve(v.size());
  mpz_class g = 0;
  for (const auto& e : v) {
    mpz_class z = e.val.get_num() * (lcm / e.val.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back({e.idx, std::move(z)});
  }
  if (g > 1)
    for (auto& e : out) mpz_divexact(e.val.get_mpz_t(), e.val.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::size_t rank_rational(const SparseMatrix& m) {
  using E = mpz_class;
  std::vector<SVec<E>> cols;
  cols.reserve(m.cols());
  detail::RatQ q;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(primitive(MatrixAccess::column(q, m, j)));
  // target <- (pv/g) target - (tv/g) pivot, then divided by its content.
  auto combine = [](SVec<E>& target, const SVec<E>& pivot, const E& pv, const E& tv, SVec<E>& out) {
    mpz_class g, a, b;
    mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), tv.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), pv.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), tv.get_mpz_t(), g.get_mpz_t());
    out.clear();
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    mpz_class content = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].idx < pivot[j].idx)) {
        out.push_back({target[i].idx, a * target[i].val});
        ++i;
      } else if (i == target.size() || pivot[j].idx < target[i].idx) {
        out.push_back({pivot[j].idx, -b * pivot[j].val});
        ++j;
      } else {
        mpz_class v = a * target[i].val;
        mpz_submul(v.get_mpz_t(), b.get_mpz_t(), pivot[j].val.get_mpz_t());
        if (sgn(v) != 0) out.push_back({target[i].idx, std::move(v)});
        ++i;
        ++j;
      }
      if (!out.empty() && content != 1) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().val.get_mpz_t());
    }
    if (content > 1)
      for (auto& e : out) mpz_divexact(e.val.get_mpz_t(), e.val.get_mpz_t(), content.get_mpz_t());
  };
  detail::MarkowitzRank<E> engine(m.rows(), std::move(cols), combine);
  return engine.run();
}

void same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    throw DimensionMismatch("subspaces live in different spaces");
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  if (m.is_zero()) return 0;
  if (m.field().is_rationals()) return rank_rational(m);
  return rank_mod_p(detail::ModP(m.field()), m);
}

Subspace kernel_basis(const SparseMatrix& m) {
  return detail::dispatch(m.field(), [&](auto f) {
    using F = decltype(f);
    using E = typename F::E;
    SparseMatrix rows = m.transpose();
    Echelon<F> ech(f, m.cols());
    for (std::size_t i = 0; i < rows.cols(); ++i) ech.insert(MatrixAccess::column(f, rows, i));
    ech.make_reduced();
    std::vector<SVec<E>> kernel(m.cols());
    for (std::uint32_t c = 0; c < m.cols(); ++c)
      if (!ech.has_pivot(c)) kernel[c].push_back({c, f.one()});
    for (std::size_t k = 0; k < ech.size(); ++k) {
      std::uint32_t p = ech.pivot(k);
      for (const auto& e : ech.vector(k))
        if (e.idx != p) kernel[e.idx].push_back({p, f.neg(e.val)});
    }
    Echelon<F> out(f, m.cols());
    for (auto& v : kernel) {
      if (v.empty()) continue;
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.idx < b.idx; });
      out.insert(v);
    }
    return SubspaceAccess::from_echelon(f, out);
  });
}

Subspace image_basis(const SparseMatrix& m) { return Subspace::span(m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  same_ambient(a, b);
  return Subspace::span(SparseMatrix::hstack({a.basis(), b.basis()}));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  same_ambient(a, b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.field(), a.ambient_dim());
  SparseMatrix coeffs = kernel_basis(b.quotient_projection() * a.basis()).basis();
  return Subspace::span(a.basis() * coeffs);
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  same_ambient(a, b);
  if (!a.contains(b)) throw ValidationError("quotient_dim: denominator not contained in numerator");
  return a.dim() - b.dim();
}

SubspaceRelation subspace_ops(const Subspace& a, const Subspace& b) {
  same_ambient(a, b);
  return {intersection(a, b), sum(a, b), a.contains(b), b.contains(a)};
}

Subspace preimage(const SparseMatrix& m, const Subspace& w) {
  if (m.rows() != w.ambient_dim() || m.field() != w.field())
    throw DimensionMismatch("preimage: subspace must live in the target of the matrix");
  return kernel_basis(w.quotient_projection() * m);
}

Subspace image_of(const SparseMatrix& m, const Subspace& v) {
  if (m.cols() != v.ambient_dim() || m.field() != v.field())
    throw DimensionMismatch("image_of: subspace must live in the source of the matrix");
  return Subspace::span(m * v.basis());
}

SparseMatrix solve(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.field() != b.field()) throw DimensionMismatch("solve: row counts differ");
  return detail::dispatch(a.field(), [&](auto f) {
    using F = decltype(f);
    using E = typename F::E;
    Echelon<F> ech(f, a.rows(), std::max<std::size_t>(a.cols(), 1));
    for (std::uint32_t j = 0; j < a.cols(); ++j) ech.insert(MatrixAccess::column(f, a, j), {{j, f.one()}});
    std::vector<SVec<E>> out(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SVec<E> combo;
      if (!ech.reduce(MatrixAccess::column(f, b, j), &combo).empty())
        throw ValidationError("solve: right-hand side outside the column space");
      out[j] = std::move(combo);
    }
    return MatrixAccess::from_columns(f, a.cols(), out);
  });
}

SparseMatrix quotient_basis(const Subspace& sub, const Subspace& quot, ComplementOrder order) {
  same_ambient(sub, quot);
  if (!sub.contains(quot)) throw ValidationError("quotient_basis: denominator not contained in numerator");
  return detail::dispatch(sub.field(), [&](auto f) {
    using F = decltype(f);
    using E = typename F::E;
    Echelon<F> ech = SubspaceAccess::load(f, quot);
    std::vector<SVec<E>> reps;
    for (std::size_t t = 0; t < sub.dim(); ++t) {
      std::size_t j = order == ComplementOrder::forward ? t : sub.dim() - 1 - t;
      SVec<E> v = MatrixAccess::column(f, sub.basis(), j);
      if (ech.insert(v)) reps.push_back(std::move(v));
    }
    return MatrixAccess::from_columns(f, sub.ambient_dim(), reps);
  });
}

SparseMatrix induced_map(const SparseMatrix& fm, const Subspace& src_sub, const Subspace& src_quot,
                         const Subspace& dst_sub, const Subspace& dst_quot, ComplementOrder order) {
  same_ambient(src_sub, src_quot);
  same_ambient(dst_sub, dst_quot);
  if (fm.cols() != src_sub.ambient_dim() || fm.rows() != dst_sub.ambient_dim() || fm.field() != src_sub.field())
    throw DimensionMismatch("induced_map: matrix shape does not match the subspaces");
  if (!dst_sub.contains(fm * src_sub.basis()))
    throw ValidationError("induced_map: image of the source subspace leaves the target subspace");
  if (!dst_quot.contains(fm * src_quot.basis()))
    throw ValidationError("induced_map: source denominator not mapped into target denominator");
  SparseMatrix src_reps = quotient_basis(src_sub, src_quot, order);
  SparseMatrix dst_reps = quotient_basis(dst_sub, dst_quot, order);
  SparseMatrix images = fm * src_reps;
  std::size_t q = dst_quot.dim();
  return detail::dispatch(fm.field(), [&](auto f) {
    using F = decltype(f);
    using E = typename F::E;
    Echelon<F> ech = SubspaceAccess::load(f, dst_quot, q + dst_reps.cols() + 1);
    for (std::uint32_t j = 0; j < dst_reps.cols(); ++j)
      ech.insert(MatrixAccess::column(f, dst_reps, j), {{static_cast<std::uint32_t>(q + j), f.one()}});
    std::vector<SVec<E>> out(images.cols());
    for (std::size_t j = 0; j < images.cols(); ++j) {
      SVec<E> combo;
      if (!ech.reduce(MatrixAccess::column(f, images, j), &combo).empty())
        throw ValidationError("induced_map: image outside target subspace");
      for (auto& e : combo)
        if (e.idx >= q) out[j].push_back({static_cast<std::uint32_t>(e.idx - q), std::move(e.val)});
    }
    return MatrixAccess::from_columns(f, dst_reps.cols(), out);
  });
}

}  // namespace leibcoh
