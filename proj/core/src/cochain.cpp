#include "leibcoh/cochain.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <future>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "detail/field_ops.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/linalg.hpp"

namespace leibcoh {

using detail::Accumulator;
using detail::MatrixAccess;
using detail::SVec;

std::size_t default_max_nnz() {
  const char* env = std::getenv("LEIBCOH_MAX_NNZ");
  if (env == nullptr || *env == '\0') return 10'000'000;
  std::size_t v = 0;
  std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("LEIBCOH_MAX_NNZ is not an integer");
  return v;
}

CochainComplex::CochainComplex(FieldSpec field, std::vector<std::size_t> dims, std::vector<SparseMatrix> d)
    : field_(field), dims_(std::move(dims)), d_(std::move(d)) {
  if (dims_.empty() || d_.size() + 1 != dims_.size()) throw DimensionMismatch("complex: need one more space than maps");
  for (std::size_t n = 0; n < d_.size(); ++n) {
    if (d_[n].field() != field_ || d_[n].cols() != dims_[n] || d_[n].rows() != dims_[n + 1])
      throw DimensionMismatch("complex: differential " + std::to_string(n) + " has the wrong shape");
  }
  for (std::size_t n = 0; n + 1 < d_.size(); ++n)
    if (!(d_[n + 1] * d_[n]).is_zero())
      throw ValidationError("complex: D_" + std::to_string(n + 1) + " D_" + std::to_string(n) + " != 0");
}

Subspace CochainComplex::cycles(std::size_t n) const { return kernel_basis(d_.at(n)); }

Subspace CochainComplex::boundaries(std::size_t n) const {
  if (n == 0) return Subspace::zero(field_, dim(0));
  return image_basis(d_.at(n - 1));
}

CohomologyTable cohomology(const CochainComplex& c) {
  std::size_t len = c.differentials().size();
  std::vector<std::future<std::size_t>> jobs;
  for (std::size_t n = 0; n < len; ++n) jobs.push_back(std::async(std::launch::async, [&c, n] { return rank(c.d(n)); }));
  CohomologyTable t;
  for (auto& j : jobs) t.ranks.push_back(j.get());
  for (std::size_t n = 0; n < len; ++n) {
    t.cochain_dims.push_back(c.dim(n));
    t.dims.push_back(c.dim(n) - t.ranks[n] - (n > 0 ? t.ranks[n - 1] : 0));
  }
  return t;
}

ComplexMap::ComplexMap(CochainComplex source, CochainComplex target, std::vector<SparseMatrix> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  if (maps_.size() != source_.top() + 1 || source_.top() != target_.top())
    throw DimensionMismatch("chain map: degree ranges differ");
  for (std::size_t n = 0; n < maps_.size(); ++n)
    if (maps_[n].rows() != target_.dim(n) || maps_[n].cols() != source_.dim(n))
      throw DimensionMismatch("chain map: map " + std::to_string(n) + " has the wrong shape");
  for (std::size_t n = 0; n < source_.top(); ++n)
    if (!(target_.d(n) * maps_[n] == maps_[n + 1] * source_.d(n)))
      throw ValidationError("chain map does not commute with the differentials in degree " + std::to_string(n));
}

std::size_t leibniz_cochain_dim(std::size_t dim_l, std::size_t dim_m, std::size_t n) {
  std::size_t out = dim_m;
  for (std::size_t i = 0; i < n; ++i) {
    if (dim_l != 0 && out > std::numeric_limits<std::size_t>::max() / dim_l)
      throw ResourceLimitExceeded("cochain space dimension overflows");
    out *= dim_l;
  }
  return out;
}

std::size_t ce_cochain_dim(std::size_t dim_l, std::size_t dim_m, std::size_t n) {
  if (n > dim_l) return 0;
  std::size_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * (dim_l - i) / (i + 1);
  return c * dim_m;
}

namespace {

constexpr std::size_t kMaxIndex = std::numeric_limits<std::uint32_t>::max();

void check_index_range(std::size_t rows, std::size_t cols) {
  if (rows > kMaxIndex || cols > kMaxIndex) throw ResourceLimitExceeded("cochain space too large for 32-bit indices");
}

// Column lists of a family of action matrices in raw field form.
template <class F>
std::vector<std::vector<SVec<typename F::E>>> raw_actions(const F& f, const std::vector<SparseMatrix>& acts) {
  std::vector<std::vector<SVec<typename F::E>>> out;
  for (const auto& a : acts) out.push_back(MatrixAccess::columns(f, a));
  return out;
}

template <class E>
struct ProductTerm {
  std::uint32_t u, v;
  E c;
};

// For each s, the pairs (u, v) with x_u x_v having an x_s component.
template <class F>
std::vector<std::vector<ProductTerm<typename F::E>>> products_by_target(const F& f, const LeibnizAlgebra& l) {
  std::vector<std::vector<ProductTerm<typename F::E>>> out(l.dim());
  for (std::size_t u = 0; u < l.dim(); ++u)
    for (std::size_t v = 0; v < l.dim(); ++v)
      for (const auto& t : l.product(u, v))
        out[t.index].push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), f.from_scalar(t.coeff)});
  return out;
}

class NnzGuard {
 public:
  explicit NnzGuard(const Budget& b) : cap_(b.max_nnz) {}
  void add(std::size_t k, std::size_t degree) {
    total_ += k;
    if (total_ > cap_)
      throw ResourceLimitExceeded("differential in degree " + std::to_string(degree) + " exceeds " +
                                  std::to_string(cap_) + " nonzeros");
  }

 private:
  std::size_t cap_;
  std::size_t total_ = 0;
};

// d^n (right != nullptr) or d~^n on CL^n(L, M).
template <class F>
SparseMatrix leibniz_coboundary(const F& f, const LeibnizAlgebra& l, std::size_t dm, const std::vector<SparseMatrix>& left,
                                const std::vector<SparseMatrix>* right, std::size_t n, const Budget& budget) {
  using E = typename F::E;
  std::size_t d = l.dim();
  std::size_t cols = leibniz_cochain_dim(d, dm, n), rows = leibniz_cochain_dim(d, dm, n + 1);
  check_index_range(rows, cols);
  auto la = raw_actions(f, left);
  std::vector<std::vector<SVec<E>>> ra;
  if (right) ra = raw_actions(f, *right);
  auto prods = products_by_target(f, l);
  Accumulator<F> acc(f, rows);
  std::vector<SVec<E>> out(cols);
  NnzGuard guard(budget);
  std::vector<std::uint32_t> j(n), a(n + 1);
  auto encode = [&](std::size_t r) {
    std::size_t idx = 0;
    for (std::uint32_t x : a) idx = idx * d + x;
    return static_cast<std::uint32_t>(idx * dm + r);
  };
  auto add_column = [&](const SVec<E>& col, bool negate) {
    std::size_t base = encode(0);
    for (const auto& e : col) acc.add(static_cast<std::uint32_t>(base + e.idx), negate ? f.neg(e.val) : e.val);
  };
  std::size_t left_positions = right ? n : n + 1;
  E one = f.one(), minus_one = f.neg(f.one());
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t k = col % dm, rest = col / dm;
    for (std::size_t p = n; p-- > 0;) {
      j[p] = static_cast<std::uint32_t>(rest % d);
      rest /= d;
    }
    // x_i . f(... x_i omitted ...), i at position p.
    for (std::size_t p = 0; p < left_positions; ++p)
      for (std::uint32_t t = 0; t < d; ++t) {
        std::copy(j.begin(), j.begin() + p, a.begin());
        a[p] = t;
        std::copy(j.begin() + p, j.end(), a.begin() + p + 1);
        add_column(la[t][k], p % 2 == 1);
      }
    // f(x_1..x_n) . x_{n+1}
    if (right) {
      std::copy(j.begin(), j.end(), a.begin());
      for (std::uint32_t t = 0; t < d; ++t) {
        a[n] = t;
        add_column(ra[t][k], n % 2 == 0);
      }
    }
    // f(.. x_i omitted .., x_i x_j at j, ..): u at position i <= q, v at q + 1.
    for (std::size_t q = 0; q < n; ++q)
      for (const auto& pt : prods[j[q]])
        for (std::size_t i = 0; i <= q; ++i) {
          std::copy(j.begin(), j.begin() + i, a.begin());
          a[i] = pt.u;
          std::copy(j.begin() + i, j.begin() + q, a.begin() + i + 1);
          a[q + 1] = pt.v;
          std::copy(j.begin() + q + 1, j.end(), a.begin() + q + 2);
          acc.addmul(encode(k), i % 2 == 0 ? minus_one : one, pt.c);
        }
    out[col] = acc.take();
    guard.add(out[col].size(), n);
  }
  return MatrixAccess::from_columns(f, rows, out);
}

// Strictly increasing n-tuples over 0..d-1 in lexicographic order.
std::vector<std::vector<std::uint32_t>> combinations(std::size_t d, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  if (n > d) return out;
  std::vector<std::uint32_t> c(n);
  std::iota(c.begin(), c.end(), 0u);
  for (;;) {
    out.push_back(c);
    std::size_t i = n;
    while (i > 0 && c[i - 1] == d - n + i - 1) --i;
    if (i == 0) return out;
    ++c[i - 1];
    for (std::size_t k = i; k < n; ++k) c[k] = c[k - 1] + 1;
  }
}

class ComboIndex {
 public:
  ComboIndex(std::size_t d, std::size_t n) : d_(d), combos_(combinations(d, n)) {
    for (std::size_t i = 0; i < combos_.size(); ++i) index_[key(combos_[i])] = static_cast<std::uint32_t>(i);
  }
  std::size_t size() const { return combos_.size(); }
  const std::vector<std::uint32_t>& operator[](std::size_t i) const { return combos_[i]; }
  std::uint32_t index(const std::vector<std::uint32_t>& c) const { return index_.at(key(c)); }

 private:
  std::uint64_t key(const std::vector<std::uint32_t>& c) const {
    std::uint64_t k = 0;
    for (auto x : c) k = k * d_ + x;
    return k;
  }
  std::size_t d_;
  std::vector<std::vector<std::uint32_t>> combos_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

template <class F>
SparseMatrix ce_coboundary_impl(const F& f, const LeftModule& m, std::size_t n, const Budget& budget) {
  using E = typename F::E;
  const LeibnizAlgebra& g = m.algebra();
  std::size_t d = g.dim(), dm = m.dim();
  ComboIndex src(d, n), dst(d, n + 1);
  std::size_t cols = src.size() * dm, rows = dst.size() * dm;
  check_index_range(rows, cols);
  auto la = raw_actions(f, m.left());
  auto prods = products_by_target(f, g);
  Accumulator<F> acc(f, rows);
  std::vector<SVec<E>> out(cols);
  NnzGuard guard(budget);
  std::vector<std::uint32_t> a;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t k = col % dm;
    const auto& jj = src[col / dm];
    // x_t . w(...): t inserted at sorted position p, sign (-1)^p.
    for (std::uint32_t t = 0; t < d; ++t) {
      if (std::binary_search(jj.begin(), jj.end(), t)) continue;
      a = jj;
      auto it = std::lower_bound(a.begin(), a.end(), t);
      std::size_t p = static_cast<std::size_t>(it - a.begin());
      a.insert(it, t);
      std::size_t base = static_cast<std::size_t>(dst.index(a)) * dm;
      for (const auto& e : la[t][k]) acc.add(static_cast<std::uint32_t>(base + e.idx), p % 2 ? f.neg(e.val) : e.val);
    }
    // w([x_u, x_v], rest) with s = J[q] the bracket component.
    for (std::size_t q = 0; q < jj.size(); ++q) {
      std::vector<std::uint32_t> rest = jj;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(q));
      for (const auto& pt : prods[jj[q]]) {
        if (pt.u >= pt.v) continue;
        if (std::binary_search(rest.begin(), rest.end(), pt.u) || std::binary_search(rest.begin(), rest.end(), pt.v))
          continue;
        a = rest;
        a.insert(std::lower_bound(a.begin(), a.end(), pt.u), pt.u);
        auto itv = std::lower_bound(a.begin(), a.end(), pt.v);
        a.insert(itv, pt.v);
        std::size_t pu = static_cast<std::size_t>(std::lower_bound(a.begin(), a.end(), pt.u) - a.begin());
        std::size_t pv = static_cast<std::size_t>(std::lower_bound(a.begin(), a.end(), pt.v) - a.begin());
        bool negative = (q + pu + pv) % 2 == 1;
        std::size_t row = static_cast<std::size_t>(dst.index(a)) * dm + k;
        acc.add(static_cast<std::uint32_t>(row), negative ? f.neg(pt.c) : pt.c);
      }
    }
    out[col] = acc.take();
    guard.add(out[col].size(), n);
  }
  return MatrixAccess::from_columns(f, rows, out);
}

// a^{(x) n} (x) I_m with tuple index slowest and module index fastest.
template <class F>
SparseMatrix tensor_power(const F& f, const SparseMatrix& a, std::size_t n, std::size_t m, const Budget& budget) {
  using E = typename F::E;
  std::size_t rows = leibniz_cochain_dim(a.rows(), m, n), cols = leibniz_cochain_dim(a.cols(), m, n);
  check_index_range(rows, cols);
  auto ac = MatrixAccess::columns(f, a);
  std::vector<SVec<E>> out(cols);
  NnzGuard guard(budget);
  std::vector<std::uint32_t> b(n);
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t k = col % m, rest = col / m;
    for (std::size_t p = n; p-- > 0;) {
      b[p] = static_cast<std::uint32_t>(rest % a.cols());
      rest /= a.cols();
    }
    // Expand the product over positions; rows come out in increasing order.
    SVec<E> partial{{0, f.one()}};
    for (std::size_t p = 0; p < n; ++p) {
      SVec<E> next;
      for (const auto& x : partial)
        for (const auto& e : ac[b[p]]) next.push_back({static_cast<std::uint32_t>(x.idx * a.rows() + e.idx), f.mul(x.val, e.val)});
      partial = std::move(next);
    }
    for (auto& x : partial) x.idx = static_cast<std::uint32_t>(x.idx * m + k);
    out[col] = std::move(partial);
    guard.add(out[col].size(), n);
  }
  return MatrixAccess::from_columns(f, rows, out);
}

CochainComplex assemble(FieldSpec f, std::size_t top, const std::function<std::size_t(std::size_t)>& dim,
                        const std::function<SparseMatrix(std::size_t)>& d) {
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> ds;
  for (std::size_t n = 0; n <= top; ++n) dims.push_back(dim(n));
  for (std::size_t n = 0; n < top; ++n) ds.push_back(d(n));
  return CochainComplex(f, std::move(dims), std::move(ds));
}

void require_lie(const LeibnizAlgebra& g, const char* what) {
  if (!is_lie(g)) throw ValidationError(std::string(what) + ": the algebra is not a Lie algebra");
}

}  // namespace

SparseMatrix coboundary_bimodule(const Bimodule& m, std::size_t n, const Budget& budget) {
  return detail::dispatch(m.field(), [&](const auto& f) {
    return leibniz_coboundary(f, m.algebra(), m.dim(), m.left(), &m.right(), n, budget);
  });
}

SparseMatrix coboundary_left(const LeftModule& m, std::size_t n, const Budget& budget) {
  return detail::dispatch(m.field(), [&](const auto& f) {
    return leibniz_coboundary(f, m.algebra(), m.dim(), m.left(), nullptr, n, budget);
  });
}

SparseMatrix ce_coboundary(const LeftModule& m, std::size_t n, const Budget& budget) {
  require_lie(m.algebra(), "ce_coboundary");
  return detail::dispatch(m.field(), [&](const auto& f) { return ce_coboundary_impl(f, m, n, budget); });
}

CochainComplex leibniz_complex(const Bimodule& m, std::size_t top, const Budget& budget) {
  std::size_t d = m.algebra().dim();
  return assemble(
      m.field(), top, [&](std::size_t n) { return leibniz_cochain_dim(d, m.dim(), n); },
      [&](std::size_t n) { return coboundary_bimodule(m, n, budget); });
}

CochainComplex left_complex(const LeftModule& m, std::size_t top, const Budget& budget) {
  std::size_t d = m.algebra().dim();
  return assemble(
      m.field(), top, [&](std::size_t n) { return leibniz_cochain_dim(d, m.dim(), n); },
      [&](std::size_t n) { return coboundary_left(m, n, budget); });
}

CochainComplex ce_complex(const LeftModule& m, std::size_t top, const Budget& budget) {
  require_lie(m.algebra(), "ce_complex");
  std::size_t d = m.algebra().dim();
  return assemble(
      m.field(), top, [&](std::size_t n) { return ce_cochain_dim(d, m.dim(), n); },
      [&](std::size_t n) { return ce_coboundary(m, n, budget); });
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::leibniz_bimodule: return "leibniz_bimodule";
    case Variant::leibniz_left: return "leibniz_left";
    case Variant::chevalley_eilenberg: return "chevalley_eilenberg";
  }
  return "?";
}

CohomologyTable cohomology(const Bimodule& m, std::size_t n_max, Variant variant, const Budget& budget) {
  switch (variant) {
    case Variant::leibniz_bimodule: return cohomology(leibniz_complex(m, n_max + 1, budget));
    case Variant::leibniz_left: return cohomology(left_complex(m.left_module(), n_max + 1, budget));
    case Variant::chevalley_eilenberg: return cohomology(ce_complex(m.left_module(), n_max + 1, budget));
  }
  throw std::invalid_argument("unknown cohomology variant");
}

Cokernel cokernel(const ComplexMap& i) {
  const CochainComplex& b = i.target();
  std::vector<Subspace> images;
  for (std::size_t n = 0; n <= i.top(); ++n) {
    Subspace s = image_basis(i.map(n));
    if (s.dim() != i.source().dim(n)) throw ValidationError("cokernel: map is not injective in degree " + std::to_string(n));
    images.push_back(std::move(s));
  }
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> proj, ds;
  for (std::size_t n = 0; n <= i.top(); ++n) {
    dims.push_back(b.dim(n) - images[n].dim());
    proj.push_back(images[n].quotient_projection());
  }
  for (std::size_t n = 0; n < i.top(); ++n) {
    if (!images[n + 1].contains(b.d(n) * images[n].basis()))
      throw ValidationError("cokernel: image is not a subcomplex in degree " + std::to_string(n));
    ds.push_back(proj[n + 1] * b.d(n) * images[n].complement_inclusion());
  }
  return {CochainComplex(b.field(), std::move(dims), std::move(ds)), std::move(proj)};
}

ComplexMap projection_map(const ComplexMap& i, const Cokernel& q) {
  return ComplexMap(i.target(), q.complex, q.projection);
}

ComplexMap ce_inclusion(const LeftModule& m, std::size_t top, const Budget& budget) {
  const LeibnizAlgebra& g = m.algebra();
  CochainComplex source = ce_complex(m, top, budget);
  CochainComplex target = leibniz_complex(symmetrize(m), top, budget);
  std::size_t d = g.dim(), dm = m.dim();
  std::vector<SparseMatrix> maps;
  for (std::size_t n = 0; n <= top; ++n) {
    ComboIndex combos(d, n);
    std::vector<SparseMatrix::Triplet> t;
    for (std::size_t c = 0; c < combos.size(); ++c) {
      std::vector<std::uint32_t> perm = combos[c];
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      do {
        std::size_t inversions = 0, idx = 0;
        for (std::size_t x = 0; x < n; ++x) {
          idx = idx * d + perm[order[x]];
          for (std::size_t y = x + 1; y < n; ++y) inversions += order[x] > order[y];
        }
        for (std::size_t k = 0; k < dm; ++k)
          t.push_back({idx * dm + k, c * dm + k, Scalar(g.field(), inversions % 2 ? -1 : 1)});
      } while (std::next_permutation(order.begin(), order.end()));
    }
    maps.push_back(SparseMatrix::from_triplets(g.field(), target.dim(n), source.dim(n), t));
  }
  return ComplexMap(std::move(source), std::move(target), std::move(maps));
}

ComplexMap epi_inclusion(const AlgebraMorphism& pi, const Bimodule& m, std::size_t top, const Budget& budget) {
  if (m.algebra().dim() != pi.target().dim()) throw DimensionMismatch("epi_inclusion: module over another algebra");
  CochainComplex source = leibniz_complex(m, top, budget);
  CochainComplex target = leibniz_complex(pullback(m, pi), top, budget);
  SparseMatrix pt = pi.matrix().transpose();
  std::vector<SparseMatrix> maps;
  for (std::size_t n = 0; n <= top; ++n)
    maps.push_back(detail::dispatch(m.field(), [&](const auto& f) { return tensor_power(f, pt, n, m.dim(), budget); }));
  return ComplexMap(std::move(source), std::move(target), std::move(maps));
}

ComplexMap exterior_dual(const LeibnizAlgebra& g, std::size_t top, const Budget& budget) {
  require_lie(g, "exterior_dual");
  std::size_t d = g.dim();
  LeftModule triv = trivial_module(g);
  CochainComplex source = assemble(
      g.field(), top, [&](std::size_t n) { return ce_cochain_dim(d, 1, n + 1); },
      [&](std::size_t n) { return ce_coboundary(triv, n + 1, budget); });
  CochainComplex target = ce_complex(dual_module(g), top, budget);
  std::vector<SparseMatrix> maps;
  for (std::size_t k = 0; k <= top; ++k) {
    ComboIndex src(d, k + 1), dst(d, k);
    std::vector<SparseMatrix::Triplet> t;
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& jj = src[c];
      for (std::size_t q = 0; q < jj.size(); ++q) {
        std::vector<std::uint32_t> rest = jj;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(q));
        // w(x_I, y) with y = J[q] moved to the end.
        long sign = (k - q) % 2 ? -1 : 1;
        t.push_back({static_cast<std::size_t>(dst.index(rest)) * d + jj[q], c, Scalar(g.field(), sign)});
      }
    }
    maps.push_back(SparseMatrix::from_triplets(g.field(), target.dim(k), source.dim(k), t));
  }
  return ComplexMap(std::move(source), std::move(target), std::move(maps));
}

namespace {

RelativeComplex relative(ComplexMap i, std::size_t shift, std::size_t n_max) {
  Cokernel q = cokernel(i);
  CohomologyTable full = cohomology(q.complex);
  CohomologyTable t;
  for (std::size_t n = 0; n <= n_max; ++n) {
    t.dims.push_back(full.dims[n + shift]);
    t.cochain_dims.push_back(full.cochain_dims[n + shift]);
    t.ranks.push_back(full.ranks[n + shift]);
  }
  return {std::move(i), std::move(q), shift, std::move(t)};
}

}  // namespace

RelativeComplex relative_epi_complex(const AlgebraMorphism& pi, const Bimodule& m, std::size_t n_max,
                                     const Budget& budget) {
  if (!pi.is_surjective()) throw ValidationError("relative_epi_complex: the morphism is not surjective");
  return relative(epi_inclusion(pi, m, n_max + 2, budget), 1, n_max);
}

RelativeComplex cr_complex(const LeibnizAlgebra& g, std::size_t n_max, const Budget& budget) {
  return relative(exterior_dual(g, n_max + 2, budget), 1, n_max);
}

RelativeComplex rel_complex(const LeftModule& m, std::size_t n_max, const Budget& budget) {
  return relative(ce_inclusion(m, n_max + 3, budget), 2, n_max);
}

BilinearForms invariant_bilinear_forms(const LeibnizAlgebra& g) {
  require_lie(g, "invariant_bilinear_forms");
  if (g.field().characteristic() == 2) throw ValidationError("invariant_bilinear_forms: characteristic 2 is not supported");
  FieldSpec f = g.field();
  std::size_t d = g.dim();
  auto pair = [d](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return a * d - a * (a + 1) / 2 + b;  // index of (a, b), a <= b
  };
  std::size_t unknowns = d * (d + 1) / 2;
  // w(xy, z) + w(y, xz) = 0 for all basis x, y, z.
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        std::size_t row = (x * d + y) * d + z;
        for (const auto& term : g.product(x, y)) t.push_back({row, pair(term.index, z), term.coeff});
        for (const auto& term : g.product(x, z)) t.push_back({row, pair(y, term.index), term.coeff});
      }
  Subspace forms = kernel_basis(SparseMatrix::from_triplets(f, d * d * d, unknowns, t));
  BilinearForms out;
  out.dim = forms.dim();
  if (d < 3 || forms.dim() == 0) return out;
  // Cartan-Koszul cochain (a < b < c) -> w(x_a x_b, x_c).
  ComboIndex triples(d, 3);
  std::vector<SparseMatrix::Triplet> ck;
  const SparseMatrix& fb = forms.basis();
  for (std::size_t c = 0; c < fb.cols(); ++c) {
    std::vector<Scalar> w(unknowns, Scalar::zero(f));
    for (std::size_t k = fb.col_begin(c); k < fb.col_end(c); ++k) w[fb.row_of(k)] = fb.value(k);
    for (std::size_t r = 0; r < triples.size(); ++r) {
      const auto& abc = triples[r];
      Scalar v = Scalar::zero(f);
      for (const auto& term : g.product(abc[0], abc[1])) v += term.coeff * w[pair(term.index, abc[2])];
      if (!v.is_zero()) ck.push_back({r, c, v});
    }
  }
  SparseMatrix ckm = SparseMatrix::from_triplets(f, triples.size(), fb.cols(), ck);
  CochainComplex trivial = ce_complex(trivial_module(g), 4);
  SparseMatrix induced = induced_map(ckm, Subspace::full(f, fb.cols()), Subspace::zero(f, fb.cols()), trivial.cycles(3),
                                     trivial.boundaries(3));
  out.cartan_koszul_rank = rank(induced);
  return out;
}

bool LesReport::exact() const {
  if (!lift_independent) return false;
  for (const auto& n : nodes)
    if (!n.exact) return false;
  return true;
}

namespace {

bool same_complex(const CochainComplex& a, const CochainComplex& b) {
  return a.dims() == b.dims() && a.differentials() == b.differentials();
}

SparseMatrix reversed_lift(const SparseMatrix& p) {
  std::vector<std::size_t> rev(p.cols());
  std::iota(rev.rbegin(), rev.rend(), 0);
  SparseMatrix x = solve(p.select_columns(rev), SparseMatrix::identity(p.field(), p.rows()));
  return x.select_rows(rev);
}

}  // namespace

LesReport les_exactness(const ComplexMap& i, const ComplexMap& p, std::size_t n_max) {
  const CochainComplex& a = i.source();
  const CochainComplex& b = i.target();
  const CochainComplex& c = p.target();
  if (!same_complex(b, p.source())) throw ValidationError("les_exactness: maps do not share the middle complex");
  if (a.top() < n_max + 2) throw DimensionMismatch("les_exactness: complexes too short for the requested degree");
  FieldSpec f = a.field();
  for (std::size_t n = 0; n <= n_max + 2; ++n) {
    bool ok = rank(i.map(n)) == a.dim(n) && rank(p.map(n)) == c.dim(n) && (p.map(n) * i.map(n)).is_zero() &&
              b.dim(n) == a.dim(n) + c.dim(n);
    if (!ok) throw ValidationError("les_exactness: not short exact in degree " + std::to_string(n));
  }
  struct Level {
    Subspace z, bd;
  };
  auto level = [](const CochainComplex& x, std::size_t n) { return Level{x.cycles(n), x.boundaries(n)}; };
  std::vector<Level> la, lb, lc;
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    la.push_back(level(a, n));
    lb.push_back(level(b, n));
    lc.push_back(level(c, n));
  }
  // delta on Z^n(C) coordinates: lift, apply D_B, pull back along i.
  auto delta = [&](std::size_t n, const SparseMatrix& lift) {
    return solve(i.map(n + 1), b.d(n) * lift * lc[n].z.basis());
  };
  std::vector<SparseMatrix> deltas;
  LesReport report;
  for (std::size_t n = 0; n <= n_max; ++n) {
    SparseMatrix s = solve(p.map(n), SparseMatrix::identity(f, c.dim(n)));
    SparseMatrix dz = delta(n, s);
    SparseMatrix dz2 = delta(n, reversed_lift(p.map(n)));
    Subspace img1 = sum(image_basis(dz), la[n + 1].bd), img2 = sum(image_basis(dz2), la[n + 1].bd);
    if (!(img1 == img2)) report.lift_independent = false;
    deltas.push_back(std::move(dz));
  }
  auto h = [](const Level& l) { return l.z.dim() - l.bd.dim(); };
  for (std::size_t n = 0; n <= n_max; ++n) {
    // H^n(A): in delta^{n-1}, out i_*.
    {
      Subspace im = n == 0 ? la[n].bd : sum(image_basis(deltas[n - 1]), la[n].bd);
      Subspace ker = intersection(preimage(i.map(n), lb[n].bd), la[n].z);
      std::size_t out_rank = rank(induced_map(i.map(n), la[n].z, la[n].bd, lb[n].z, lb[n].bd));
      bool exact = im == ker && out_rank == la[n].z.dim() - ker.dim();
      report.nodes.push_back({'A', n, h(la[n]), im.dim() - la[n].bd.dim(), out_rank, exact});
    }
    // H^n(B): in i_*, out p_*.
    {
      Subspace im = sum(image_of(i.map(n), la[n].z), lb[n].bd);
      Subspace ker = intersection(preimage(p.map(n), lc[n].bd), lb[n].z);
      std::size_t in_rank = rank(induced_map(i.map(n), la[n].z, la[n].bd, lb[n].z, lb[n].bd));
      std::size_t out_rank = rank(induced_map(p.map(n), lb[n].z, lb[n].bd, lc[n].z, lc[n].bd));
      bool exact = im == ker && in_rank == im.dim() - lb[n].bd.dim() && out_rank == lb[n].z.dim() - ker.dim();
      report.nodes.push_back({'B', n, h(lb[n]), in_rank, out_rank, exact});
    }
    // H^n(C): in p_*, out delta^n.
    {
      Subspace im = sum(image_of(p.map(n), lb[n].z), lc[n].bd);
      Subspace ker_coords = preimage(deltas[n], la[n + 1].bd);
      Subspace ker = image_of(lc[n].z.basis(), ker_coords);
      Subspace bd_coords = Subspace::span(lc[n].z.coordinates(lc[n].bd.basis()));
      std::size_t delta_rank = rank(induced_map(deltas[n], Subspace::full(f, lc[n].z.dim()), bd_coords, la[n + 1].z,
                                                la[n + 1].bd));
      std::size_t in_rank = rank(induced_map(p.map(n), lb[n].z, lb[n].bd, lc[n].z, lc[n].bd));
      bool exact = im == ker && delta_rank == lc[n].z.dim() - ker.dim();
      report.nodes.push_back({'C', n, h(lc[n]), in_rank, delta_rank, exact});
      report.connecting_ranks.push_back(delta_rank);
    }
  }
  return report;
}

ShiftReport antisym_shift_check(const LeftModule& m, std::size_t n_max, const Budget& budget) {
  ShiftReport r;
  CohomologyTable lhs = cohomology(antisymmetrize(m), n_max, Variant::leibniz_bimodule, budget);
  r.lhs = lhs.dims;
  r.rhs.push_back(m.dim());
  if (n_max > 0) {
    CohomologyTable rhs = cohomology(symmetrize(hom_module(m.algebra(), m)), n_max - 1, Variant::leibniz_bimodule, budget);
    r.rhs.insert(r.rhs.end(), rhs.dims.begin(), rhs.dims.end());
  }
  r.ok = r.lhs == r.rhs;
  return r;
}

ShiftReport coadj_shift_check(const LeibnizAlgebra& l, std::size_t n_max, const Budget& budget) {
  ShiftReport r;
  CohomologyTable lhs = cohomology(trivial_bimodule(l), n_max, Variant::leibniz_bimodule, budget);
  r.lhs = lhs.dims;
  r.rhs.push_back(lhs.dims[0]);
  if (n_max > 0) {
    CohomologyTable rhs = cohomology(symmetrize(dual_module(l)), n_max - 1, Variant::leibniz_bimodule, budget);
    r.rhs.insert(r.rhs.end(), rhs.dims.begin(), rhs.dims.end());
  }
  r.ok = r.lhs == r.rhs;
  return r;
}

}  // namespace leibcoh
