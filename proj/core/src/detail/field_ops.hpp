#pragma once

// Field-specialised element types used inside the kernels.  Public types
// hold Scalars; hot loops work on raw residues or mpq_class values.

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "leibcoh/errors.hpp"
#include "leibcoh/field.hpp"
#include "leibcoh/sparse_matrix.hpp"

namespace leibcoh::detail {

template <class E>
struct Entry {
  std::uint32_t idx;
  E val;
};

template <class E>
using SVec = std::vector<Entry<E>>;

struct ModP {
  using E = std::uint32_t;

  explicit ModP(FieldSpec f) : p(f.p()), spec(f) {}

  std::uint32_t p;
  FieldSpec spec;

  FieldSpec field() const { return spec; }
  static bool is_zero(E a) { return a == 0; }
  E zero() const { return 0; }
  E one() const { return 1 % p; }
  E add(E a, E b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  E sub(E a, E b) const { return a >= b ? a - b : a + (p - b); }
  E neg(E a) const { return a == 0 ? 0 : p - a; }
  E mul(E a, E b) const { return static_cast<E>(static_cast<std::uint64_t>(a) * b % p); }
  E inv(E a) const {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    if (t < 0) t += p;
    return static_cast<E>(t);
  }
  E from_long(long v) const {
    long m = v % static_cast<long>(p);
    return static_cast<E>(m < 0 ? m + p : m);
  }
  E from_scalar(const Scalar& s) const { return s.residue(); }
  Scalar to_scalar(E a) const { return Scalar(spec, static_cast<long>(a)); }
  // y -= a * x
  void submul(E& y, E a, E x) const { y = sub(y, mul(a, x)); }
  void addmul(E& y, E a, E x) const { y = add(y, mul(a, x)); }
};

struct RatQ {
  using E = mpq_class;

  FieldSpec field() const { return FieldSpec::rationals(); }
  static bool is_zero(const E& a) { return sgn(a) == 0; }
  E zero() const { return E(0); }
  E one() const { return E(1); }
  E add(const E& a, const E& b) const { return a + b; }
  E sub(const E& a, const E& b) const { return a - b; }
  E neg(const E& a) const { return -a; }
  E mul(const E& a, const E& b) const { return a * b; }
  E inv(const E& a) const { return 1 / a; }
  E from_long(long v) const { return E(v); }
  const E& from_scalar(const Scalar& s) const { return s.rational(); }
  Scalar to_scalar(const E& a) const { return Scalar(FieldSpec::rationals(), a); }
  void submul(E& y, const E& a, const E& x) const {
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.get_mpq_t(), x.get_mpq_t());
    mpq_sub(y.get_mpq_t(), y.get_mpq_t(), t.get_mpq_t());
  }
  void addmul(E& y, const E& a, const E& x) const {
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), a.get_mpq_t(), x.get_mpq_t());
    mpq_add(y.get_mpq_t(), y.get_mpq_t(), t.get_mpq_t());
  }
};

template <class Fn>
decltype(auto) dispatch(FieldSpec f, Fn&& fn) {
  if (f.is_rationals()) return fn(RatQ{});
  return fn(ModP{f});
}

// out = y - a * x, merged by index.
template <class F>
void sub_scaled(const F& f, const SVec<typename F::E>& y, const typename F::E& a,
                const SVec<typename F::E>& x, SVec<typename F::E>& out) {
  using E = typename F::E;
  out.clear();
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].idx < x[j].idx)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].idx < y[i].idx) {
      out.push_back({x[j].idx, f.neg(f.mul(a, x[j].val))});
      ++j;
    } else {
      E v = y[i].val;
      f.submul(v, a, x[j].val);
      if (!F::is_zero(v)) out.push_back({y[i].idx, std::move(v)});
      ++i;
      ++j;
    }
  }
}

template <class F>
void scale_in_place(const F& f, SVec<typename F::E>& v, const typename F::E& a) {
  for (auto& e : v) e.val = f.mul(a, e.val);
}

// Dense scratch vector with a record of touched positions.
template <class F>
class Accumulator {
 public:
  using E = typename F::E;

  Accumulator(const F& f, std::size_t n) : f_(f), vals_(n, f.zero()), mark_(n, 0) {}

  void add(std::uint32_t i, const E& v) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
    vals_[i] = f_.add(vals_[i], v);
  }
  void addmul(std::uint32_t i, const E& a, const E& x) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
    f_.addmul(vals_[i], a, x);
  }
  // Sorted nonzero entries; resets the accumulator.
  SVec<E> take() {
    std::sort(touched_.begin(), touched_.end());
    SVec<E> out;
    out.reserve(touched_.size());
    for (std::uint32_t i : touched_) {
      if (!F::is_zero(vals_[i])) out.push_back({i, vals_[i]});
      vals_[i] = f_.zero();
      mark_[i] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  F f_;
  std::vector<E> vals_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

struct MatrixAccess {
  template <class F>
  static SVec<typename F::E> column(const F& f, const SparseMatrix& m, std::size_t j) {
    SVec<typename F::E> out;
    out.reserve(m.col_end(j) - m.col_begin(j));
    for (std::size_t k = m.col_begin(j); k < m.col_end(j); ++k) out.push_back({m.rowidx_[k], raw<F>(f, m, k)});
    return out;
  }

  template <class F>
  static std::vector<SVec<typename F::E>> columns(const F& f, const SparseMatrix& m) {
    std::vector<SVec<typename F::E>> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = column(f, m, j);
    return out;
  }

  template <class F>
  static const typename F::E& raw(const F&, const SparseMatrix& m, std::size_t k) {
    if constexpr (std::is_same_v<F, RatQ>)
      return m.rationals_[k];
    else
      return m.residues_[k];
  }

  // Columns must be sorted and free of zeros.
  template <class F>
  static SparseMatrix from_columns(const F& f, std::size_t rows,
                                   const std::vector<SVec<typename F::E>>& cols) {
    SparseMatrix m(f.field(), rows, cols.size());
    std::size_t total = 0;
    for (const auto& c : cols) total += c.size();
    m.rowidx_.reserve(total);
    if constexpr (std::is_same_v<F, RatQ>)
      m.rationals_.reserve(total);
    else
      m.residues_.reserve(total);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (const auto& e : cols[j]) {
        m.rowidx_.push_back(e.idx);
        if constexpr (std::is_same_v<F, RatQ>)
          m.rationals_.push_back(e.val);
        else
          m.residues_.push_back(e.val);
      }
      m.colptr_[j + 1] = m.rowidx_.size();
    }
    return m;
  }
};

// Collects (row, col, value) contributions; duplicates are summed at build().
template <class F>
class TripletBuilder {
 public:
  using E = typename F::E;

  TripletBuilder(const F& f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols) {}

  void add(std::size_t row, std::size_t col, E v) {
    if (F::is_zero(v)) return;
    if (row >= rows_ || col >= cols_) throw DimensionMismatch("triplet out of range");
    items_.push_back({static_cast<std::uint32_t>(col), static_cast<std::uint32_t>(row), std::move(v)});
  }
  std::size_t size() const { return items_.size(); }

  SparseMatrix build() {
    std::sort(items_.begin(), items_.end(), [](const Item& a, const Item& b) {
      return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    std::vector<SVec<E>> cols(cols_);
    for (std::size_t k = 0; k < items_.size();) {
      std::size_t l = k;
      E sum = items_[k].val;
      while (++l < items_.size() && items_[l].col == items_[k].col && items_[l].row == items_[k].row)
        sum = f_.add(sum, items_[l].val);
      if (!F::is_zero(sum)) cols[items_[k].col].push_back({items_[k].row, std::move(sum)});
      k = l;
    }
    items_.clear();
    return MatrixAccess::from_columns(f_, rows_, cols);
  }

 private:
  struct Item {
    std::uint32_t col;
    std::uint32_t row;
    E val;
  };
  F f_;
  std::size_t rows_, cols_;
  std::vector<Item> items_;
};

}  // namespace leibcoh::detail
