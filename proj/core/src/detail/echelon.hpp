#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "detail/field_ops.hpp"

namespace leibcoh::detail {

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Incremental column echelon basis.  Every stored vector has its first
// nonzero entry (the pivot) equal to one.  With tracking enabled each stored
// vector remembers its expression in the inserted generators.
template <class F>
class Echelon {
 public:
  using E = typename F::E;
  using V = SVec<E>;

  Echelon(const F& f, std::size_t ambient, std::size_t tag_dim = 0)
      : f_(f), pivot_of_(ambient, kNone), acc_(ambient, f.zero()), mark_(ambient, 0), tag_dim_(tag_dim),
        combo_(f, tag_dim) {}

  std::size_t size() const { return basis_.size(); }
  std::size_t ambient() const { return pivot_of_.size(); }
  const V& vector(std::size_t k) const { return basis_[k]; }
  const V& tag(std::size_t k) const { return tags_[k]; }
  std::uint32_t pivot(std::size_t k) const { return basis_[k].front().idx; }
  bool has_pivot(std::uint32_t row) const { return pivot_of_[row] != kNone; }

  // Returns true when v is independent of the current span.
  bool insert(const V& v, V tag = {}) {
    V combo;
    V r = reduce(v, tracking() ? &combo : nullptr);
    if (r.empty()) return false;
    if (tracking()) {
      V t;
      sub_scaled(f_, tag, f_.one(), combo, t);
      tag.swap(t);
    }
    E inv = f_.inv(r.front().val);
    scale_in_place(f_, r, inv);
    if (tracking()) scale_in_place(f_, tag, inv);
    pivot_of_[r.front().idx] = static_cast<std::uint32_t>(basis_.size());
    basis_.push_back(std::move(r));
    tags_.push_back(std::move(tag));
    return true;
  }

  // Residual of v after eliminating every pivot position.  If combo is given
  // it receives the combination of tags subtracted, so that
  // v = residual + (sum over generators of combo).
  V reduce(const V& v, V* combo = nullptr, std::uint32_t keep = kNone) {
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    std::vector<std::uint32_t> touched;
    for (const auto& e : v) {
      acc_[e.idx] = e.val;
      mark_[e.idx] = 1;
      touched.push_back(e.idx);
      heap.push(e.idx);
    }
    V residual;
    while (!heap.empty()) {
      std::uint32_t i = heap.top();
      heap.pop();
      if (F::is_zero(acc_[i])) continue;
      std::uint32_t k = pivot_of_[i];
      if (k == kNone || i == keep) {
        residual.push_back({i, acc_[i]});
        continue;
      }
      E c = acc_[i];
      for (const auto& e : basis_[k]) {
        if (!mark_[e.idx]) {
          mark_[e.idx] = 1;
          touched.push_back(e.idx);
          heap.push(e.idx);
        }
        f_.submul(acc_[e.idx], c, e.val);
      }
      if (combo)
        for (const auto& e : tags_[k]) combo_.addmul(e.idx, c, e.val);
    }
    for (std::uint32_t i : touched) {
      acc_[i] = f_.zero();
      mark_[i] = 0;
    }
    if (combo) *combo = combo_.take();
    return residual;
  }

  // Clears every pivot row of each stored vector except its own pivot.
  void make_reduced() {
    std::vector<std::size_t> order(basis_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot(a) > pivot(b); });
    for (std::size_t k : order) {
      V combo;
      V r = reduce(basis_[k], tracking() ? &combo : nullptr, pivot(k));
      if (tracking()) {
        V t;
        sub_scaled(f_, tags_[k], f_.one(), combo, t);
        tags_[k].swap(t);
      }
      basis_[k].swap(r);
    }
  }

  // Stored vector indices ordered by pivot.
  std::vector<std::size_t> by_pivot() const {
    std::vector<std::size_t> order(basis_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot(a) < pivot(b); });
    return order;
  }

 private:
  bool tracking() const { return tag_dim_ > 0; }

  F f_;
  std::vector<std::uint32_t> pivot_of_;
  std::vector<E> acc_;
  std::vector<char> mark_;
  std::size_t tag_dim_;
  Accumulator<F> combo_;
  std::vector<V> basis_;
  std::vector<V> tags_;
};

}  // namespace leibcoh::detail
