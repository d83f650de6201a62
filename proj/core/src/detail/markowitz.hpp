#pragma once

// Right-looking sparse elimination for rank.  Each step takes the active
// vector with fewest nonzeros and, inside it, the coordinate shared by the
// fewest active vectors; ties go to the lowest index.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "detail/field_ops.hpp"

namespace leibcoh::detail {

// Integer coefficients for fraction-free elimination over Q.
struct IntZ {
  using E = mpz_class;
  static bool is_zero(const E& a) { return sgn(a) == 0; }
};

template <class E>
class MarkowitzRank {
 public:
  // Combines `target` with `pivot` so that the coordinate `row` vanishes.
  using Combine = std::function<void(SVec<E>& target, const SVec<E>& pivot, const E& pv, const E& tv, SVec<E>& out)>;

  MarkowitzRank(std::size_t rows, std::vector<SVec<E>> vecs, Combine combine)
      : vecs_(std::move(vecs)), combine_(std::move(combine)), row_count_(rows, 0), row_vecs_(rows) {}

  std::size_t run() {
    using Key = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
    std::vector<char> active(vecs_.size(), 0);
    for (std::uint32_t c = 0; c < vecs_.size(); ++c) {
      if (vecs_[c].empty()) continue;
      active[c] = 1;
      queue.push({vecs_[c].size(), c});
      for (const auto& e : vecs_[c]) {
        ++row_count_[e.idx];
        row_vecs_[e.idx].push_back(c);
      }
    }
    std::size_t rank = 0;
    SVec<E> scratch;
    while (!queue.empty()) {
      auto [n, c] = queue.top();
      queue.pop();
      if (!active[c] || vecs_[c].size() != n) continue;
      const SVec<E>& piv = vecs_[c];
      std::uint32_t row = piv.front().idx;
      std::size_t pos = 0;
      for (std::size_t k = 0; k < piv.size(); ++k)
        if (row_count_[piv[k].idx] < row_count_[row]) {
          row = piv[k].idx;
          pos = k;
        }
      ++rank;
      active[c] = 0;
      for (const auto& e : piv) --row_count_[e.idx];
      std::vector<std::uint32_t> users;
      users.swap(row_vecs_[row]);
      for (std::uint32_t t : users) {
        if (!active[t]) continue;
        SVec<E>& tv = vecs_[t];
        auto it = std::lower_bound(tv.begin(), tv.end(), row,
                                   [](const Entry<E>& e, std::uint32_t r) { return e.idx < r; });
        if (it == tv.end() || it->idx != row) continue;
        combine_(tv, piv, piv[pos].val, it->val, scratch);
        // Membership bookkeeping: compare old and new supports.
        std::size_t i = 0, j = 0;
        while (i < tv.size() || j < scratch.size()) {
          if (j == scratch.size() || (i < tv.size() && tv[i].idx < scratch[j].idx)) {
            --row_count_[tv[i].idx];
            ++i;
          } else if (i == tv.size() || scratch[j].idx < tv[i].idx) {
            ++row_count_[scratch[j].idx];
            row_vecs_[scratch[j].idx].push_back(t);
            ++j;
          } else {
            ++i;
            ++j;
          }
        }
        tv.swap(scratch);
        if (tv.empty())
          active[t] = 0;
        else
          queue.push({tv.size(), t});
      }
      vecs_[c].clear();
    }
    return rank;
  }

 private:
  std::vector<SVec<E>> vecs_;
  Combine combine_;
  std::vector<std::uint32_t> row_count_;
  std::vector<std::vector<std::uint32_t>> row_vecs_;
};

}  // namespace leibcoh::detail
