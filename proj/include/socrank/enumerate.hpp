#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "socrank/core.hpp"

namespace socrank {

// Visits every quotient order on the 2^n - 1 nonempty coalitions exactly
// once: canonical set partitions via restricted growth strings, then every
// ordering of the blocks. At n = 3 this is the full set of 47,293 ordered
// set partitions of the 7 coalitions.
template <typename Fn>
inline void for_each_quotient_order(int n, Fn&& fn) {
  const int m = (1 << n) - 1;
  const PlayerSet players = PlayerSet::of_size(n);
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);

  std::function<void(int, int)> rec = [&](int pos, int max_block) {
    if (pos == m) {
      const int blocks = max_block + 1;
      std::vector<int> perm(static_cast<std::size_t>(blocks));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<int> rank(static_cast<std::size_t>(blocks));
        for (int k = 0; k < blocks; ++k) rank[static_cast<std::size_t>(perm[k])] = k;
        std::vector<std::vector<Coalition>> classes(static_cast<std::size_t>(blocks));
        for (int item = 0; item < m; ++item)
          classes[static_cast<std::size_t>(rank[static_cast<std::size_t>(rgs[item])])]
              .push_back(static_cast<Coalition>(item + 1));
        fn(PowerRelation(players, std::move(classes)));
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int blk = 0; blk <= max_block + 1; ++blk) {
      rgs[static_cast<std::size_t>(pos)] = blk;
      rec(pos + 1, std::max(max_block, blk));
    }
  };

  if (m == 1) {
    fn(PowerRelation(players, {{Coalition{1}}}));
    return;
  }
  rec(1, 0);
}

}  // namespace socrank
