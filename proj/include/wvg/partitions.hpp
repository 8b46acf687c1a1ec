#pragma once

#include "wvg/game.hpp"

#include <functional>
#include <vector>

namespace wvg {

namespace detail {

inline void partitions_rec(weight_t remaining, std::size_t slots, weight_t min_part, std::vector<weight_t>& cur,
                           const std::function<void(const std::vector<weight_t>&)>& f) {
  if (slots == 1) {
    if (remaining >= min_part) {
      cur.push_back(remaining);
      f(cur);
      cur.pop_back();
    }
    return;
  }
  // Remaining slots all hold at least `part`.
  for (weight_t part = min_part; part * slots <= remaining; ++part) {
    cur.push_back(part);
    partitions_rec(remaining - part, slots - 1, part, cur, f);
    cur.pop_back();
  }
}

}  // namespace detail

// Visits every partition of `total` into exactly `parts` positive parts, each
// as a non-decreasing sequence, in lexicographic order.
inline void for_each_partition(weight_t total, std::size_t parts, const std::function<void(const std::vector<weight_t>&)>& f) {
  if (parts == 0 || total < parts) return;
  std::vector<weight_t> cur;
  cur.reserve(parts);
  detail::partitions_rec(total, parts, 1, cur, f);
}

inline std::vector<std::vector<weight_t>> integer_partitions(weight_t total, std::size_t parts) {
  std::vector<std::vector<weight_t>> out;
  for_each_partition(total, parts, [&](const std::vector<weight_t>& p) { out.push_back(p); });
  return out;
}

}  // namespace wvg
