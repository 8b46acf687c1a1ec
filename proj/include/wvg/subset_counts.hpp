#pragma once

// Knapsack-style counting tables: how many subsets of a multiset of weights
// have total weight W, for every W below a cap (the quota). Subsets that reach
// the cap are dropped; criticality only asks about weights in [q - w_i, q - 1],
// and dropping them keeps every stored count exact, which is what makes
// remove() (the inverse of add()) valid.

#include "wvg/errors.hpp"
#include "wvg/game.hpp"
#include "wvg/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace wvg {

// Upper bound on stored DP cells; beyond it the exact engine refuses the game.
inline constexpr std::size_t max_dp_cells = std::size_t{1} << 27;

inline void check_dp_cells(std::size_t rows, weight_t cap) {
  if (cap > max_dp_cells || rows * cap > max_dp_cells)
    throw resource_limit_error("quota " + std::to_string(cap) + " is too large for the exact DP engine");
}

template <class Count>
class weight_counts {
 public:
  explicit weight_counts(weight_t cap) : counts_((check_dp_cells(1, cap), cap), Count(0)) { counts_[0] = 1; }

  void add(weight_t w) {
    const auto cap = counts_.size();
    for (std::size_t W = cap; W-- > w;) counts_[W] += counts_[W - w];
  }

  // Inverse of add(w); only valid if w was added before.
  void remove(weight_t w) {
    const auto cap = counts_.size();
    for (std::size_t W = w; W < cap; ++W) counts_[W] -= counts_[W - w];
  }

  // Number of subsets with weight in [lo, cap).
  Count tail_sum(weight_t lo) const {
    Count s = 0;
    for (std::size_t W = lo; W < counts_.size(); ++W) s += counts_[W];
    return s;
  }

  // Subsets a player of weight w is critical for: weight in [cap - w, cap).
  Count critical(weight_t w) const {
    const weight_t cap = counts_.size();
    return tail_sum(w >= cap ? 0 : cap - w);
  }

  const Count& operator[](weight_t W) const { return counts_[W]; }
  weight_t cap() const noexcept { return counts_.size(); }

 private:
  std::vector<Count> counts_;
};

// Same table split by subset size: at(k, W) counts k-element subsets.
template <class Count>
class sized_weight_counts {
 public:
  sized_weight_counts(weight_t cap, std::size_t max_items)
      : cap_(cap), rows_(max_items + 1), items_(0) {
    check_dp_cells(rows_, cap_);
    counts_.assign(rows_ * cap_, Count(0));
    at(0, 0) = 1;
  }

  void add(weight_t w) {
    if (items_ + 1 >= rows_) throw std::logic_error("sized_weight_counts: capacity exceeded");
    ++items_;
    for (std::size_t k = items_; k >= 1; --k) {
      Count* row = &at(k, 0);
      const Count* prev = &at(k - 1, 0);
      for (std::size_t W = cap_; W-- > w;) row[W] += prev[W - w];
    }
  }

  void remove(weight_t w) {
    for (std::size_t k = 1; k <= items_; ++k) {
      Count* row = &at(k, 0);
      const Count* prev = &at(k - 1, 0);
      for (std::size_t W = w; W < cap_; ++W) row[W] -= prev[W - w];
    }
    --items_;
  }

  // Per size k, the number of k-subsets a player of weight w is critical for.
  std::vector<Count> critical_by_size(weight_t w) const {
    const weight_t lo = w >= cap_ ? 0 : cap_ - w;
    std::vector<Count> out(items_ + 1, Count(0));
    for (std::size_t k = 0; k <= items_; ++k) {
      const Count* row = &at(k, 0);
      for (std::size_t W = lo; W < cap_; ++W) out[k] += row[W];
    }
    return out;
  }

  std::size_t items() const noexcept { return items_; }

 private:
  Count& at(std::size_t k, std::size_t W) { return counts_[k * cap_ + W]; }
  const Count& at(std::size_t k, std::size_t W) const { return counts_[k * cap_ + W]; }

  std::size_t cap_;
  std::size_t rows_;
  std::size_t items_;
  std::vector<Count> counts_;
};

// Subset counts never exceed 2^items, so 64-bit counters are exact up to 63
// items; larger instances fall back to arbitrary precision.
inline constexpr std::size_t max_items_for_u64 = 63;

template <class F>
decltype(auto) with_count_type(std::size_t items, F&& f) {
  if (items <= max_items_for_u64) return f(std::type_identity<std::uint64_t>{});
  return f(std::type_identity<big_int>{});
}

template <class Count>
big_int to_big(const Count& c) {
  return big_int(c);
}

}  // namespace wvg
