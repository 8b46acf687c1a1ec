#pragma once

// Exact Shapley-Shubik and Banzhaf indices. Two independent routes: subset
// enumeration (small n, the reference) and pseudopolynomial DP over weights.

#include "wvg/errors.hpp"
#include "wvg/game.hpp"
#include "wvg/numeric.hpp"
#include "wvg/subset_counts.hpp"

#include <bit>
#include <string>
#include <vector>

namespace wvg {

enum class index_kind { shapley_shubik, banzhaf };

inline const char* to_string(index_kind k) {
  return k == index_kind::shapley_shubik ? "shapley_shubik" : "banzhaf_normalized";
}

struct IndexVector {
  index_kind kind = index_kind::shapley_shubik;
  std::vector<rational> values;

  const rational& operator[](player_id i) const { return values.at(i); }
  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const IndexVector&, const IndexVector&) = default;
};

// eta_i: number of coalitions S not containing i for which i is critical.
struct CriticalCounts {
  std::vector<big_int> counts;

  const big_int& operator[](player_id i) const { return counts.at(i); }
  std::size_t size() const noexcept { return counts.size(); }
  friend bool operator==(const CriticalCounts&, const CriticalCounts&) = default;
};

// by_size[k] = number of k-element coalitions of the other players that the
// player is critical for.
struct ShapleyPivotTable {
  player_id player = 0;
  std::vector<big_int> by_size;
};

struct exact_options {
  std::size_t enumeration_limit = 12;
};

// Largest game enumerate_* will accept regardless of the configured limit.
inline constexpr std::size_t hard_enumeration_limit = 26;

// sum_k pivots[k] * k! (n-1-k)! / n!
inline rational shapley_from_pivots(const std::vector<big_int>& pivots, std::size_t n) {
  const auto f = factorials(n);
  big_int num = 0;
  for (std::size_t k = 0; k < pivots.size() && k < n; ++k)
    if (pivots[k] != 0) num += pivots[k] * f[k] * f[n - 1 - k];
  return rational(num, f[n]);
}

namespace detail {

inline void check_enumeration_size(const Game& g, std::size_t limit, const char* alternative) {
  const auto effective = std::min(limit, hard_enumeration_limit);
  if (g.size() > effective)
    throw size_limit_error(std::to_string(g.size()) + " players exceeds the enumeration limit of " +
                           std::to_string(effective) + "; use " + alternative);
}

// mask_weight[m] = total weight of the players in bitmask m.
inline std::vector<weight_t> subset_weights(const Game& g) {
  const std::size_t n = g.size();
  std::vector<weight_t> w(std::size_t{1} << n, 0);
  for (std::size_t m = 1; m < w.size(); ++m) w[m] = w[m & (m - 1)] + g.weight(std::countr_zero(m));
  return w;
}

// Visits every subset of the other players, reporting (size, critical?).
template <class F>
void for_each_pivot_subset(const Game& g, const std::vector<weight_t>& mask_weight, player_id i, F&& f) {
  const std::uint64_t bit = std::uint64_t{1} << i;
  const weight_t q = g.quota();
  const weight_t wi = g.weight(i);
  for (std::uint64_t m = 0; m < mask_weight.size(); ++m) {
    if (m & bit) continue;
    const weight_t w = mask_weight[m];
    if (w < q && w + wi >= q) f(static_cast<std::size_t>(std::popcount(m)));
  }
}

}  // namespace detail

inline IndexVector shapley_enumerate(const Game& g, const exact_options& opt = {}) {
  detail::check_enumeration_size(g, opt.enumeration_limit, "shapley_dp");
  const std::size_t n = g.size();
  const auto mw = detail::subset_weights(g);
  IndexVector out{index_kind::shapley_shubik, {}};
  for (player_id i = 0; i < n; ++i) {
    std::vector<std::uint64_t> pivots(n, 0);
    detail::for_each_pivot_subset(g, mw, i, [&](std::size_t k) { ++pivots[k]; });
    out.values.push_back(shapley_from_pivots(std::vector<big_int>(pivots.begin(), pivots.end()), n));
  }
  return out;
}

inline CriticalCounts banzhaf_counts_enumerate(const Game& g, const exact_options& opt = {}) {
  detail::check_enumeration_size(g, opt.enumeration_limit, "banzhaf_counts_dp");
  const auto mw = detail::subset_weights(g);
  CriticalCounts out;
  for (player_id i = 0; i < g.size(); ++i) {
    std::uint64_t eta = 0;
    detail::for_each_pivot_subset(g, mw, i, [&](std::size_t) { ++eta; });
    out.counts.emplace_back(eta);
  }
  return out;
}

inline ShapleyPivotTable shapley_pivot_table(const Game& g, player_id player) {
  if (player >= g.size()) throw invalid_coalition("player out of range");
  return with_count_type(g.size(), [&]<class C>(std::type_identity<C>) {
    sized_weight_counts<C> t(g.quota(), g.size() - 1);
    for (player_id j = 0; j < g.size(); ++j)
      if (j != player) t.add(g.weight(j));
    ShapleyPivotTable out{player, {}};
    for (const auto& c : t.critical_by_size(g.weight(player))) out.by_size.push_back(to_big(c));
    return out;
  });
}

inline rational shapley_dp(const Game& g, player_id player) {
  return shapley_from_pivots(shapley_pivot_table(g, player).by_size, g.size());
}

inline big_int banzhaf_counts_dp(const Game& g, player_id player) {
  if (player >= g.size()) throw invalid_coalition("player out of range");
  return with_count_type(g.size(), [&]<class C>(std::type_identity<C>) {
    weight_counts<C> t(g.quota());
    for (player_id j = 0; j < g.size(); ++j)
      if (j != player) t.add(g.weight(j));
    return to_big(t.critical(g.weight(player)));
  });
}

// All players at once: one table over N, then each player is removed from a
// copy. O(n^2 q) for Shapley-Shubik, O(n q) for Banzhaf.
inline std::vector<ShapleyPivotTable> shapley_pivot_tables_all(const Game& g) {
  return with_count_type(g.size(), [&]<class C>(std::type_identity<C>) {
    sized_weight_counts<C> full(g.quota(), g.size());
    for (auto w : g.weights()) full.add(w);
    std::vector<ShapleyPivotTable> out;
    for (player_id i = 0; i < g.size(); ++i) {
      auto t = full;
      t.remove(g.weight(i));
      ShapleyPivotTable p{i, {}};
      for (const auto& c : t.critical_by_size(g.weight(i))) p.by_size.push_back(to_big(c));
      out.push_back(std::move(p));
    }
    return out;
  });
}

inline IndexVector shapley_dp_all(const Game& g) {
  IndexVector out{index_kind::shapley_shubik, {}};
  for (const auto& p : shapley_pivot_tables_all(g)) out.values.push_back(shapley_from_pivots(p.by_size, g.size()));
  return out;
}

inline CriticalCounts banzhaf_counts_dp_all(const Game& g) {
  return with_count_type(g.size(), [&]<class C>(std::type_identity<C>) {
    weight_counts<C> full(g.quota());
    for (auto w : g.weights()) full.add(w);
    CriticalCounts out;
    for (player_id i = 0; i < g.size(); ++i) {
      auto t = full;
      t.remove(g.weight(i));
      out.counts.push_back(to_big(t.critical(g.weight(i))));
    }
    return out;
  });
}

inline IndexVector normalize_banzhaf(const CriticalCounts& c) {
  big_int total = 0;
  for (const auto& x : c.counts) total += x;
  if (total == 0) throw impossible_state("all critical counts are zero; no valid game has this property");
  IndexVector out{index_kind::banzhaf, {}};
  for (const auto& x : c.counts) out.values.emplace_back(x, total);
  return out;
}

// Enumeration up to the configured limit, DP above it. Both routes give the
// same exact values.
inline IndexVector index(const Game& g, index_kind kind, const exact_options& opt = {}) {
  const bool small = g.size() <= std::min(opt.enumeration_limit, hard_enumeration_limit);
  if (kind == index_kind::shapley_shubik) return small ? shapley_enumerate(g, opt) : shapley_dp_all(g);
  return normalize_banzhaf(small ? banzhaf_counts_enumerate(g, opt) : banzhaf_counts_dp_all(g));
}

}  // namespace wvg
