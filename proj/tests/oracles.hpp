#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's enumeration and DP code paths.

#include "wvg/game.hpp"
#include "wvg/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace wvg::oracle {

// Literal permutation counting: phi_i = #{orderings where i is pivotal} / n!.
inline std::vector<rational> shapley_permutations(const std::vector<weight_t>& w, weight_t q) {
  const std::size_t n = w.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> pivotal(n, 0);
  std::uint64_t total = 0;
  do {
    ++total;
    weight_t acc = 0;
    for (auto p : perm) {
      if (acc < q && acc + w[p] >= q) {
        ++pivotal[p];
        break;
      }
      acc += w[p];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<rational> out;
  for (auto c : pivotal) out.emplace_back(big_int(c), big_int(total));
  return out;
}

// eta_i by looping over all 2^n coalitions and testing membership directly.
inline std::vector<std::uint64_t> critical_counts(const std::vector<weight_t>& w, weight_t q) {
  const std::size_t n = w.size();
  std::vector<std::uint64_t> eta(n, 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    weight_t s = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (m >> j & 1u) s += w[j];
    if (s >= q) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!(m >> i & 1u) && s + w[i] >= q) ++eta[i];
  }
  return eta;
}

inline std::vector<rational> banzhaf(const std::vector<weight_t>& w, weight_t q) {
  auto eta = critical_counts(w, q);
  std::uint64_t total = std::accumulate(eta.begin(), eta.end(), std::uint64_t{0});
  std::vector<rational> out;
  for (auto e : eta) out.emplace_back(big_int(e), big_int(total));
  return out;
}

inline bool partition_exists(const std::vector<weight_t>& a) {
  const weight_t total = std::accumulate(a.begin(), a.end(), weight_t{0});
  if (total % 2) return false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m) {
    weight_t s = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (m >> j & 1u) s += a[j];
    if (2 * s == total) return true;
  }
  return false;
}

// Uniform n in [min_n, max_n], weights in [1, max_w], quota in [1, w(N)].
inline Game random_game(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n, weight_t max_w) {
  std::uniform_int_distribution<std::size_t> nd(min_n, max_n);
  std::uniform_int_distribution<weight_t> wd(1, max_w);
  std::vector<weight_t> w(nd(rng));
  for (auto& x : w) x = wd(rng);
  const weight_t total = std::accumulate(w.begin(), w.end(), weight_t{0});
  std::uniform_int_distribution<weight_t> qd(1, total);
  return Game(qd(rng), std::move(w));
}

inline rational R(std::int64_t p, std::int64_t q = 1) { return rational(big_int(p), big_int(q)); }

}  // namespace wvg::oracle
