#pragma once

// Sampling estimators with an (epsilon, delta) guarantee from Hoeffding's
// inequality: with k = ceil(ln(2/delta) / (2 epsilon^2)) samples, the sample
// mean is within epsilon of the true criticality probability with
// probability at least 1 - delta.
//
// Samples are drawn in fixed-size blocks, each block from its own RNG stream
// keyed by (seed, query, block index), so estimates are bit-identical for any
// number of worker threads.

#include "wvg/errors.hpp"
#include "wvg/game.hpp"
#include "wvg/index_exact.hpp"
#include "wvg/numeric.hpp"
#include "wvg/parallel.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace wvg {

struct McConfig {
  double epsilon = 0.01;
  double delta = 0.01;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> sample_count_override;
  unsigned threads = 0;  // 0: default_thread_count()

  void validate() const {
    if (!(epsilon > 0 && epsilon < 1)) throw invalid_config("epsilon must lie in (0, 1)");
    if (!(delta > 0 && delta < 1)) throw invalid_config("delta must lie in (0, 1)");
    if (sample_count_override && *sample_count_override == 0) throw invalid_config("sample count must be positive");
  }
};

enum class estimate_kind { shapley_shubik, banzhaf_raw };

inline const char* to_string(estimate_kind k) {
  return k == estimate_kind::shapley_shubik ? "shapley_shubik" : "banzhaf_raw";
}

struct McEstimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 1;
  estimate_kind kind = estimate_kind::shapley_shubik;

  rational value() const { return rational(big_int(hits), big_int(samples)); }
  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

inline std::uint64_t sample_size(double epsilon, double delta) {
  McConfig{epsilon, delta}.validate();
  const long double x = std::log(2.0L / delta) / (2.0L * epsilon * epsilon);
  // Values that are integers up to rounding noise in the logarithm are not
  // bumped to the next integer.
  const long double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9L * std::max(1.0L, x)) return static_cast<std::uint64_t>(r);
  return static_cast<std::uint64_t>(std::ceil(x));
}

inline std::uint64_t samples_for(const McConfig& c) {
  c.validate();
  return c.sample_count_override ? *c.sample_count_override : sample_size(c.epsilon, c.delta);
}

namespace detail {

inline constexpr std::uint64_t mc_block = 4096;

// Counts hits over k samples; draw(rng) runs one sample and returns 0 or 1.
template <class Draw>
std::uint64_t count_hits(std::uint64_t k, std::uint64_t stream_seed, unsigned threads, Draw draw) {
  const std::size_t blocks = (k + mc_block - 1) / mc_block;
  std::vector<std::uint64_t> hits(blocks, 0);
  parallel_for(
      blocks,
      [&](std::size_t b) {
        std::mt19937_64 rng(derive_seed(stream_seed, b));
        const std::uint64_t len = std::min(mc_block, k - b * mc_block);
        std::uint64_t h = 0;
        for (std::uint64_t s = 0; s < len; ++s) h += draw(rng);
        hits[b] = h;
      },
      threads);
  return std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
}

}  // namespace detail

// Fraction of uniformly random orderings in which the player is pivotal for
// its predecessors.
inline McEstimate shapley_mc(const Game& g, player_id player, const McConfig& config) {
  if (player >= g.size()) throw invalid_coalition("player out of range");
  const std::uint64_t k = samples_for(config);
  const std::size_t n = g.size();
  const weight_t q = g.quota();
  const weight_t wi = g.weight(player);
  const std::vector<weight_t> w(g.weights().begin(), g.weights().end());

  const auto hits = detail::count_hits(k, derive_seed(config.seed, 0x55, player), config.threads, [&](std::mt19937_64& rng) {
    thread_local std::vector<player_id> perm;
    perm.resize(n);
    std::iota(perm.begin(), perm.end(), player_id{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    weight_t acc = 0;
    for (auto p : perm) {
      if (p == player) break;
      acc += w[p];
    }
    return std::uint64_t(acc < q && acc + wi >= q);
  });
  return {hits, k, estimate_kind::shapley_shubik};
}

// Fraction of uniformly random coalitions of the other players (one fair bit
// per player) for which the player is critical: an estimate of eta_i / 2^(n-1).
inline McEstimate banzhaf_raw_mc(const Game& g, player_id player, const McConfig& config) {
  if (player >= g.size()) throw invalid_coalition("player out of range");
  const std::uint64_t k = samples_for(config);
  const weight_t q = g.quota();
  const weight_t wi = g.weight(player);
  std::vector<weight_t> others;
  for (player_id j = 0; j < g.size(); ++j)
    if (j != player) others.push_back(g.weight(j));

  const auto hits = detail::count_hits(k, derive_seed(config.seed, 0xBA, player), config.threads, [&](std::mt19937_64& rng) {
    weight_t acc = 0;
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < others.size(); ++j) {
      if (j % 64 == 0) bits = rng();
      if (bits & 1u) acc += others[j];
      bits >>= 1;
    }
    return std::uint64_t(acc < q && acc + wi >= q);
  });
  return {hits, k, estimate_kind::banzhaf_raw};
}

struct BanzhafMcResult {
  IndexVector normalized;
  std::vector<McEstimate> raw;
};

// Per-player raw estimates, then normalized. If each raw estimate is within
// epsilon of eta_i / 2^(n-1) (probability >= 1 - n delta by the union bound)
// and the true raw sum is s with n epsilon <= s / 4, every normalized value is
// within normalized_error_bound() of the exact Banzhaf index.
inline BanzhafMcResult banzhaf_mc(const Game& g, const McConfig& config) {
  BanzhafMcResult out;
  out.normalized.kind = index_kind::banzhaf;
  std::uint64_t total = 0;
  for (player_id i = 0; i < g.size(); ++i) {
    out.raw.push_back(banzhaf_raw_mc(g, i, config));
    total += out.raw.back().hits;
  }
  if (total == 0)
    throw degenerate_normalization("every sampled Banzhaf estimate is zero; increase the sample count or use the exact engine");
  // All players share the sample count, so the normalization is over hits.
  for (const auto& r : out.raw) out.normalized.values.emplace_back(big_int(r.hits), big_int(total));
  return out;
}

inline double normalized_error_bound(double epsilon, std::size_t n, const rational& raw_sum) {
  return 2.0 * epsilon * static_cast<double>(n) / to_double(raw_sum);
}

}  // namespace wvg
