#pragma once

// False-name manipulations: splitting a player's weight among several
// identities, merging a coalition into one player, and annexation.

#include "wvg/errors.hpp"
#include "wvg/game.hpp"
#include "wvg/index_exact.hpp"
#include "wvg/index_mc.hpp"
#include "wvg/numeric.hpp"
#include "wvg/parallel.hpp"
#include "wvg/partitions.hpp"
#include "wvg/subset_counts.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

namespace wvg {

enum class classification { beneficial, harmful, neutral };
enum class engine_kind { exact, monte_carlo };

inline const char* to_string(classification c) {
  switch (c) {
    case classification::beneficial: return "beneficial";
    case classification::harmful: return "harmful";
    default: return "neutral";
  }
}

inline const char* to_string(engine_kind e) { return e == engine_kind::exact ? "exact" : "monte_carlo"; }

// Strict comparison with a symmetric margin; margin 0 is the exact rule.
inline classification classify(const rational& before, const rational& after, const rational& margin = 0) {
  if (after > before + margin) return classification::beneficial;
  if (after < before - margin) return classification::harmful;
  return classification::neutral;
}

struct SplitReport {
  SplitSpec spec;
  rational payoff_before;
  rational payoff_after_total;
  std::optional<rational> gain_ratio;  // absent when payoff_before is 0
  classification result = classification::neutral;
  engine_kind engine = engine_kind::exact;
  rational margin = 0;
};

inline SplitReport make_split_report(SplitSpec spec, rational before, rational after, engine_kind engine,
                                     const rational& margin = 0) {
  SplitReport r{std::move(spec), std::move(before), std::move(after), std::nullopt, classification::neutral, engine, margin};
  if (r.payoff_before > 0) r.gain_ratio = r.payoff_after_total / r.payoff_before;
  r.result = classify(r.payoff_before, r.payoff_after_total, margin);
  return r;
}

struct ScanSummary {
  player_id player = 0;
  index_kind kind = index_kind::shapley_shubik;
  std::size_t total_splits = 0;
  std::size_t beneficial = 0;
  std::size_t harmful = 0;
  std::size_t neutral = 0;
  std::optional<SplitReport> best;  // largest payoff after splitting
  std::vector<SplitReport> reports;
};

inline ScanSummary summarize(player_id player, index_kind kind, std::vector<SplitReport> reports) {
  ScanSummary s{player, kind, reports.size(), 0, 0, 0, std::nullopt, {}};
  for (const auto& r : reports) {
    switch (r.result) {
      case classification::beneficial: ++s.beneficial; break;
      case classification::harmful: ++s.harmful; break;
      case classification::neutral: ++s.neutral; break;
    }
    if (!s.best || r.payoff_after_total > s.best->payoff_after_total) s.best = r;
  }
  s.reports = std::move(reports);
  return s;
}

namespace detail {

// Exact payoff of one player before and after replacing it by a set of parts.
// The DP tables over the other players are built once and reused for every
// candidate split, so each candidate costs O(parts * n * q).
template <class C>
class split_evaluator_impl {
 public:
  split_evaluator_impl(const Game& g, player_id player, index_kind kind, std::size_t max_parts)
      : game_(g), player_(player), kind_(kind), max_parts_(max_parts) {
    for (player_id j = 0; j < g.size(); ++j)
      if (j != player) others_.push_back(g.weight(j));
    fact_ = factorials(g.size() + max_parts);
    if (kind == index_kind::shapley_shubik) {
      sized_.emplace(g.quota(), others_.size() + max_parts);
      for (auto w : others_) sized_->add(w);
    } else {
      flat_.emplace(g.quota());
      for (auto w : others_) flat_->add(w);
    }
  }

  rational before() const {
    const weight_t w = game_.weight(player_);
    const std::vector<weight_t> parts{w};
    return after(parts);
  }

  rational after(std::span<const weight_t> parts) const {
    if (parts.size() > max_parts_) throw std::logic_error("split_evaluator: too many parts");
    return kind_ == index_kind::shapley_shubik ? shapley_after(parts) : banzhaf_after(parts);
  }

 private:
  rational shapley_after(std::span<const weight_t> parts) const {
    const std::size_t n = others_.size() + parts.size();
    big_int num = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      // Identical parts have identical pivot counts.
      if (j > 0 && parts[j] == parts[j - 1]) {
        num += last_;
        continue;
      }
      auto t = *sized_;
      for (std::size_t o = 0; o < parts.size(); ++o)
        if (o != j) t.add(parts[o]);
      const auto pivots = t.critical_by_size(parts[j]);
      big_int part_num = 0;
      for (std::size_t k = 0; k < pivots.size() && k < n; ++k)
        if (pivots[k] != 0) part_num += to_big(pivots[k]) * fact_[k] * fact_[n - 1 - k];
      last_ = part_num;
      num += part_num;
    }
    return rational(num, fact_[n]);
  }

  rational banzhaf_after(std::span<const weight_t> parts) const {
    auto full = *flat_;
    for (auto p : parts) full.add(p);
    big_int mine = 0, total = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      auto t = full;
      t.remove(parts[j]);
      const big_int eta = to_big(t.critical(parts[j]));
      mine += eta;
      total += eta;
    }
    for (auto w : others_) {
      auto t = full;
      t.remove(w);
      total += to_big(t.critical(w));
    }
    if (total == 0) throw impossible_state("no player is critical in a valid game");
    return rational(mine, total);
  }

  Game game_;
  player_id player_;
  index_kind kind_;
  std::size_t max_parts_;
  std::vector<weight_t> others_;
  std::vector<big_int> fact_;
  std::optional<sized_weight_counts<C>> sized_;
  std::optional<weight_counts<C>> flat_;
  mutable big_int last_;
};

}  // namespace detail

// Thread-compatible but not thread-safe: use one evaluator per worker.
class exact_split_evaluator {
 public:
  exact_split_evaluator(const Game& g, player_id player, index_kind kind, std::size_t max_parts = 2)
      : impl_(make(g, player, kind, max_parts)) {}

  rational before() const {
    return std::visit([](const auto& e) { return e.before(); }, impl_);
  }
  rational after(std::span<const weight_t> parts) const {
    return std::visit([&](const auto& e) { return e.after(parts); }, impl_);
  }

 private:
  using impl = std::variant<detail::split_evaluator_impl<std::uint64_t>, detail::split_evaluator_impl<big_int>>;

  static impl make(const Game& g, player_id player, index_kind kind, std::size_t max_parts) {
    if (player >= g.size()) throw invalid_coalition("player out of range");
    if (g.size() - 1 + max_parts <= max_items_for_u64)
      return impl(std::in_place_index<0>, g, player, kind, max_parts);
    return impl(std::in_place_index<1>, g, player, kind, max_parts);
  }

  impl impl_;
};

inline std::vector<SplitSpec> two_way_candidates(const Game& g, player_id player) {
  std::vector<SplitSpec> out;
  const weight_t w = g.weight(player);
  for (weight_t j = 1; j <= w / 2; ++j) out.push_back({player, {j, w - j}});
  return out;
}

namespace detail {

inline ScanSummary scan_candidates(const Game& g, player_id player, index_kind kind, std::vector<SplitSpec> candidates,
                                   std::size_t max_parts, unsigned threads) {
  if (candidates.empty()) return summarize(player, kind, {});
  const rational before = exact_split_evaluator(g, player, kind, 1).before();
  std::vector<std::optional<SplitReport>> slots(candidates.size());
  // One evaluator per contiguous chunk of candidates.
  const std::size_t chunks = std::min<std::size_t>(candidates.size(), std::max(1u, threads ? threads : default_thread_count()));
  parallel_for(
      chunks,
      [&](std::size_t c) {
        const exact_split_evaluator ev(g, player, kind, max_parts);
        for (std::size_t i = c; i < candidates.size(); i += chunks)
          slots[i] = make_split_report(candidates[i], before, ev.after(candidates[i].parts), engine_kind::exact);
      },
      threads);
  std::vector<SplitReport> reports;
  for (auto& s : slots) reports.push_back(std::move(*s));
  return summarize(player, kind, std::move(reports));
}

}  // namespace detail

// Every unordered split (j, w - j), j = 1..floor(w/2), with the exact engine.
inline ScanSummary scan_two_way_splits(const Game& g, player_id player, index_kind kind, unsigned threads = 0) {
  if (player >= g.size()) throw invalid_coalition("player out of range");
  return detail::scan_candidates(g, player, kind, two_way_candidates(g, player), 2, threads);
}

inline constexpr std::size_t max_split_parts = 6;

// Every partition of the player's weight into exactly k parts.
inline ScanSummary scan_k_way_splits(const Game& g, player_id player, std::size_t k, index_kind kind, unsigned threads = 0) {
  if (player >= g.size()) throw invalid_coalition("player out of range");
  if (k < 2 || k > max_split_parts) throw precondition_error("k-way scans need 2 <= k <= 6");
  std::vector<SplitSpec> candidates;
  for_each_partition(g.weight(player), k, [&](const std::vector<weight_t>& p) { candidates.push_back({player, p}); });
  return detail::scan_candidates(g, player, kind, std::move(candidates), k, threads);
}

// Sampling estimate of a player's index under either kind; the Banzhaf value
// is the normalized estimate.
inline rational estimate_index(const Game& g, player_id player, index_kind kind, const McConfig& c) {
  if (kind == index_kind::shapley_shubik) return shapley_mc(g, player, c).value();
  return banzhaf_mc(g, c).normalized[player];
}

inline rational estimate_parts(const Game& g, std::span<const player_id> parts, index_kind kind, const McConfig& c,
                               std::uint64_t stream) {
  rational v = 0;
  if (kind == index_kind::shapley_shubik) {
    for (std::size_t p = 0; p < parts.size(); ++p) {
      McConfig cp = c;
      cp.seed = derive_seed(c.seed, stream, p);
      v += shapley_mc(g, parts[p], cp).value();
    }
  } else {
    McConfig cp = c;
    cp.seed = derive_seed(c.seed, stream);
    const auto r = banzhaf_mc(g, cp);
    for (auto p : parts) v += r.normalized[p];
  }
  return v;
}

// Two-way split scan classified with the sampling engine: beneficial iff the
// estimated total exceeds the estimated original payoff by more than margin.
inline ScanSummary scan_two_way_splits_mc(const Game& g, player_id player, index_kind kind, const McConfig& c,
                                          const rational& margin) {
  if (player >= g.size()) throw invalid_coalition("player out of range");
  const auto candidates = two_way_candidates(g, player);
  if (candidates.empty()) return summarize(player, kind, {});
  McConfig base = c;
  base.seed = derive_seed(c.seed, 0xB0);
  const rational before = estimate_index(g, player, kind, base);
  std::vector<SplitReport> reports;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const auto t = apply_split(g, candidates[j]);
    const rational after = estimate_parts(t.game, t.created, kind, c, j + 1);
    reports.push_back(make_split_report(candidates[j], before, after, engine_kind::monte_carlo, margin));
  }
  return summarize(player, kind, std::move(reports));
}

struct FindSplitResult {
  bool found = false;
  std::optional<SplitSpec> spec;
  rational baseline;  // estimated payoff without splitting
  std::optional<rational> estimate;  // estimated total of the returned split
  std::size_t candidates_examined = 0;
  std::uint64_t samples_per_query = 0;
  rational margin;
};

// Approximate search for a beneficial two-way split: estimate the baseline
// payoff once, then each candidate's summed payoff, and report the first
// candidate whose estimate beats the baseline by more than margin (3 epsilon
// by default). For Shapley-Shubik, with probability >= 1 - 3 delta per
// candidate, a reported split is genuinely beneficial and every split gaining
// more than 6 epsilon is reported. The Banzhaf variant compares normalized
// estimates and only inherits the looser normalized error bound.
inline FindSplitResult find_split_approx(const Game& g, player_id player, double epsilon, double delta,
                                         index_kind kind = index_kind::shapley_shubik, std::uint64_t seed = 0,
                                         std::optional<double> margin = std::nullopt, unsigned threads = 0) {
  if (player >= g.size()) throw invalid_coalition("player out of range");
  McConfig c{epsilon, delta, seed, std::nullopt, threads};
  c.validate();
  FindSplitResult out;
  out.margin = rational(margin.value_or(3 * epsilon));
  out.samples_per_query = samples_for(c);
  McConfig base = c;
  base.seed = derive_seed(seed, 0xB0);
  out.baseline = estimate_index(g, player, kind, base);
  for (const auto& spec : two_way_candidates(g, player)) {
    ++out.candidates_examined;
    const auto t = apply_split(g, spec);
    const rational v = estimate_parts(t.game, t.created, kind, c, spec.parts[0]);
    if (v > out.baseline + out.margin) {
      out.found = true;
      out.spec = spec;
      out.estimate = v;
      return out;
    }
  }
  return out;
}

struct MergeReport {
  Coalition coalition;
  index_kind kind = index_kind::shapley_shubik;
  rational payoff_before;  // summed index of the members in the original game
  rational payoff_after;   // index of the merged player
  bool beneficial = false;
};

inline MergeReport merge_benefit(const Game& g, const Coalition& s, index_kind kind) {
  if (s.size() < 2) throw precondition_error("a merge needs at least two players");
  s.validate_for(g);
  const auto before = index(g, kind);
  rational sum = 0;
  for (auto i : s.members()) sum += before[i];
  const auto t = apply_merge(g, {s});
  const rational after = index(t.game, kind)[t.created[0]];
  return {s, kind, sum, after, after > sum};
}

struct AnnexReport {
  player_id annexer = 0;
  Coalition annexed;
  index_kind kind = index_kind::shapley_shubik;
  rational payoff_before;
  rational payoff_after;
  bool beneficial = false;
};

inline AnnexReport annex_benefit(const Game& g, player_id annexer, const Coalition& s, index_kind kind) {
  if (annexer >= g.size()) throw invalid_coalition("annexer out of range");
  if (s.contains(annexer)) throw precondition_error("annexer cannot be a member of the annexed coalition");
  s.validate_for(g);
  const rational before = index(g, kind)[annexer];
  const auto t = apply_annex(g, {annexer, s});
  const rational after = index(t.game, kind)[t.created[0]];
  return {annexer, s, kind, before, after, after > before};
}

struct MonotonicityWitness {
  player_id annexer;
  player_id heavier;  // j, w_j > w_k
  player_id lighter;  // k
  rational after_heavier;
  rational after_lighter;
};

// Triples (i, j, k) with w_j > w_k where annexing j leaves i strictly worse
// off than annexing k. Always empty for Shapley-Shubik.
inline std::vector<MonotonicityWitness> annex_monotonicity_probe(const Game& g, player_id annexer, index_kind kind) {
  if (annexer >= g.size()) throw invalid_coalition("annexer out of range");
  std::vector<std::optional<rational>> after(g.size());
  for (player_id j = 0; j < g.size(); ++j) {
    if (j == annexer) continue;
    const auto t = apply_annex(g, {annexer, {j}});
    after[j] = index(t.game, kind)[t.created[0]];
  }
  std::vector<MonotonicityWitness> out;
  for (player_id j = 0; j < g.size(); ++j)
    for (player_id k = 0; k < g.size(); ++k) {
      if (j == annexer || k == annexer || g.weight(j) <= g.weight(k)) continue;
      if (*after[j] < *after[k]) out.push_back({annexer, j, k, *after[j], *after[k]});
    }
  return out;
}

struct SplitBoundReport {
  std::size_t players = 0;
  rational shapley_before, shapley_after;
  std::optional<rational> shapley_ratio;
  rational banzhaf_before, banzhaf_after;
  std::optional<rational> banzhaf_ratio;
  big_int eta_before;     // eta of the splitting player in the original game
  big_int eta_after_sum;  // summed eta of the two identities
};

// Measures a two-part split against the proven bounds:
//   2/(n+1) phi <= phi' + phi'' <= 2n/(n+1) phi
//   beta / n   <= beta' + beta'' <= 2 beta
//   eta' + eta'' = 2 eta
// Any violation throws invariant_violation.
inline SplitBoundReport check_split_bounds(const Game& g, const SplitSpec& spec) {
  if (spec.parts.size() != 2) throw precondition_error("bound checks apply to two-part splits");
  const auto t = apply_split(g, spec);
  const std::size_t n = g.size();
  const player_id a = t.created[0], b = t.created[1];

  SplitBoundReport r;
  r.players = n;
  const auto phi = index(g, index_kind::shapley_shubik);
  const auto phi2 = index(t.game, index_kind::shapley_shubik);
  r.shapley_before = phi[spec.player];
  r.shapley_after = phi2[a] + phi2[b];

  const auto eta = banzhaf_counts_dp_all(g);
  const auto eta2 = banzhaf_counts_dp_all(t.game);
  r.eta_before = eta[spec.player];
  r.eta_after_sum = eta2[a] + eta2[b];
  const auto beta = normalize_banzhaf(eta);
  const auto beta2 = normalize_banzhaf(eta2);
  r.banzhaf_before = beta[spec.player];
  r.banzhaf_after = beta2[a] + beta2[b];

  auto fail = [&](const std::string& what) {
    throw invariant_violation(what + " violated for split of player " + std::to_string(spec.player));
  };
  if (r.eta_after_sum != 2 * r.eta_before) fail("eta' + eta'' = 2 eta");
  if (r.shapley_before > 0) {
    r.shapley_ratio = r.shapley_after / r.shapley_before;
    if (*r.shapley_ratio > rational(2 * n, n + 1)) fail("Shapley-Shubik gain bound 2n/(n+1)");
    if (*r.shapley_ratio < rational(2, n + 1)) fail("Shapley-Shubik loss bound 2/(n+1)");
  } else if (r.shapley_after != 0) {
    fail("dummy stays dummy (Shapley-Shubik)");
  }
  if (r.banzhaf_before > 0) {
    r.banzhaf_ratio = r.banzhaf_after / r.banzhaf_before;
    if (*r.banzhaf_ratio > 2) fail("Banzhaf gain bound 2");
    if (*r.banzhaf_ratio < rational(1, n)) fail("Banzhaf loss bound 1/n");
  } else if (r.banzhaf_after != 0) {
    fail("dummy stays dummy (Banzhaf)");
  }
  return r;
}

struct AnnexBoundReport {
  rational shapley_before, shapley_after_j, shapley_after_k;
  rational banzhaf_before, banzhaf_after_j, banzhaf_after_k;
};

// Annexation properties for annexer i and two candidate players j, k:
//   Shapley-Shubik: annexing never hurts, and is monotone in the annexed weight;
//   Banzhaf: annexing loses at most half, and never hurts when w_i <= w_j.
inline AnnexBoundReport check_annex_bounds(const Game& g, player_id i, player_id j, player_id k) {
  if (i == j || i == k || j == k || std::max({i, j, k}) >= g.size())
    throw precondition_error("annex bound checks need three distinct players");
  auto merged = [&](player_id other, index_kind kind) {
    const auto t = apply_annex(g, {i, {other}});
    return index(t.game, kind)[t.created[0]];
  };
  AnnexBoundReport r;
  r.shapley_before = index(g, index_kind::shapley_shubik)[i];
  r.shapley_after_j = merged(j, index_kind::shapley_shubik);
  r.shapley_after_k = merged(k, index_kind::shapley_shubik);
  r.banzhaf_before = index(g, index_kind::banzhaf)[i];
  r.banzhaf_after_j = merged(j, index_kind::banzhaf);
  r.banzhaf_after_k = merged(k, index_kind::banzhaf);

  auto fail = [&](const std::string& what) { throw invariant_violation(what + " violated for annexer " + std::to_string(i)); };
  if (r.shapley_after_j < r.shapley_before || r.shapley_after_k < r.shapley_before) fail("annexation never hurts (Shapley-Shubik)");
  if (g.weight(j) >= g.weight(k) && r.shapley_after_j < r.shapley_after_k) fail("annexation monotonicity (Shapley-Shubik)");
  if (g.weight(k) >= g.weight(j) && r.shapley_after_k < r.shapley_after_j) fail("annexation monotonicity (Shapley-Shubik)");
  for (auto [other, after] : {std::pair{j, r.banzhaf_after_j}, std::pair{k, r.banzhaf_after_k}}) {
    if (after * 2 < r.banzhaf_before) fail("Banzhaf annexation loss bound 1/2");
    if (g.weight(i) <= g.weight(other) && after < r.banzhaf_before) fail("Banzhaf annexation of a heavier player");
  }
  return r;
}

// If q > w(N) - s with s = min(min_i w_i, floor(w_max / 2)), every winning
// coalition needs every player, before and after halving the heaviest player,
// so that split gains a factor 2n/(n+1) under both indices.
inline std::optional<SplitSpec> unanimity_split_recommendation(const Game& g) {
  const weight_t wmin = *std::min_element(g.weights().begin(), g.weights().end());
  const weight_t wmax = g.max_weight();
  const weight_t s = std::min(wmin, wmax / 2);
  if (s == 0 || g.total_weight() - s >= g.quota()) return std::nullopt;
  const auto heaviest = static_cast<player_id>(std::max_element(g.weights().begin(), g.weights().end()) - g.weights().begin());
  return SplitSpec{heaviest, {wmax / 2, wmax - wmax / 2}};
}

// Shapley-Shubik fast path for a light player facing heavy players that are
// all multiples of some A, with quota q = A T + b, 0 < b < A and
// b < w < min(2b - 1, A): provided every winning coalition has more than
// ceil(n/2) players and the player is pivotal somewhere, splitting into
// (b - 1, w - b + 1) is beneficial.
inline std::optional<SplitSpec> high_quota_split_recommendation(const Game& g, player_id player) {
  if (player >= g.size()) throw invalid_coalition("player out of range");
  const std::size_t n = g.size();
  if (n < 2) return std::nullopt;
  std::vector<weight_t> others;
  weight_t common = 0;
  for (player_id j = 0; j < n; ++j)
    if (j != player) {
      others.push_back(g.weight(j));
      common = std::gcd(common, g.weight(j));
    }
  const weight_t w = g.weight(player);
  const weight_t q = g.quota();

  // Sufficient condition for "winning coalitions have >= ceil(n/2) + 1 players".
  std::sort(others.begin(), others.end(), std::greater<>());
  const std::size_t half = (n + 1) / 2;
  const weight_t top = std::accumulate(others.begin(), others.begin() + std::min(half, others.size()), weight_t{0});
  if (q <= top) return std::nullopt;

  // Any divisor of the common gcd can serve as A; larger first.
  std::vector<weight_t> divisors;
  for (weight_t d = 1; d * d <= common; ++d)
    if (common % d == 0) {
      divisors.push_back(d);
      if (d * d != common) divisors.push_back(common / d);
    }
  std::sort(divisors.begin(), divisors.end(), std::greater<>());
  for (weight_t a : divisors) {
    const weight_t b = q % a;
    if (b == 0 || b < 2) continue;  // b - 1 must be a positive part
    if (!(b < w && w + 1 < 2 * b && w < a)) continue;
    if (banzhaf_counts_dp(g, player) == 0) return std::nullopt;
    return SplitSpec{player, {b - 1, w - b + 1}};
  }
  return std::nullopt;
}

enum class gadget_variant { bi_split, ss_split, merge, annex };

inline const char* to_string(gadget_variant v) {
  switch (v) {
    case gadget_variant::bi_split: return "bi_split";
    case gadget_variant::ss_split: return "ss_split";
    case gadget_variant::merge: return "merge";
    default: return "annex";
  }
}

// Game built from a PARTITION instance {a_1..a_k}, X = sum a_i. The designated
// players are the splitter (split variants), the merging pair (merge), or
// {annexer, annexed} (annex).
struct Gadget {
  Game game;
  gadget_variant variant;
  std::vector<player_id> designated;
};

inline Gadget reduction_gadget(std::span<const weight_t> instance, gadget_variant variant) {
  if (instance.empty()) throw precondition_error("PARTITION instance must be nonempty");
  weight_t x = 0;
  std::vector<weight_t> w;
  for (auto a : instance) {
    if (a < 1) throw precondition_error("PARTITION items must be positive");
    x += a;
    w.push_back(8 * a);
  }
  switch (variant) {
    case gadget_variant::bi_split: {
      w.push_back(2);
      const player_id l = w.size() - 1;
      return {Game(4 * x + 2, std::move(w)), variant, {l}};
    }
    case gadget_variant::ss_split: {
      w.push_back(1);
      w.push_back(2);
      const player_id l = w.size() - 1;
      return {Game(4 * x + 3, std::move(w)), variant, {l}};
    }
    case gadget_variant::merge: {
      w.insert(w.end(), {1, 1, 1});
      const player_id last = w.size() - 1;
      return {Game(4 * x + 2, std::move(w)), variant, {last - 1, last}};
    }
    default: {
      w.insert(w.end(), {1, 1});
      const player_id last = w.size() - 1;
      return {Game(4 * x + 2, std::move(w)), variant, {last, last - 1}};
    }
  }
}

}  // namespace wvg
