#pragma once

// Random-game experiments: draw games with normally distributed weights, scan
// every two-way split of every player and aggregate how often splitting pays.

#include "wvg/errors.hpp"
#include "wvg/game.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/numeric.hpp"
#include "wvg/parallel.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wvg {

struct ExperimentConfig {
  double weight_mean = 50;
  std::vector<double> weight_sigmas{5, 15, 25};
  std::size_t min_players = 5;
  std::size_t max_players = 12;
  // Games drawn per sigma value; n is drawn per game, so each (sigma, n) cell
  // receives about games_per_cell / (max_players - min_players + 1) games.
  std::size_t games_per_cell = 100;
  double epsilon = 0.001;
  double delta = 0.00001;
  std::optional<double> beneficial_margin;  // monte carlo only; defaults to 2 epsilon
  std::uint64_t seed = 0;
  engine_kind engine = engine_kind::exact;
  index_kind kind = index_kind::shapley_shubik;
  bool force_unanimity = false;  // quota = w(N) for control runs
  weight_t dp_ceiling = weight_t{1} << 20;  // largest quota the exact engine accepts
  unsigned threads = 0;

  void validate() const {
    if (!(weight_mean > 0) || !std::isfinite(weight_mean)) throw invalid_config("weight mean must be positive");
    if (weight_sigmas.empty()) throw invalid_config("at least one sigma is required");
    for (double s : weight_sigmas)
      if (!(s > 0) || !std::isfinite(s)) throw invalid_config("sigma values must be positive");
    if (min_players < 2) throw invalid_config("player range must start at 2 or more");
    if (max_players < min_players) throw invalid_config("empty player range");
    if (games_per_cell < 1) throw invalid_config("games per cell must be at least 1");
    if (engine == engine_kind::monte_carlo) McConfig{epsilon, delta, seed}.validate();
  }

  rational margin() const {
    if (engine == engine_kind::exact) return 0;
    return rational(beneficial_margin.value_or(2 * epsilon));
  }
};

struct GameRecord {
  Game game;
  std::vector<ScanSummary> scans;  // one per player

  std::size_t total_splits() const {
    std::size_t t = 0;
    for (const auto& s : scans) t += s.total_splits;
    return t;
  }
  std::size_t beneficial_splits() const {
    std::size_t t = 0;
    for (const auto& s : scans) t += s.beneficial;
    return t;
  }
  bool has_beneficial() const { return beneficial_splits() > 0; }
  // 0 when no player can split at all.
  rational beneficial_fraction() const {
    const auto t = total_splits();
    return t == 0 ? rational(0) : rational(beneficial_splits(), t);
  }
};

inline constexpr std::size_t histogram_bins = 200;

// Bin of a fraction in [0, 1]; 1 falls in the last bin.
inline std::size_t histogram_bin(const rational& fraction) {
  const big_int b = numerator(fraction) * histogram_bins / denominator(fraction);
  return std::min<std::size_t>(b.convert_to<std::size_t>(), histogram_bins - 1);
}

struct CellStats {
  double sigma = 0;
  std::size_t players = 0;
  std::size_t games = 0;
  std::size_t games_with_beneficial = 0;
  rational beneficial_fraction_sum = 0;

  rational fraction_games_with_beneficial() const { return games ? rational(games_with_beneficial, games) : rational(0); }
  rational mean_beneficial_fraction() const { return games ? beneficial_fraction_sum / games : rational(0); }

  friend bool operator==(const CellStats&, const CellStats&) = default;
};

struct ExperimentStats {
  index_kind kind = index_kind::shapley_shubik;
  engine_kind engine = engine_kind::exact;
  std::vector<CellStats> cells;  // sorted by (sigma, players)
  std::vector<std::size_t> histogram = std::vector<std::size_t>(histogram_bins, 0);
  std::size_t games = 0;
  std::size_t games_with_beneficial = 0;
  std::size_t total_splits = 0;
  std::size_t beneficial_splits = 0;
  // Per-player reading: (game, player) pairs with at least one beneficial split.
  std::size_t players_scanned = 0;
  std::size_t players_with_beneficial = 0;

  rational fraction_games_with_beneficial() const { return games ? rational(games_with_beneficial, games) : rational(0); }
  rational pooled_beneficial_fraction() const {
    return total_splits ? rational(beneficial_splits, total_splits) : rational(0);
  }
  rational fraction_players_with_beneficial() const {
    return players_scanned ? rational(players_with_beneficial, players_scanned) : rational(0);
  }

  void add(double sigma, const GameRecord& r) {
    auto it = std::lower_bound(cells.begin(), cells.end(), std::pair{sigma, r.game.size()},
                               [](const CellStats& c, const std::pair<double, std::size_t>& k) {
                                 return std::pair{c.sigma, c.players} < k;
                               });
    if (it == cells.end() || it->sigma != sigma || it->players != r.game.size())
      it = cells.insert(it, CellStats{sigma, r.game.size()});
    const rational f = r.beneficial_fraction();
    ++it->games;
    it->beneficial_fraction_sum += f;
    ++histogram[histogram_bin(f)];
    ++games;
    total_splits += r.total_splits();
    beneficial_splits += r.beneficial_splits();
    if (r.has_beneficial()) {
      ++it->games_with_beneficial;
      ++games_with_beneficial;
    }
    for (const auto& s : r.scans) {
      ++players_scanned;
      if (s.beneficial > 0) ++players_with_beneficial;
    }
  }

  friend bool operator==(const ExperimentStats&, const ExperimentStats&) = default;
};

// n uniform over the player range; weights round(N(mu, sigma^2)) redrawn
// until positive; quota round(U(0, w(N))) clamped to [1, w(N)].
template <class Rng>
Game generate_game(const ExperimentConfig& c, double sigma, Rng& rng) {
  std::uniform_int_distribution<std::size_t> players(c.min_players, c.max_players);
  std::normal_distribution<double> weight(c.weight_mean, sigma);
  const std::size_t n = players(rng);
  std::vector<weight_t> w(n);
  weight_t total = 0;
  for (auto& x : w) {
    long long v = 0;
    while ((v = std::llround(weight(rng))) < 1) {
    }
    x = static_cast<weight_t>(v);
    total += x;
  }
  std::uniform_real_distribution<double> quota(0.0, static_cast<double>(total));
  const long long q = c.force_unanimity ? static_cast<long long>(total) : std::llround(quota(rng));
  return Game(static_cast<weight_t>(std::clamp<long long>(q, 1, static_cast<long long>(total))), std::move(w));
}

inline std::mt19937_64 game_rng(const ExperimentConfig& c, std::size_t sigma_index, std::size_t game_index) {
  return std::mt19937_64(derive_seed(c.seed, sigma_index, game_index));
}

// Scans every player of one game. `stream` separates sampling streams of
// different games in monte carlo mode.
inline GameRecord evaluate_game(const Game& g, const ExperimentConfig& c, std::uint64_t stream = 0, unsigned threads = 1) {
  if (c.engine == engine_kind::exact && g.quota() > c.dp_ceiling)
    throw resource_limit_error("quota " + std::to_string(g.quota()) + " exceeds the exact-engine ceiling " +
                               std::to_string(c.dp_ceiling));
  GameRecord r{g, {}};
  for (player_id p = 0; p < g.size(); ++p) {
    if (c.engine == engine_kind::exact) {
      r.scans.push_back(scan_two_way_splits(g, p, c.kind, threads));
    } else {
      McConfig mc{c.epsilon, c.delta, derive_seed(c.seed, stream, p), std::nullopt, threads};
      r.scans.push_back(scan_two_way_splits_mc(g, p, c.kind, mc, c.margin()));
    }
  }
  return r;
}

inline ExperimentStats run_experiment(const ExperimentConfig& c) {
  c.validate();
  struct job {
    std::size_t sigma_index;
    std::size_t game_index;
  };
  std::vector<job> jobs;
  for (std::size_t s = 0; s < c.weight_sigmas.size(); ++s)
    for (std::size_t k = 0; k < c.games_per_cell; ++k) jobs.push_back({s, k});

  std::vector<std::optional<GameRecord>> records(jobs.size());
  parallel_for(
      jobs.size(),
      [&](std::size_t j) {
        auto rng = game_rng(c, jobs[j].sigma_index, jobs[j].game_index);
        const Game g = generate_game(c, c.weight_sigmas[jobs[j].sigma_index], rng);
        records[j] = evaluate_game(g, c, mix64(derive_seed(c.seed, jobs[j].sigma_index, jobs[j].game_index)), 1);
      },
      c.threads);

  ExperimentStats st;
  st.kind = c.kind;
  st.engine = c.engine;
  for (std::size_t j = 0; j < jobs.size(); ++j) st.add(c.weight_sigmas[jobs[j].sigma_index], *records[j]);
  return st;
}

// CSV: one row per (sigma, n) cell.
inline std::string stats_to_csv(const ExperimentStats& st) {
  std::string out = "sigma,n_players,games,frac_with_beneficial,mean_beneficial_fraction\n";
  for (const auto& c : st.cells) {
    out += nlohmann::json(c.sigma).dump() + "," + std::to_string(c.players) + "," + std::to_string(c.games) + "," +
           to_decimal(c.fraction_games_with_beneficial()) + "," + to_decimal(c.mean_beneficial_fraction()) + "\n";
  }
  return out;
}

namespace detail {

inline nlohmann::json rational_json(const rational& r) {
  return {{"fraction", to_fraction(r)}, {"decimal", to_double(r)}};
}

inline rational parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return rational(big_int(s));
    return rational(big_int(s.substr(0, slash)), big_int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw invalid_config("malformed fraction '" + s + "'");
  }
}

// Games-with-beneficial proportion grouped by one cell coordinate.
template <class Key, class F>
nlohmann::json proportion_series(const ExperimentStats& st, const char* name, F key) {
  std::map<Key, std::pair<std::size_t, std::size_t>> acc;
  for (const auto& c : st.cells) {
    auto& a = acc[key(c)];
    a.first += c.games_with_beneficial;
    a.second += c.games;
  }
  auto arr = nlohmann::json::array();
  for (const auto& [k, v] : acc)
    arr.push_back({{name, k}, {"games", v.second}, {"proportion", to_double(rational(v.first, v.second))}});
  return arr;
}

}  // namespace detail

// Plot data: proportion of games with a beneficial split against sigma and
// against n, plus the histogram of per-game beneficial fractions.
inline nlohmann::json stats_to_json(const ExperimentStats& st) {
  nlohmann::json j;
  j["kind"] = to_string(st.kind);
  j["engine"] = to_string(st.engine);
  j["games"] = st.games;
  j["games_with_beneficial"] = st.games_with_beneficial;
  j["total_splits"] = st.total_splits;
  j["beneficial_splits"] = st.beneficial_splits;
  j["players_scanned"] = st.players_scanned;
  j["players_with_beneficial"] = st.players_with_beneficial;
  j["fraction_games_with_beneficial"] = detail::rational_json(st.fraction_games_with_beneficial());
  j["pooled_beneficial_fraction"] = detail::rational_json(st.pooled_beneficial_fraction());
  j["fraction_players_with_beneficial"] = detail::rational_json(st.fraction_players_with_beneficial());
  auto cells = nlohmann::json::array();
  for (const auto& c : st.cells) {
    cells.push_back({{"sigma", c.sigma},
                     {"n_players", c.players},
                     {"games", c.games},
                     {"games_with_beneficial", c.games_with_beneficial},
                     {"beneficial_fraction_sum", to_fraction(c.beneficial_fraction_sum)},
                     {"frac_with_beneficial", to_double(c.fraction_games_with_beneficial())},
                     {"mean_beneficial_fraction", to_double(c.mean_beneficial_fraction())}});
  }
  j["cells"] = std::move(cells);
  j["series"]["proportion_vs_sigma"] = detail::proportion_series<double>(st, "sigma", [](const CellStats& c) { return c.sigma; });
  j["series"]["proportion_vs_n"] =
      detail::proportion_series<std::size_t>(st, "n_players", [](const CellStats& c) { return c.players; });
  j["histogram"] = {{"bin_width", 1.0 / histogram_bins}, {"counts", st.histogram}};
  return j;
}

inline ExperimentStats stats_from_json(const nlohmann::json& j) {
  try {
    ExperimentStats st;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "shapley_shubik") st.kind = index_kind::shapley_shubik;
    else if (kind == "banzhaf_normalized") st.kind = index_kind::banzhaf;
    else throw invalid_config("unknown index kind '" + kind + "'");
    const auto engine = j.at("engine").get<std::string>();
    if (engine == "exact") st.engine = engine_kind::exact;
    else if (engine == "monte_carlo") st.engine = engine_kind::monte_carlo;
    else throw invalid_config("unknown engine '" + engine + "'");
    st.games = j.at("games").get<std::size_t>();
    st.games_with_beneficial = j.at("games_with_beneficial").get<std::size_t>();
    st.total_splits = j.at("total_splits").get<std::size_t>();
    st.beneficial_splits = j.at("beneficial_splits").get<std::size_t>();
    st.players_scanned = j.at("players_scanned").get<std::size_t>();
    st.players_with_beneficial = j.at("players_with_beneficial").get<std::size_t>();
    for (const auto& c : j.at("cells")) {
      st.cells.push_back({c.at("sigma").get<double>(), c.at("n_players").get<std::size_t>(), c.at("games").get<std::size_t>(),
                          c.at("games_with_beneficial").get<std::size_t>(),
                          detail::parse_fraction(c.at("beneficial_fraction_sum").get<std::string>())});
    }
    st.histogram = j.at("histogram").at("counts").get<std::vector<std::size_t>>();
    if (st.histogram.size() != histogram_bins) throw invalid_config("histogram must have 200 bins");
    return st;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_config(std::string("malformed experiment stats: ") + e.what());
  }
}

}  // namespace wvg
