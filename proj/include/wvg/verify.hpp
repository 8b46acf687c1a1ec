#pragma once

// Self-check: a table of worked examples with known exact answers, plus
// randomized invariant suites on small games.

#include "wvg/errors.hpp"
#include "wvg/index_exact.hpp"
#include "wvg/index_mc.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/parallel.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace wvg {

struct VerifyCase {
  std::string suite;
  std::string name;
  std::function<std::string()> actual;
  std::string expected;
};

struct VerifyResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyResult> results;

  bool passed() const {
    return std::all_of(results.begin(), results.end(), [](const VerifyResult& r) { return r.passed; });
  }
  std::size_t failures() const {
    return std::count_if(results.begin(), results.end(), [](const VerifyResult& r) { return !r.passed; });
  }
};

namespace detail {

inline std::string fractions(const IndexVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_fraction(v[i]);
  return s;
}

inline std::string counts_str(const CriticalCounts& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
  return s;
}

inline std::string weights_str(const Game& g) {
  std::string s = std::to_string(g.quota()) + ";";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g.weight(i));
  return s;
}

inline std::string split_str(const ScanSummary& s) {
  std::string out;
  for (const auto& r : s.reports)
    out += std::string(out.empty() ? "" : " ") + to_string(r.result) + ":" +
           (r.gain_ratio ? to_fraction(*r.gain_ratio) : std::string("-"));
  return out;
}

}  // namespace detail

// Worked examples with exact expected values.
inline std::vector<VerifyCase> fixture_table() {
  using detail::fractions;
  constexpr auto ss = index_kind::shapley_shubik;
  constexpr auto bz = index_kind::banzhaf;
  const std::string f = "fixtures";
  std::vector<VerifyCase> t;
  auto add = [&](std::string name, std::function<std::string()> fn, std::string expected) {
    t.push_back({f, std::move(name), std::move(fn), std::move(expected)});
  };

  add("[6;2,2,2] grand coalition wins", [] { return evaluate(Game(6, {2, 2, 2}), {0, 1, 2}) == outcome::win ? "win" : "lose"; }, "win");
  add("[6;2,2,2] {0,1} loses", [] { return evaluate(Game(6, {2, 2, 2}), {0, 1}) == outcome::win ? "win" : "lose"; }, "lose");
  add("[5;2,1,1,1,1] player 0 critical for {1,2,3}",
      [] { return is_critical(Game(5, {2, 1, 1, 1, 1}), {1, 2, 3}, 0) ? "true" : "false"; }, "true");
  add("[6;2,2,2] split player 2 into (1,1)", [] { return detail::weights_str(apply_split(Game(6, {2, 2, 2}), {2, {1, 1}}).game); },
      "6;2,2,1,1");
  add("[6;5,5] split player 1 into five units",
      [] { return detail::weights_str(apply_split(Game(6, {5, 5}), {1, {1, 1, 1, 1, 1}}).game); }, "6;5,1,1,1,1,1");
  add("[9;3,3,2,1,1,1] merge {0,1}", [] { return detail::weights_str(apply_merge(Game(9, {3, 3, 2, 1, 1, 1}), {{0, 1}}).game); },
      "9;2,1,1,1,6");
  add("[11;6,5,1,1,1,1,1] merge {0,2}",
      [] { return detail::weights_str(apply_merge(Game(11, {6, 5, 1, 1, 1, 1, 1}), {{0, 2}}).game); }, "11;5,1,1,1,1,7");

  add("[6;2,2,2] Shapley-Shubik", [] { return fractions(index(Game(6, {2, 2, 2}), ss)); }, "1/3,1/3,1/3");
  add("[5;2,1,1,1,1] Shapley-Shubik player 0", [] { return to_fraction(index(Game(5, {2, 1, 1, 1, 1}), ss)[0]); }, "2/5");
  add("[6;5,1,1,1,1,1] Shapley-Shubik player 0", [] { return to_fraction(shapley_dp(Game(6, {5, 1, 1, 1, 1, 1}), 0)); }, "5/6");
  add("[4;2,2,2] Shapley-Shubik", [] { return fractions(index(Game(4, {2, 2, 2}), ss)); }, "1/3,1/3,1/3");
  add("[5;2,1,1,1,1] critical counts", [] { return detail::counts_str(banzhaf_counts_dp_all(Game(5, {2, 1, 1, 1, 1}))); },
      "5,3,3,3,3");
  add("[5;2,1,1,1,1] Banzhaf", [] { return fractions(index(Game(5, {2, 1, 1, 1, 1}), bz)); }, "5/17,3/17,3/17,3/17,3/17");
  add("[11;6,5,1,1,1,1,1] critical counts",
      [] { return detail::counts_str(banzhaf_counts_dp_all(Game(11, {6, 5, 1, 1, 1, 1, 1}))); }, "33,31,1,1,1,1,1");
  add("[11;6,5,1,1,1,1,1] Banzhaf player 0", [] { return to_fraction(index(Game(11, {6, 5, 1, 1, 1, 1, 1}), bz)[0]); }, "11/23");
  add("[4;2,2,1,1] Banzhaf", [] { return fractions(index(Game(4, {2, 2, 1, 1}), bz)); }, "1/3,1/3,1/6,1/6");
  add("[6;2,2,2] Banzhaf", [] { return fractions(index(Game(6, {2, 2, 2}), bz)); }, "1/3,1/3,1/3");

  add("[6;2,2,2] split, Shapley-Shubik", [] { return detail::split_str(scan_two_way_splits(Game(6, {2, 2, 2}), 2, ss, 1)); },
      "beneficial:3/2");
  add("[6;2,2,2] split, Banzhaf", [] { return detail::split_str(scan_two_way_splits(Game(6, {2, 2, 2}), 2, bz, 1)); },
      "beneficial:3/2");
  add("[5;2,2,2] split, Shapley-Shubik", [] { return detail::split_str(scan_two_way_splits(Game(5, {2, 2, 2}), 2, ss, 1)); },
      "harmful:1/2");
  add("[5;2,2,2] split, Banzhaf", [] { return detail::split_str(scan_two_way_splits(Game(5, {2, 2, 2}), 2, bz, 1)); },
      "harmful:3/4");
  add("[4;2,2,2] split, Shapley-Shubik", [] { return detail::split_str(scan_two_way_splits(Game(4, {2, 2, 2}), 2, ss, 1)); },
      "neutral:1");
  add("[4;2,2,2] split, Banzhaf", [] { return detail::split_str(scan_two_way_splits(Game(4, {2, 2, 2}), 2, bz, 1)); },
      "neutral:1");
  add("[5;2,1,1,1,1] split, Shapley-Shubik",
      [] { return detail::split_str(scan_two_way_splits(Game(5, {2, 1, 1, 1, 1}), 0, ss, 1)); }, "harmful:5/6");
  add("[5;2,1,1,1,1] split, Banzhaf",
      [] { return detail::split_str(scan_two_way_splits(Game(5, {2, 1, 1, 1, 1}), 0, bz, 1)); }, "beneficial:17/15");
  // Both two-way splits keep player 0 a veto player; measured by permutation
  // enumeration the identities get 1/6 each.
  add("[6;5,5] two-way splits", [] { return detail::split_str(scan_k_way_splits(Game(6, {5, 5}), 1, 2, ss, 1)); },
      "harmful:2/3 harmful:2/3");
  add("[6;5,5] five-way split", [] { return detail::split_str(scan_k_way_splits(Game(6, {5, 5}), 1, 5, ss, 1)); }, "harmful:1/3");
  add("[7;6,6] six-way split", [] { return detail::split_str(scan_k_way_splits(Game(7, {6, 6}), 1, 6, ss, 1)); }, "harmful:2/7");

  add("[11;6,5,1,1,1,1,1] annex one unit, Banzhaf",
      [] {
        const auto r = annex_benefit(Game(11, {6, 5, 1, 1, 1, 1, 1}), 0, {2}, bz);
        return to_fraction(r.payoff_before) + "->" + to_fraction(r.payoff_after) + (r.beneficial ? " beneficial" : " not beneficial");
      },
      "11/23->17/36 not beneficial");
  add("[11;6,5,1,1,1,1,1] annex one unit, Shapley-Shubik",
      [] {
        const auto r = annex_benefit(Game(11, {6, 5, 1, 1, 1, 1, 1}), 0, {2}, ss);
        return r.payoff_after >= r.payoff_before ? "non-harmful" : "harmful";
      },
      "non-harmful");
  add("[9;3,3,2,1,1,1] annexation probe, Banzhaf",
      [] {
        for (const auto& w : annex_monotonicity_probe(Game(9, {3, 3, 2, 1, 1, 1}), 0, bz))
          if (w.heavier == 1 && w.lighter == 2) return to_fraction(w.after_heavier) + "<" + to_fraction(w.after_lighter);
        return std::string("no witness");
      },
      "2/5<7/17");
  add("[9;3,3,2,1,1,1] annexation probe, Shapley-Shubik",
      [] { return std::to_string(annex_monotonicity_probe(Game(9, {3, 3, 2, 1, 1, 1}), 0, ss).size()); }, "0");

  add("[10;2,2,2,2,2] split gain ratio",
      [] { return to_fraction(*check_split_bounds(Game(10, {2, 2, 2, 2, 2}), {0, {1, 1}}).shapley_ratio); }, "5/3");
  add("[9;2,2,2,2,2] split loss ratio",
      [] { return to_fraction(*check_split_bounds(Game(9, {2, 2, 2, 2, 2}), {0, {1, 1}}).shapley_ratio); }, "1/3");
  add("[12;1,1,1,1,1,1,1,16] split (8,8) Banzhaf",
      [] { return to_fraction(check_split_bounds(Game(12, {1, 1, 1, 1, 1, 1, 1, 16}), {7, {8, 8}}).banzhaf_after); }, "32/67");
  add("[6;2,2,2] unanimity recommendation",
      [] {
        const auto s = unanimity_split_recommendation(Game(6, {2, 2, 2}));
        return s ? std::to_string(s->parts[0]) + "," + std::to_string(s->parts[1]) : std::string("none");
      },
      "1,1");
  add("[65;10,10,10,10,10,10,7] high-quota recommendation",
      [] {
        const auto s = high_quota_split_recommendation(Game(65, {10, 10, 10, 10, 10, 10, 7}), 6);
        return s ? std::to_string(s->parts[0]) + "," + std::to_string(s->parts[1]) : std::string("none");
      },
      "4,3");
  add("sample size for (0.01, 0.01)", [] { return std::to_string(sample_size(0.01, 0.01)); }, "26492");
  return t;
}

inline VerifyReport run_cases(const std::vector<VerifyCase>& cases) {
  VerifyReport rep;
  for (const auto& c : cases) {
    VerifyResult r{c.suite, c.name, false, {}};
    try {
      const std::string got = c.actual();
      r.passed = got == c.expected;
      r.detail = r.passed ? got : "expected " + c.expected + ", got " + got;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    rep.results.push_back(std::move(r));
  }
  return rep;
}

namespace detail {

inline Game random_small_game(std::uint64_t seed, std::size_t trial, std::size_t max_n, weight_t max_w) {
  std::mt19937_64 rng(derive_seed(seed, trial));
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  std::vector<weight_t> w(n);
  weight_t total = 0;
  for (auto& x : w) total += x = std::uniform_int_distribution<weight_t>(1, max_w)(rng);
  return Game(std::uniform_int_distribution<weight_t>(1, total)(rng), std::move(w));
}

// Runs `check` on `trials` random games; the result names the first failure.
inline VerifyResult random_trials(std::string suite, std::string name, std::size_t trials, std::uint64_t seed,
                                  std::size_t max_n, weight_t max_w, const std::function<void(const Game&)>& check) {
  for (std::size_t k = 0; k < trials; ++k) {
    const Game g = random_small_game(seed, k, max_n, max_w);
    try {
      check(g);
    } catch (const std::exception& e) {
      return {suite, name, false, "trial " + std::to_string(k) + " [" + weights_str(g) + "]: " + e.what()};
    }
  }
  return {suite, name, true, std::to_string(trials) + " trials"};
}

}  // namespace detail

inline VerifyReport bounds_suite(std::size_t trials, std::uint64_t seed) {
  VerifyReport rep;
  rep.results.push_back(detail::random_trials("bounds", "two-way split bounds", trials, seed, 8, 12, [](const Game& g) {
    for (player_id p = 0; p < g.size(); ++p)
      for (const auto& spec : two_way_candidates(g, p)) check_split_bounds(g, spec);
  }));
  rep.results.push_back(detail::random_trials("bounds", "annexation bounds", trials, mix64(seed), 7, 12, [](const Game& g) {
    for (player_id i = 0; i < g.size(); ++i)
      for (player_id j = 0; j < g.size(); ++j)
        for (player_id k = j + 1; k < g.size(); ++k)
          if (i != j && i != k) check_annex_bounds(g, i, j, k);
  }));
  rep.results.push_back(detail::random_trials("bounds", "unanimity games", trials, mix64(seed + 1), 7, 12, [](const Game& r) {
    const Game g(r.total_weight(), std::vector<weight_t>(r.weights().begin(), r.weights().end()));
    if (const auto spec = unanimity_split_recommendation(g)) {
      for (auto kind : {index_kind::shapley_shubik, index_kind::banzhaf}) {
        const exact_split_evaluator ev(g, spec->player, kind);
        if (ev.after(spec->parts) != ev.before() * rational(2 * g.size(), g.size() + 1))
          throw invariant_violation("recommended split does not gain 2n/(n+1)");
      }
    }
    if (g.size() >= 3) {
      for (auto kind : {index_kind::shapley_shubik, index_kind::banzhaf}) {
        if (!annex_benefit(g, 0, {1}, kind).beneficial) throw invariant_violation("annexation did not help");
        if (merge_benefit(g, {0, 1}, kind).beneficial) throw invariant_violation("merge helped");
      }
    }
  }));
  return rep;
}

inline VerifyReport oracle_suite(std::size_t trials, std::uint64_t seed) {
  VerifyReport rep;
  rep.results.push_back(detail::random_trials("oracle", "dynamic programming equals enumeration", trials, seed, 10, 25,
                                              [](const Game& g) {
                                                if (shapley_dp_all(g) != shapley_enumerate(g))
                                                  throw invariant_violation("Shapley-Shubik mismatch");
                                                if (banzhaf_counts_dp_all(g) != banzhaf_counts_enumerate(g))
                                                  throw invariant_violation("critical count mismatch");
                                              }));
  rep.results.push_back(detail::random_trials("oracle", "index axioms", trials, mix64(seed), 10, 25, [](const Game& g) {
    for (auto kind : {index_kind::shapley_shubik, index_kind::banzhaf}) {
      const auto v = index(g, kind);
      rational sum = 0;
      for (player_id i = 0; i < g.size(); ++i) {
        if (v[i] < 0 || v[i] > 1) throw invariant_violation("index out of [0, 1]");
        sum += v[i];
        for (player_id j = 0; j < g.size(); ++j)
          if (g.weight(i) == g.weight(j) && v[i] != v[j]) throw invariant_violation("symmetry");
      }
      if (sum != 1) throw invariant_violation("normalization");
    }
  }));
  return rep;
}

enum class verify_suite { fixtures, bounds, oracle, all };

inline VerifyReport verify(verify_suite suite, std::size_t trials = 200, std::uint64_t seed = 0) {
  VerifyReport rep;
  auto append = [&](VerifyReport r) {
    for (auto& x : r.results) rep.results.push_back(std::move(x));
  };
  if (suite == verify_suite::fixtures || suite == verify_suite::all) append(run_cases(fixture_table()));
  if (suite == verify_suite::bounds || suite == verify_suite::all) append(bounds_suite(trials, seed));
  if (suite == verify_suite::oracle || suite == verify_suite::all) append(oracle_suite(trials, seed));
  return rep;
}

}  // namespace wvg
