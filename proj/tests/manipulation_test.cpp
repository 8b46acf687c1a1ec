#include "wvg/manipulation.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace wvg {
namespace {

using oracle::R;

constexpr auto ss = index_kind::shapley_shubik;
constexpr auto bz = index_kind::banzhaf;

// Summed oracle index of the split identities.
rational oracle_after(const Game& g, const SplitSpec& spec, index_kind kind) {
  const auto t = apply_split(g, spec);
  const std::vector<weight_t> w(t.game.weights().begin(), t.game.weights().end());
  const auto v = kind == ss ? oracle::shapley_permutations(w, g.quota()) : oracle::banzhaf(w, g.quota());
  rational sum = 0;
  for (auto p : t.created) sum += v[p];
  return sum;
}

TEST(ScanTwoWay, EqualWeightsUnanimity) {
  for (auto kind : {ss, bz}) {
    const auto s = scan_two_way_splits(Game(6, {2, 2, 2}), 2, kind);
    ASSERT_EQ(s.total_splits, 1u);
    EXPECT_EQ(s.beneficial, 1u);
    EXPECT_EQ(s.reports[0].spec.parts, (std::vector<weight_t>{1, 1}));
    EXPECT_EQ(s.reports[0].payoff_before, R(1, 3));
    EXPECT_EQ(s.reports[0].payoff_after_total, R(1, 2));
    EXPECT_EQ(*s.reports[0].gain_ratio, R(3, 2));
    EXPECT_EQ(s.best->result, classification::beneficial);
  }
}

TEST(ScanTwoWay, EqualWeightsMajority) {
  const Game g(5, {2, 2, 2});
  const auto a = scan_two_way_splits(g, 2, ss);
  EXPECT_EQ(a.harmful, 1u);
  EXPECT_EQ(*a.reports[0].gain_ratio, R(1, 2));
  const auto b = scan_two_way_splits(g, 2, bz);
  EXPECT_EQ(b.harmful, 1u);
  EXPECT_EQ(*b.reports[0].gain_ratio, R(3, 4));
}

TEST(ScanTwoWay, IndicesDisagree) {
  const Game g(5, {2, 1, 1, 1, 1});
  const auto a = scan_two_way_splits(g, 0, ss);
  EXPECT_EQ(a.reports[0].payoff_before, R(2, 5));
  EXPECT_EQ(a.reports[0].payoff_after_total, R(1, 3));
  EXPECT_EQ(a.reports[0].result, classification::harmful);
  const auto b = scan_two_way_splits(g, 0, bz);
  EXPECT_EQ(b.reports[0].payoff_before, R(5, 17));
  EXPECT_EQ(b.reports[0].payoff_after_total, R(1, 3));
  EXPECT_EQ(b.reports[0].result, classification::beneficial);
}

TEST(ScanTwoWay, NeutralSplit) {
  for (auto kind : {ss, bz}) {
    const auto s = scan_two_way_splits(Game(4, {2, 2, 2}), 2, kind);
    EXPECT_EQ(s.neutral, 1u);
    EXPECT_EQ(*s.reports[0].gain_ratio, 1);
  }
}

TEST(ScanTwoWay, UnitWeightHasNoSplits) {
  const auto s = scan_two_way_splits(Game(2, {1, 1}), 0, ss);
  EXPECT_EQ(s.total_splits, 0u);
  EXPECT_FALSE(s.best.has_value());
  EXPECT_THROW(scan_two_way_splits(Game(2, {1, 1}), 2, ss), invalid_coalition);
}

TEST(ScanTwoWay, DummyGainRatioAbsent) {
  const auto s = scan_two_way_splits(Game(14, {8, 16, 2}), 2, bz);
  ASSERT_EQ(s.total_splits, 1u);
  EXPECT_FALSE(s.reports[0].gain_ratio.has_value());
  EXPECT_EQ(s.reports[0].payoff_after_total, 0);
  EXPECT_EQ(s.neutral, 1u);
}

TEST(ScanKWay, TwoHeavyPlayers) {
  const Game g(6, {5, 5});
  // After either two-way split the identities weigh 5 < 6 together, so player
  // 0 stays a veto player and is pivotal in positions 2 and 3: it gets 2/3 and
  // each identity 1/6. The split is harmful at ratio 2/3.
  const auto two = scan_k_way_splits(g, 1, 2, ss);
  EXPECT_EQ(two.total_splits, 2u);
  EXPECT_EQ(two.harmful, 2u);
  for (const auto& r : two.reports) {
    EXPECT_EQ(*r.gain_ratio, R(2, 3));
    EXPECT_EQ(r.payoff_after_total, oracle_after(g, r.spec, ss));
  }

  const auto five = scan_k_way_splits(g, 1, 5, ss);
  ASSERT_EQ(five.total_splits, 1u);
  EXPECT_EQ(five.reports[0].spec.parts, std::vector<weight_t>(5, 1));
  EXPECT_EQ(five.reports[0].payoff_after_total, R(1, 6));
  EXPECT_EQ(*five.reports[0].gain_ratio, R(1, 3));
  EXPECT_EQ(five.harmful, 1u);
}

TEST(ScanKWay, SplitIntoUnitsLossFactor) {
  // [N+1; N, N] split into N units loses a factor (N+1)/2.
  const auto s = scan_k_way_splits(Game(7, {6, 6}), 1, 6, ss);
  ASSERT_EQ(s.total_splits, 1u);
  EXPECT_EQ(*s.reports[0].gain_ratio, R(2, 7));
}

TEST(ScanKWay, Guards) {
  EXPECT_THROW(scan_k_way_splits(Game(6, {5, 5}), 1, 1, ss), precondition_error);
  EXPECT_THROW(scan_k_way_splits(Game(6, {5, 5}), 1, 7, ss), precondition_error);
  EXPECT_EQ(scan_k_way_splits(Game(6, {3, 5}), 0, 4, ss).total_splits, 0u);
  EXPECT_EQ(integer_partitions(7, 3).size(), 4u);
}

TEST(ScanKWay, MatchesOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Game g = oracle::random_game(rng, 2, 4, 9);
    const player_id p = rng() % g.size();
    for (std::size_t k = 2; k <= 4; ++k)
      for (auto kind : {ss, bz}) {
        const auto s = scan_k_way_splits(g, p, k, kind);
        for (const auto& r : s.reports) {
          ASSERT_EQ(r.payoff_after_total, oracle_after(g, r.spec, kind));
          ASSERT_EQ(r.payoff_before, index(g, kind)[p]);
        }
      }
  }
}

TEST(ScanTwoWay, MatchesOracleOnRandomGames) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Game g = oracle::random_game(rng, 2, 7, 12);
    for (player_id p = 0; p < g.size(); ++p)
      for (auto kind : {ss, bz}) {
        const auto s = scan_two_way_splits(g, p, kind);
        ASSERT_EQ(s.total_splits, g.weight(p) / 2);
        ASSERT_EQ(s.beneficial + s.harmful + s.neutral, s.total_splits);
        for (const auto& r : s.reports) ASSERT_EQ(r.payoff_after_total, oracle_after(g, r.spec, kind));
      }
  }
}

TEST(ScanTwoWay, SameResultForAnyThreadCount) {
  const Game g(31, {12, 9, 7, 5, 4, 3, 3, 2, 1});
  const auto a = scan_two_way_splits(g, 0, bz, 1);
  const auto b = scan_two_way_splits(g, 0, bz, 5);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    EXPECT_EQ(a.reports[i].spec, b.reports[i].spec);
    EXPECT_EQ(a.reports[i].payoff_after_total, b.reports[i].payoff_after_total);
  }
}

TEST(ScanTwoWay, InvariantUnderPermutingOtherPlayers) {
  const Game a(17, {6, 4, 4, 3, 3, 1});
  const Game b(17, {6, 3, 4, 1, 4, 3});
  for (auto kind : {ss, bz}) {
    const auto x = scan_two_way_splits(a, 0, kind);
    const auto y = scan_two_way_splits(b, 0, kind);
    EXPECT_EQ(x.beneficial, y.beneficial);
    EXPECT_EQ(x.harmful, y.harmful);
    EXPECT_EQ(x.neutral, y.neutral);
  }
}

TEST(ScanTwoWay, LargeGameUsesArbitraryPrecision) {
  // 70 unit players plus a heavy one; counts exceed 64 bits.
  std::vector<weight_t> w(70, 1);
  w.push_back(4);
  const Game g(40, w);
  const exact_split_evaluator ev(g, 70, bz, 2);
  const std::vector<weight_t> parts{2, 2};
  const rational after = ev.after(parts);
  EXPECT_GT(after, 0);
  EXPECT_LT(after, 1);
  const auto t = apply_split(g, {70, parts});
  const auto beta = index(t.game, bz);
  EXPECT_EQ(after, beta[t.created[0]] + beta[t.created[1]]);
}

TEST(FindSplit, FindsClearGain) {
  const auto r = find_split_approx(Game(6, {2, 2, 2}), 2, 0.02, 0.01, ss, 7);
  EXPECT_TRUE(r.found);
  EXPECT_EQ(r.spec->parts, (std::vector<weight_t>{1, 1}));
  EXPECT_EQ(r.margin, rational(0.06));
}

TEST(FindSplit, RejectsNeutralSplit) {
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    EXPECT_FALSE(find_split_approx(Game(4, {2, 2, 2}), 2, 0.02, 0.01, ss, seed).found);
}

TEST(FindSplit, DummyGadgetHasNoSplit) {
  const std::vector<weight_t> no_instance{1, 2};
  const auto gadget = reduction_gadget(no_instance, gadget_variant::bi_split);
  const auto r = find_split_approx(gadget.game, gadget.designated[0], 0.02, 0.01, ss, 3);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.baseline, 0);
}

TEST(FindSplit, BanzhafVariant) {
  const auto r = find_split_approx(Game(5, {2, 1, 1, 1, 1}), 0, 0.005, 0.01, bz, 11);
  EXPECT_TRUE(r.found);
  EXPECT_FALSE(find_split_approx(Game(5, {2, 1, 1, 1, 1}), 0, 0.005, 0.01, ss, 11).found);
}

TEST(FindSplit, Deterministic) {
  const Game g(13, {5, 4, 3, 3, 2, 1, 1});
  const auto a = find_split_approx(g, 0, 0.05, 0.05, ss, 9, std::nullopt, 1);
  const auto b = find_split_approx(g, 0, 0.05, 0.05, ss, 9, std::nullopt, 3);
  EXPECT_EQ(a.found, b.found);
  EXPECT_EQ(a.baseline, b.baseline);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_THROW(find_split_approx(g, 0, 0, 0.05), invalid_config);
}

TEST(Merge, UnanimityMergeNeverHelps) {
  const Game g(8, {2, 2, 2, 2});
  for (auto kind : {ss, bz}) {
    const auto r = merge_benefit(g, {0, 1}, kind);
    EXPECT_EQ(r.payoff_before, R(1, 2));
    EXPECT_EQ(r.payoff_after, R(1, 3));
    EXPECT_FALSE(r.beneficial);
  }
  EXPECT_THROW(merge_benefit(g, {0}, ss), precondition_error);
}

TEST(Merge, GadgetFromYesInstance) {
  const std::vector<weight_t> yes{1, 1};
  const auto gd = reduction_gadget(yes, gadget_variant::merge);
  EXPECT_EQ(gd.game, Game(10, {8, 8, 1, 1, 1}));
  for (auto kind : {ss, bz}) EXPECT_TRUE(merge_benefit(gd.game, Coalition(gd.designated), kind).beneficial);
}

TEST(Merge, DummiesStayDummies) {
  const auto r = merge_benefit(Game(14, {8, 16, 1, 1}), {2, 3}, ss);
  EXPECT_EQ(r.payoff_before, 0);
  EXPECT_EQ(r.payoff_after, 0);
  EXPECT_FALSE(r.beneficial);
}

TEST(Annex, BlocParadox) {
  const Game g(11, {6, 5, 1, 1, 1, 1, 1});
  const auto b = annex_benefit(g, 0, {2}, bz);
  EXPECT_EQ(b.payoff_before, R(33, 69));
  EXPECT_EQ(b.payoff_after, R(17, 36));
  EXPECT_FALSE(b.beneficial);
  const auto s = annex_benefit(g, 0, {2}, ss);
  EXPECT_GE(s.payoff_after, s.payoff_before);
  EXPECT_THROW(annex_benefit(g, 0, {0, 1}, ss), precondition_error);
}

TEST(Annex, UnanimityAnnexationHelps) {
  const Game g(10, {2, 2, 2, 2, 2});
  for (auto kind : {ss, bz}) {
    const auto r = annex_benefit(g, 0, {1, 2}, kind);
    EXPECT_EQ(r.payoff_before, R(1, 5));
    EXPECT_EQ(r.payoff_after, R(1, 3));
    EXPECT_TRUE(r.beneficial);
  }
}

TEST(Annex, GadgetFromYesInstance) {
  const std::vector<weight_t> yes{1, 1};
  const auto gd = reduction_gadget(yes, gadget_variant::annex);
  EXPECT_EQ(gd.game, Game(10, {8, 8, 1, 1}));
  EXPECT_TRUE(annex_benefit(gd.game, gd.designated[0], {gd.designated[1]}, bz).beneficial);
}

TEST(AnnexProbe, NonMonotoneBanzhaf) {
  const Game g(9, {3, 3, 2, 1, 1, 1});
  const auto w = annex_monotonicity_probe(g, 0, bz);
  const auto it = std::find_if(w.begin(), w.end(), [](const auto& x) { return x.heavier == 1 && x.lighter == 2; });
  ASSERT_NE(it, w.end());
  EXPECT_EQ(it->after_heavier, R(8, 20));
  EXPECT_EQ(it->after_lighter, R(7, 17));
  EXPECT_TRUE(annex_monotonicity_probe(g, 0, ss).empty());
  EXPECT_TRUE(annex_monotonicity_probe(Game(7, {3, 3, 3, 3}), 0, bz).empty());
}

TEST(AnnexProbe, ShapleyAlwaysEmpty) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Game g = oracle::random_game(rng, 2, 7, 10);
    for (player_id i = 0; i < g.size(); ++i) ASSERT_TRUE(annex_monotonicity_probe(g, i, ss).empty());
  }
}

TEST(SplitBounds, TightInstances) {
  const std::size_t n = 5;
  const auto gain = check_split_bounds(Game(2 * n, std::vector<weight_t>(n, 2)), {0, {1, 1}});
  EXPECT_EQ(*gain.shapley_ratio, R(2 * n, n + 1));
  const auto loss = check_split_bounds(Game(2 * n - 1, std::vector<weight_t>(n, 2)), {0, {1, 1}});
  EXPECT_EQ(*loss.shapley_ratio, R(2, n + 1));
}

TEST(SplitBounds, BanzhafLossInstance) {
  const std::size_t k = 4, n = 2 * k;
  std::vector<weight_t> w(n - 1, 1);
  w.push_back(4 * k);
  const auto r = check_split_bounds(Game(3 * k, w), {n - 1, {2 * k, 2 * k}});
  EXPECT_EQ(r.banzhaf_before, 1);
  // eta of each identity is 2^(n-1); each unit player 2 C(2k-2, k-1).
  const big_int id = big_int(1) << (n - 1);
  const big_int unit = 2 * binomial(2 * k - 2, k - 1);
  EXPECT_EQ(r.banzhaf_after, rational(2 * id, 2 * id + (n - 1) * unit));
  EXPECT_LT(*r.banzhaf_ratio, 1);
  EXPECT_GT(*r.banzhaf_ratio, R(1, n));
}

TEST(SplitBounds, HoldOnRandomGames) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const Game g = oracle::random_game(rng, 1, 7, 12);
    for (player_id p = 0; p < g.size(); ++p)
      for (const auto& spec : two_way_candidates(g, p)) ASSERT_NO_THROW(check_split_bounds(g, spec));
  }
  EXPECT_THROW(check_split_bounds(Game(6, {2, 2, 2}), {0, {2}}), precondition_error);
}

TEST(AnnexBounds, HoldOnRandomGames) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const Game g = oracle::random_game(rng, 3, 7, 10);
    for (player_id i = 0; i < g.size(); ++i)
      for (player_id j = 0; j < g.size(); ++j)
        for (player_id k = j + 1; k < g.size(); ++k)
          if (i != j && i != k) {
            ASSERT_NO_THROW(check_annex_bounds(g, i, j, k));
          }
  }
  EXPECT_THROW(check_annex_bounds(Game(6, {2, 2, 2}), 0, 0, 1), precondition_error);
}

TEST(Recommendations, Unanimity) {
  const auto a = unanimity_split_recommendation(Game(6, {2, 2, 2}));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->parts, (std::vector<weight_t>{1, 1}));
  EXPECT_FALSE(unanimity_split_recommendation(Game(5, {2, 2, 2})));
  const Game g(10, {4, 3, 3});
  const auto b = unanimity_split_recommendation(g);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->player, 0u);
  EXPECT_EQ(b->parts, (std::vector<weight_t>{2, 2}));
  for (auto kind : {ss, bz}) {
    const exact_split_evaluator ev(g, 0, kind);
    EXPECT_EQ(ev.after(b->parts) / ev.before(), R(6, 4));
  }
}

TEST(Recommendations, UnanimityAlwaysBeneficial) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Game r = oracle::random_game(rng, 1, 7, 12);
    const std::vector<weight_t> w(r.weights().begin(), r.weights().end());
    const Game g(r.total_weight(), w);
    const auto spec = unanimity_split_recommendation(g);
    if (g.max_weight() < 2) {
      EXPECT_FALSE(spec);
      continue;
    }
    ASSERT_TRUE(spec);
    for (auto kind : {ss, bz}) {
      const exact_split_evaluator ev(g, spec->player, kind);
      ASSERT_EQ(ev.after(spec->parts) / ev.before(), R(2 * g.size(), g.size() + 1));
    }
  }
}

TEST(Recommendations, HighQuota) {
  const Game g(65, {10, 10, 10, 10, 10, 10, 7});
  const auto spec = high_quota_split_recommendation(g, 6);
  ASSERT_TRUE(spec);
  EXPECT_EQ(spec->parts, (std::vector<weight_t>{4, 3}));
  const exact_split_evaluator ev(g, 6, ss);
  EXPECT_GT(ev.after(spec->parts), ev.before());
  EXPECT_FALSE(high_quota_split_recommendation(Game(6, {2, 2, 2}), 2));
  // b = 5 but w = 9 is not below 2b - 1.
  EXPECT_FALSE(high_quota_split_recommendation(Game(65, {10, 10, 10, 10, 10, 10, 9}), 6));
}

TEST(Gadgets, Shapes) {
  const std::vector<weight_t> yes{1, 1};
  EXPECT_EQ(reduction_gadget(yes, gadget_variant::bi_split).game, Game(10, {8, 8, 2}));
  EXPECT_EQ(reduction_gadget(yes, gadget_variant::ss_split).game, Game(11, {8, 8, 1, 2}));
  EXPECT_EQ(reduction_gadget(yes, gadget_variant::bi_split).designated, std::vector<player_id>{2});
  EXPECT_THROW(reduction_gadget(std::vector<weight_t>{}, gadget_variant::merge), precondition_error);
}

TEST(Gadgets, DecidePartition) {
  // A beneficial manipulation by the designated players exists iff the
  // instance splits into two equal halves.
  const std::vector<std::vector<weight_t>> instances{{1, 1}, {1, 2}, {1, 2, 3}, {2, 3, 4}, {1, 1, 1}, {3, 1, 1, 2, 2, 1}};
  for (const auto& a : instances) {
    const bool yes = oracle::partition_exists(a);
    const auto sh = reduction_gadget(a, gadget_variant::ss_split);
    EXPECT_EQ(scan_two_way_splits(sh.game, sh.designated[0], ss).beneficial > 0, yes);
    const auto mg = reduction_gadget(a, gadget_variant::merge);
    EXPECT_EQ(merge_benefit(mg.game, Coalition(mg.designated), ss).beneficial, yes);
    const auto an = reduction_gadget(a, gadget_variant::annex);
    EXPECT_EQ(annex_benefit(an.game, an.designated[0], {an.designated[1]}, bz).beneficial, yes);
  }
}

TEST(Gadgets, BanzhafSplitGadgetIsNeutral) {
  // With w = 2 the only split is (1, 1). Counting critical coalitions gives
  // eta_i = x + 2 y_i before and 2 x + 4 y_i after for every heavy player i,
  // and eta = x for each identity, where x counts half-weight subsets. The
  // normalized total is therefore unchanged: the split is neutral on "yes"
  // instances and dummy-to-dummy on "no" instances.
  const std::vector<std::vector<weight_t>> instances{{1, 1}, {1, 2, 3}, {3, 1, 1, 2, 2, 1}, {1, 2}, {2, 3, 4}};
  for (const auto& a : instances) {
    const auto bi = reduction_gadget(a, gadget_variant::bi_split);
    const auto s = scan_two_way_splits(bi.game, bi.designated[0], bz);
    ASSERT_EQ(s.total_splits, 1u);
    EXPECT_EQ(s.neutral, 1u);
    EXPECT_EQ(s.reports[0].payoff_after_total, oracle_after(bi.game, s.reports[0].spec, bz));
    EXPECT_EQ(s.reports[0].payoff_before > 0, oracle::partition_exists(a));
  }
}

}  // namespace
}  // namespace wvg
