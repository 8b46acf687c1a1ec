#include "wvg/index_mc.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace wvg {
namespace {

using oracle::R;

// Reference values computed with 50-digit arithmetic:
//   ln(200000) / 2e-6 = 6103036.3227...
//   ln(200)    / 2e-4 = 26491.586...
TEST(SampleSize, MatchesHighPrecisionOracle) {
  EXPECT_EQ(sample_size(0.001, 0.00001), 6103037u);
  EXPECT_EQ(sample_size(0.01, 0.01), 26492u);
  EXPECT_EQ(sample_size(0.5, 2.0 / std::exp(2.0)), 4u);
}

TEST(SampleSize, RejectsOutOfRange) {
  EXPECT_THROW(sample_size(0, 0.1), invalid_config);
  EXPECT_THROW(sample_size(0.1, 1), invalid_config);
  EXPECT_THROW(sample_size(-0.1, 0.1), invalid_config);
  McConfig c{0.1, 0.1, 0, 0};
  EXPECT_THROW(samples_for(c), invalid_config);
}

TEST(ShapleyMc, WithinEpsilon) {
  const McConfig c{0.01, 0.01, 42};
  const auto e = shapley_mc(Game(6, {2, 2, 2}), 0, c);
  EXPECT_EQ(e.samples, 26492u);
  EXPECT_LE(std::fabs(to_double(e.value()) - 1.0 / 3), 0.01);

  const auto f = shapley_mc(Game(5, {2, 1, 1, 1, 1}), 0, c);
  EXPECT_LE(std::fabs(to_double(f.value()) - 0.4), 0.01);
}

TEST(ShapleyMc, DummyIsExactlyZero) {
  // {4, 3} is the only minimal winning coalition; the unit player is a dummy.
  const Game g(6, {4, 3, 1});
  ASSERT_EQ(banzhaf_counts_dp(g, 2), 0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(shapley_mc(g, 2, {0.05, 0.05, seed}).hits, 0u);
    EXPECT_EQ(banzhaf_raw_mc(g, 2, {0.05, 0.05, seed}).hits, 0u);
  }
}

TEST(ShapleyMc, DeterministicAcrossThreadCounts) {
  const Game g(13, {5, 4, 3, 3, 2, 1, 1});
  McConfig c{0.01, 0.001, 99};
  c.threads = 1;
  const auto a = shapley_mc(g, 1, c);
  c.threads = 4;
  const auto b = shapley_mc(g, 1, c);
  c.threads = 7;
  const auto d = banzhaf_raw_mc(g, 1, c);
  c.threads = 1;
  EXPECT_EQ(a, b);
  EXPECT_EQ(d, banzhaf_raw_mc(g, 1, c));
  c.seed = 100;
  EXPECT_NE(shapley_mc(g, 1, c).hits, a.hits);
}

TEST(ShapleyMc, OverrideSampleCount) {
  McConfig c{0.1, 0.1, 1, 17};
  EXPECT_EQ(shapley_mc(Game(6, {2, 2, 2}), 0, c).samples, 17u);
}

TEST(ShapleyMc, StatisticalContract) {
  // Over 200 seeds the miss rate should not exceed delta plus a binomial margin
  // (3 standard deviations of a Bernoulli(delta) mean over 200 runs).
  const Game g(5, {2, 1, 1, 1, 1});
  const double eps = 0.03, delta = 0.1;
  int misses = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    if (std::fabs(to_double(shapley_mc(g, 0, {eps, delta, seed}).value()) - 0.4) > eps) ++misses;
  EXPECT_LE(misses / 200.0, delta + 3 * std::sqrt(delta * (1 - delta) / 200));
}

TEST(BanzhafMc, NormalizedEstimates) {
  const McConfig c{0.01, 0.01, 5};
  auto r = banzhaf_mc(Game(6, {2, 2, 2}), c);
  rational sum = 0;
  for (const auto& v : r.normalized.values) {
    EXPECT_NEAR(to_double(v), 1.0 / 3, 0.02);
    sum += v;
  }
  EXPECT_EQ(sum, 1);

  const Game g(5, {2, 1, 1, 1, 1});
  auto s = banzhaf_mc(g, c);
  // raw sum s = 17/16; bound 2 * 0.01 * 5 / (17/16)
  const double bound = normalized_error_bound(0.01, 5, R(17, 16));
  EXPECT_NEAR(bound, 0.0941176, 1e-6);
  EXPECT_LE(std::fabs(to_double(s.normalized[0]) - 5.0 / 17), bound);
  for (const auto& raw : s.raw) EXPECT_EQ(raw.kind, estimate_kind::banzhaf_raw);

  EXPECT_EQ(banzhaf_mc(Game(3, {7}), c).normalized.values, std::vector{R(1)});
}

TEST(BanzhafMc, NormalizedBoundHoldsStatistically) {
  // Every raw estimate carries (eps, delta); the normalized bound must hold in
  // at least 1 - n*delta of the runs.
  const Game g(5, {2, 1, 1, 1, 1});
  const auto exact = index(g, index_kind::banzhaf);
  const double eps = 0.02, delta = 0.01;
  const double bound = normalized_error_bound(eps, g.size(), R(17, 16));
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto r = banzhaf_mc(g, {eps, delta, seed});
    for (player_id i = 0; i < g.size(); ++i)
      if (std::fabs(to_double(r.normalized[i] - exact[i])) > bound) {
        ++failures;
        break;
      }
  }
  EXPECT_LE(failures / 200.0, g.size() * delta + 3 * std::sqrt(0.05 * 0.95 / 200));
}

TEST(BanzhafMc, DegenerateNormalization) {
  McConfig c{0.1, 0.1, 3, 1};
  // One sample per player: with 40 unit players and quota 40, only the grand
  // coalition wins, so a single random coalition is almost never critical.
  const Game g(40, std::vector<weight_t>(40, 1));
  EXPECT_THROW(banzhaf_mc(g, c), degenerate_normalization);
}

}  // namespace
}  // namespace wvg
