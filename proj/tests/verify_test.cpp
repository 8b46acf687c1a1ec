#include "wvg/verify.hpp"

#include <gtest/gtest.h>

namespace wvg {
namespace {

TEST(Verify, FixturesPass) {
  const auto rep = verify(verify_suite::fixtures);
  for (const auto& r : rep.results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  EXPECT_GE(rep.results.size(), 30u);
}

TEST(Verify, CorruptedFixtureFails) {
  auto table = fixture_table();
  table[7].expected = "1/2,1/4,1/4";
  const auto rep = run_cases(table);
  EXPECT_FALSE(rep.passed());
  EXPECT_EQ(rep.failures(), 1u);
  EXPECT_FALSE(rep.results[7].passed);
  EXPECT_NE(rep.results[7].detail.find("expected 1/2,1/4,1/4"), std::string::npos);
}

TEST(Verify, ExceptionsAreFailures) {
  const auto rep = run_cases({{"fixtures", "throws", [] { return to_fraction(index(Game(3, {1, 1}), index_kind::banzhaf)[5]); }, "0"}});
  EXPECT_FALSE(rep.passed());
}

TEST(Verify, RandomSuitesPassAndAreDeterministic) {
  const auto a = verify(verify_suite::bounds, 60, 7);
  const auto b = verify(verify_suite::bounds, 60, 7);
  ASSERT_TRUE(a.passed());
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) EXPECT_EQ(a.results[i].detail, b.results[i].detail);
  EXPECT_TRUE(verify(verify_suite::oracle, 60, 3).passed());
}

}  // namespace
}  // namespace wvg
