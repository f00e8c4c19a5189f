#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "susywell/numerics.hpp"
#include "susywell/spectrum2d.hpp"

using namespace susywell;

namespace {

// Brute-force oracle: energy -> sorted set of (n, m).
std::map<std::int64_t, std::set<std::pair<long, long>>> brute(std::int64_t e_max) {
  std::map<std::int64_t, std::set<std::pair<long, long>>> out;
  for (long n = 1; n * n < e_max; ++n) {
    for (long m = 1; n * n + m * m <= e_max; ++m) out[n * n + m * m].insert({n, m});
  }
  return out;
}

std::vector<std::pair<long, long>> pairs(const EnergyLevel& l) {
  std::vector<std::pair<long, long>> v;
  for (const auto& mm : l.members) v.emplace_back(mm.n, mm.m);
  return v;
}

}  // namespace

TEST(Enumerate, SmallTableMatchesHandList) {
  const auto t = enumerate_levels(10);
  ASSERT_EQ(t.size(), 4U);
  EXPECT_EQ(t[0].energy, 2);
  EXPECT_EQ(t[1].energy, 5);
  EXPECT_EQ(t[2].energy, 8);
  EXPECT_EQ(t[3].energy, 10);
  EXPECT_EQ(pairs(t[0]), (std::vector<std::pair<long, long>>{{1, 1}}));
  EXPECT_EQ(pairs(t[1]), (std::vector<std::pair<long, long>>{{1, 2}, {2, 1}}));
  EXPECT_EQ(pairs(t[2]), (std::vector<std::pair<long, long>>{{2, 2}}));
  EXPECT_EQ(pairs(t[3]), (std::vector<std::pair<long, long>>{{1, 3}, {3, 1}}));
}

TEST(Enumerate, AccidentalDegeneracies) {
  const auto t = enumerate_levels(70);
  const auto* l50 = t.find(50);
  ASSERT_NE(l50, nullptr);
  EXPECT_EQ(pairs(*l50), (std::vector<std::pair<long, long>>{{1, 7}, {5, 5}, {7, 1}}));
  const auto* l65 = t.find(65);
  ASSERT_NE(l65, nullptr);
  EXPECT_EQ(pairs(*l65), (std::vector<std::pair<long, long>>{{1, 8}, {4, 7}, {7, 4}, {8, 1}}));
  EXPECT_EQ(t.find(3), nullptr);
}

TEST(Enumerate, MatchesBruteForce) {
  for (std::int64_t e_max : {2, 3, 10, 50, 65, 999, 5000}) {
    const auto t = enumerate_levels(e_max);
    const auto b = brute(e_max);
    ASSERT_EQ(t.size(), b.size()) << "E_max=" << e_max;
    std::size_t nu = 0;
    for (const auto& [e, members] : b) {
      EXPECT_EQ(t[nu].energy, e);
      EXPECT_EQ(t[nu].nu, nu);
      EXPECT_EQ(t[nu].shifted, e - 2);
      const auto got = pairs(t[nu]);
      const std::set<std::pair<long, long>> got_set(got.begin(), got.end());
      EXPECT_EQ(got_set, members);
      ++nu;
    }
  }
}

TEST(Enumerate, RejectsEmptySpectrum) {
  EXPECT_THROW(enumerate_levels(1), std::invalid_argument);
  EXPECT_THROW(enumerate_levels(-4), std::invalid_argument);
}

TEST(Enumerate, AtLeastCount) {
  const auto t = enumerate_at_least(201);
  EXPECT_GE(t.size(), 201U);
  const auto b = brute(t[t.size() - 1].energy);
  EXPECT_EQ(b.size(), t.size());
}

TEST(Invariants, StrictlyIncreasingAnglesAndEnergies) {
  const auto t = enumerate_levels(20000);
  for (std::size_t nu = 0; nu < t.size(); ++nu) {
    if (nu > 0) EXPECT_GT(t[nu].energy, t[nu - 1].energy);
    const auto& a = t[nu].angles;
    for (std::size_t i = 1; i < a.size(); ++i) ASSERT_GT(a[i], a[i - 1]);
  }
}

TEST(Invariants, PermutationClosureAndAngleSymmetry) {
  const auto t = enumerate_levels(20000);
  for (const auto& l : t.levels()) {
    const auto v = pairs(l);
    const std::set<std::pair<long, long>> s(v.begin(), v.end());
    const auto d = l.degeneracy();
    for (std::size_t i = 0; i < d; ++i) {
      ASSERT_TRUE(s.count({v[i].second, v[i].first}));
      EXPECT_NEAR(l.angles[i] + l.angles[d - 1 - i], pi / 2.0, 1e-14);
    }
  }
}

TEST(Invariants, CompletenessCount) {
  const std::int64_t e_max = 20000;
  std::size_t lattice = 0;
  for (long n = 1; n * n < e_max; ++n) {
    for (long m = 1; n * n + m * m <= e_max; ++m) ++lattice;
  }
  std::size_t total = 0;
  const auto table = enumerate_levels(e_max);
  for (const auto& l : table.levels()) total += l.degeneracy();
  EXPECT_EQ(total, lattice);
}

TEST(Moments, SmallValues) {
  const auto t = enumerate_levels(100);
  EXPECT_EQ(moments(t, 0).value.value(), 1.0);
  EXPECT_EQ(moments(t, 1).value.value(), 3.0);
  EXPECT_EQ(moments(t, 3).value.value(), 144.0);
  EXPECT_NEAR(moments(t, 3).log_value, std::log(144.0), 1e-14);
  EXPECT_THROW(moments(t, t.size()), std::out_of_range);
}

TEST(Moments, StrictlyIncreasingFromSecondLevel) {
  const auto t = enumerate_levels(2000);
  for (std::size_t nu = 2; nu < t.size(); ++nu) EXPECT_GT(t.log_moment(nu), t.log_moment(nu - 1));
}

TEST(Moments, OverflowSwitchesToLogOnly) {
  const auto t = enumerate_at_least(400);
  const auto m = moments(t, 399);
  EXPECT_FALSE(m.value.has_value());
  double direct = 0.0;
  for (std::size_t i = 1; i <= 399; ++i) direct += std::log(static_cast<double>(t[i].energy - 2));
  EXPECT_NEAR(m.log_value, direct, 1e-9 * direct);
  ASSERT_TRUE(moments(t, 20).value.has_value());
  EXPECT_NEAR(std::log(*moments(t, 20).value), moments(t, 20).log_value, 1e-12 * moments(t, 20).log_value);
}

TEST(Polar, Levels) {
  const auto t = enumerate_levels(50);
  const auto p2 = polar(t[0]);
  ASSERT_EQ(p2.size(), 1U);
  EXPECT_DOUBLE_EQ(p2[0].rho, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(p2[0].theta, pi / 4.0);

  const auto p5 = polar(t[1]);
  ASSERT_EQ(p5.size(), 2U);
  EXPECT_NEAR(p5[0].theta, std::atan(0.5), 1e-15);
  EXPECT_NEAR(p5[1].theta, std::atan(2.0), 1e-15);

  const auto p50 = polar(*t.find(50));
  ASSERT_EQ(p50.size(), 3U);
  EXPECT_NEAR(p50[1].theta, pi / 4.0, 1e-15);
  for (const auto& pp : p50) EXPECT_DOUBLE_EQ(pp.rho, std::sqrt(50.0));
}
