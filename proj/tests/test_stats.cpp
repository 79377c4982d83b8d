#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "setpart/patterns.hpp"
#include "setpart/stats.hpp"

using namespace setpart;

namespace {

Rgf W(std::string_view s) { return parse_rgf(s); }
Permutation Pm(std::string_view s) { return parse_permutation(s); }

}  // namespace

TEST(Spread, Examples) {
  EXPECT_EQ(spread(W("121")), 2);
  EXPECT_EQ(spread(W("123")), 0);
  EXPECT_EQ(spread(W("12312433")), 11);
  EXPECT_EQ(spread(Rgf()), 0);
}

TEST(Block, Examples) {
  EXPECT_EQ(block(W("122")), 2);
  EXPECT_EQ(block(W("111")), 1);
  EXPECT_EQ(block(Rgf()), 0);
}

TEST(Dim, Examples) {
  EXPECT_EQ(dim(W("121")), 4);
  EXPECT_EQ(dim(W("123")), 3);
  EXPECT_EQ(dim(Rgf()), 0);
  EXPECT_EQ(dim(parse_partition("13/2")), 4);
}

TEST(FirstsLasts, Examples) {
  FirstsLasts fl = firsts_lasts(W("11231"));
  EXPECT_EQ(fl.firsts, (IndexSet{1, 3, 4}));
  EXPECT_EQ(fl.lasts, (IndexSet{3, 4, 5}));
  fl = firsts_lasts(W("123"));
  EXPECT_EQ(fl.firsts, (IndexSet{1, 2, 3}));
  EXPECT_EQ(fl.lasts, (IndexSet{1, 2, 3}));
  fl = firsts_lasts(W("121"));
  EXPECT_EQ(fl.firsts, (IndexSet{1, 2}));
  EXPECT_EQ(fl.lasts, (IndexSet{2, 3}));
}

TEST(Checkpoints, Examples) {
  EXPECT_EQ(checkpoints(W("12213454")), (IndexSet{5}));
  EXPECT_EQ(checkpoints(W("123")), (IndexSet{1, 2, 3}));
  EXPECT_EQ(checkpoints(W("121")), IndexSet{});
  EXPECT_EQ(checkpoints(W("1")), (IndexSet{1}));
  EXPECT_EQ(checkpoints(Rgf()), IndexSet{});
}

TEST(Apices, Examples) {
  EXPECT_EQ(apices(W("12213454")), (IndexSet{2, 7}));
  EXPECT_EQ(apices(W("1234")), IndexSet{});
  EXPECT_EQ(apices(W("121")), (IndexSet{2}));
  EXPECT_EQ(apex_major_index(W("121")), 2);
  EXPECT_EQ(apices(W("1")), IndexSet{});
}

TEST(PermStats, Examples) {
  auto check = [](std::string_view p, int inv, int lrm, int fix, int des, int maj) {
    const StatProfile s = perm_stats(Pm(p));
    EXPECT_EQ(s.at("inv"), inv) << p;
    EXPECT_EQ(s.at("lrm"), lrm) << p;
    EXPECT_EQ(s.at("fix"), fix) << p;
    EXPECT_EQ(s.at("des"), des) << p;
    EXPECT_EQ(s.at("maj"), maj) << p;
  };
  check("231", 2, 2, 0, 1, 2);
  check("312", 2, 1, 0, 1, 1);
  check("12345", 0, 5, 5, 0, 0);
}

TEST(PermStats, MatchOracle) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : enumerate_permutations(n)) {
      const auto o = oracle::perm_stats(p.word());
      ASSERT_EQ(inversions(p), o.inv);
      ASSERT_EQ(static_cast<int>(lrm_indices(p).size()), o.lrm);
      ASSERT_EQ(static_cast<int>(fixed_points(p).size()), o.fix);
      ASSERT_EQ(static_cast<int>(descents(p).size()), o.des);
      ASSERT_EQ(major_index(p), o.maj);
    }
  }
}

TEST(PosVal, Examples) {
  auto bits = [](const BitVector& b) {
    std::string s;
    for (auto x : b) s += x ? '1' : '0';
    return s;
  };
  PosVal pv = pos_val(Pm("132"));
  EXPECT_EQ(bits(pv.pos) + "," + bits(pv.val), "110,101");
  pv = pos_val(Pm("312"));
  EXPECT_EQ(bits(pv.pos) + "," + bits(pv.val), "100,001");
  pv = pos_val(Pm("123"));
  EXPECT_EQ(bits(pv.pos) + "," + bits(pv.val), "111,111");
}

TEST(StatProfile, DimIsSpreadPlusBlock) {
  const StatProfile s = partition_stats(W("12213454"));
  EXPECT_EQ(s.at("dim"), s.at("spread") + s.at("block"));
  EXPECT_EQ(s.at("cp"), 1);
  EXPECT_EQ(s.at("ap"), 2);
  EXPECT_EQ(s.at("maj"), 9);
  EXPECT_THROW(s.at("nope"), std::out_of_range);
  EXPECT_THROW(partition_statistic(W("1"), "nope"), std::invalid_argument);
  EXPECT_THROW(permutation_statistic(Pm("1"), "nope"), std::invalid_argument);
}

TEST(Properties, PartitionStatistics) {
  for (int n = 0; n <= 9; ++n) {
    for (const Rgf& w : rgfs(n)) {
      ASSERT_EQ(dim(w), spread(w) + block(w));
      ASSERT_EQ(spread(w), oracle::spread(from_rgf(w).blocks()));
      const IndexSet lrm = lrm_indices(w);
      ASSERT_EQ(lrm, firsts_lasts(w).firsts);
      const IndexSet cp = checkpoints(w);
      const IndexSet ap = apices(w);
      ASSERT_TRUE(std::includes(lrm.begin(), lrm.end(), cp.begin(), cp.end()));
      ASSERT_TRUE(std::includes(lrm.begin(), lrm.end(), ap.begin(), ap.end()));
      if (n > 0) {
        ASSERT_TRUE(std::find(ap.begin(), ap.end(), n) == ap.end());
      }
    }
  }
}

TEST(Properties, CheckpointAndApexDefinitions) {
  for (int n = 0; n <= 8; ++n) {
    for (const Rgf& w : rgfs(n)) {
      IndexSet cp, ap;
      for (int i = 0; i < n; ++i) {
        bool lrm = true, later_larger = true;
        for (int j = 0; j < i; ++j) lrm = lrm && w[j] < w[i];
        for (int j = i + 1; j < n; ++j) later_larger = later_larger && w[j] > w[i];
        if (lrm && later_larger) cp.push_back(i + 1);
        if (lrm && i + 1 < n && w[i] >= w[i + 1]) ap.push_back(i + 1);
      }
      ASSERT_EQ(checkpoints(w), cp) << format_rgf(w);
      ASSERT_EQ(apices(w), ap) << format_rgf(w);
    }
  }
}

TEST(Properties, InversionsFromLeftToRightMaxima) {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : av321(n)) {
      int total = 0;
      for (int i : lrm_indices(p)) total += p[i - 1] - i;
      ASSERT_EQ(inversions(p), total) << format_permutation(p);
    }
  }
}
