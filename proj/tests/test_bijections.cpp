#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "setpart/bijections.hpp"
#include "setpart/patterns.hpp"

using namespace setpart;

namespace {

Rgf W(std::string_view s) { return parse_rgf(s); }
BallotPair B(std::string_view s) { return BallotPair::parse(s); }

BallotPair from_oracle(const std::vector<int>& p, const std::vector<int>& v) {
  return BallotPair(BitVector(p.begin(), p.end()), BitVector(v.begin(), v.end()));
}

}  // namespace

TEST(BallotPair, Validation) {
  EXPECT_NO_THROW(B("110,011"));
  EXPECT_NO_THROW(BallotPair());
  EXPECT_THROW(B("011,011"), std::invalid_argument);
  EXPECT_THROW(B("110,01"), std::invalid_argument);
  EXPECT_THROW(B("11,1x"), std::invalid_argument);
  // The prefix condition at i = n rules this out even though the totals agree.
  EXPECT_THROW(B("10,10"), std::invalid_argument);
  EXPECT_EQ(B("101,011").to_string(), "101,011");
}

TEST(BallotPair, CountIsCatalan) {
  for (int n = 0; n <= 10; ++n) {
    const auto pairs = oracle::ballot_pairs(n);
    EXPECT_EQ(static_cast<std::int64_t>(pairs.size()), oracle::catalan(n)) << "n=" << n;
  }
}

TEST(Tau, Examples) {
  EXPECT_EQ(tau(W("12345")), W("12345"));
  EXPECT_EQ(tau(W("1123")), W("1233"));
  EXPECT_EQ(tau(W("1231")), W("1231"));
  EXPECT_THROW(tau(W("1233")), std::invalid_argument);
  EXPECT_THROW(tau_inverse(W("1213")), std::invalid_argument);
}

TEST(Tau, MembershipMatchesAvoidance) {
  for (int n = 0; n <= 8; ++n) {
    for (const Rgf& w : rgfs(n)) {
      ASSERT_EQ(in_class_1_23(w), avoids_all(w, PatternSet::parse("1/23"))) << format_rgf(w);
      ASSERT_EQ(in_class_12_3(w), avoids_all(w, PatternSet::parse("12/3"))) << format_rgf(w);
    }
  }
}

TEST(Tau, StatisticPreservingBijection) {
  for (int n = 0; n <= 10; ++n) {
    std::set<Rgf> image;
    std::size_t domain = 0;
    for_each_avoider(n, PatternSet::parse("1/23"), [&](const Rgf& w) {
      ++domain;
      const Rgf v = tau(w);
      ASSERT_TRUE(in_class_12_3(v)) << format_rgf(w);
      ASSERT_EQ(spread(v), spread(w)) << format_rgf(w);
      ASSERT_EQ(block(v), block(w)) << format_rgf(w);
      ASSERT_EQ(tau_inverse(v), w) << format_rgf(w);
      image.insert(v);
    });
    std::set<Rgf> target;
    for_each_avoider(n, PatternSet::parse("12/3"), [&](const Rgf& v) { target.insert(v); });
    ASSERT_EQ(image.size(), domain);
    ASSERT_EQ(image, target) << "n=" << n;
  }
}

TEST(ToBallot, Examples) {
  EXPECT_EQ(to_ballot(W("121")), B("110,011"));
  EXPECT_EQ(to_ballot(W("123")), B("111,111"));
  EXPECT_EQ(to_ballot(W("111")), B("100,001"));
  EXPECT_EQ(to_ballot(W("112")), B("101,011"));
  EXPECT_EQ(to_ballot(W("122")), B("110,101"));
  EXPECT_THROW(to_ballot(W("1212")), std::invalid_argument);
}

TEST(FromBallot, Examples) {
  EXPECT_EQ(from_ballot(B("110,011")), W("121"));
  EXPECT_EQ(from_ballot(B("111,111")), W("123"));
  EXPECT_EQ(from_ballot(B("101,011")), W("112"));
}

TEST(Ballot, NoncrossingBijection) {
  for (int n = 0; n <= 9; ++n) {
    std::set<BallotPair> image;
    std::size_t count = 0;
    for_each_avoider(n, PatternSet::parse("13/24"), [&](const Rgf& w) {
      ++count;
      const BallotPair b = to_ballot(w);
      ASSERT_EQ(from_ballot(b), w) << format_rgf(w);
      image.insert(b);
    });
    std::set<BallotPair> all;
    for (const auto& [p, v] : oracle::ballot_pairs(n)) {
      const BallotPair b = from_oracle(p, v);
      ASSERT_EQ(to_ballot(from_ballot(b)), b);
      all.insert(b);
    }
    ASSERT_EQ(image.size(), count);
    ASSERT_EQ(image, all) << "n=" << n;
  }
}

TEST(BallotToPerm, Examples) {
  EXPECT_EQ(format_permutation(ballot_to_perm(B("110,101"))), "132");
  EXPECT_EQ(format_permutation(ballot_to_perm(B("100,001"))), "312");
  EXPECT_EQ(ballot_to_perm(B("1111,1111")), Permutation::identity(4));
  EXPECT_EQ(perm_to_ballot(parse_permutation("231")), B("110,011"));
  EXPECT_EQ(perm_to_ballot(parse_permutation("213")), B("101,011"));
  EXPECT_EQ(perm_to_ballot(Permutation::identity(3)), B("111,111"));
  EXPECT_THROW(perm_to_ballot(parse_permutation("321")), std::invalid_argument);
}

TEST(BallotToPerm, InverseOnAv321) {
  for (int n = 0; n <= 9; ++n) {
    std::set<Permutation> image;
    for (const auto& [p, v] : oracle::ballot_pairs(n)) {
      const BallotPair b = from_oracle(p, v);
      const Permutation perm = ballot_to_perm(b);
      ASSERT_FALSE(oracle::has_321(perm.word()));
      ASSERT_EQ(perm_to_ballot(perm), b);
      image.insert(perm);
    }
    const auto avoiders = av321(n);
    ASSERT_EQ(image, std::set<Permutation>(avoiders.begin(), avoiders.end())) << "n=" << n;
  }
}

TEST(PartitionToPerm, Examples) {
  EXPECT_EQ(format_permutation(partition_to_perm(W("121"))), "231");
  EXPECT_EQ(format_permutation(partition_to_perm(W("123"))), "123");
  EXPECT_EQ(format_permutation(partition_to_perm(W("111"))), "312");
  EXPECT_EQ(perm_to_partition(parse_permutation("231")), W("121"));
  EXPECT_THROW(partition_to_perm(W("1212")), std::invalid_argument);
}

TEST(PartitionToPerm, StatisticTransfers) {
  for (int n = 0; n <= 9; ++n) {
    for_each_avoider(n, PatternSet::parse("13/24"), [&](const Rgf& w) {
      const Permutation s = partition_to_perm(w);
      ASSERT_EQ(spread(w), inversions(s)) << format_rgf(w);
      ASSERT_EQ(block(w), static_cast<int>(lrm_indices(s).size())) << format_rgf(w);
      ASSERT_EQ(checkpoints(w), fixed_points(s)) << format_rgf(w);
      ASSERT_EQ(apices(w), descents(s)) << format_rgf(w);
      ASSERT_EQ(apex_major_index(w), major_index(s)) << format_rgf(w);
    });
  }
}
