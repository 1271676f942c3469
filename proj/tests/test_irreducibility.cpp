#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace dualgr;

namespace {

const ScheduleStep* find_step(const std::vector<ScheduleStep>& steps, int k, int N) {
  for (const auto& s : steps)
    if (s.k == k && s.N == N) return &s;
  return nullptr;
}

bool has_pattern(const ScheduleStep& s, DegreeMultiset d) {
  d = normalized(d);
  for (const auto& p : s.patterns)
    if (p.degrees == d) return true;
  return false;
}

}  // namespace

TEST(Irreducibility, Coarsenings) {
  EXPECT_EQ(coarsenings({3, 3, 3}), (std::set<DegreeMultiset>{{3, 3, 3}, {6, 3}, {9}}));
  EXPECT_EQ(coarsenings({6, 6}).size(), 2u);
  EXPECT_EQ(coarsenings({1, 2, 3}).size(), 5u);  // set partitions of three distinct parts
}

TEST(Irreducibility, FeasibleMultisets) {
  auto m = feasible_multisets(12, {6, 12});
  EXPECT_EQ(m, (std::set<DegreeMultiset>{{6, 6}, {12}}));
}

TEST(Irreducibility, VerdictForThreeEleven) {
  Verdict v = irreducible_verdict(3, 11, {{{3, 3, 3, 15}, "a"}, {{6, 6, 6, 6}, "b"}});
  EXPECT_TRUE(v.irreducible);
  Verdict one = irreducible_verdict(3, 11, {{{6, 6, 6, 6}, "b"}});
  EXPECT_FALSE(one.irreducible);
  EXPECT_EQ(one.candidates, (std::set<DegreeMultiset>{{12, 12}, {24}}));
  EXPECT_THROW(irreducible_verdict(3, 11, {{{3, 3, 3}, "bad"}}), std::invalid_argument);
}

TEST(Irreducibility, SinglePatternAtThreeSix) {
  Verdict v = irreducible_verdict(3, 6, {{{3, 3, 3}, "cube"}});
  EXPECT_FALSE(v.irreducible);
  EXPECT_EQ(v.candidates.size(), 3u);
  Verdict w = irreducible_verdict(3, 6, {{{9}, "whole"}});
  EXPECT_TRUE(w.candidates.count({9}) == 1);
}

TEST(Irreducibility, ScheduleKThree) {
  auto steps = run_schedule(3, 20);
  FactorOracle oracle;
  for (int N = 8; N <= 20; ++N) {
    const FactorInfo& f = oracle.resolve(3, N);
    EXPECT_EQ(f.status, FactorStatus::known) << N;
    EXPECT_EQ(f.degrees, DegreeMultiset{3 * (N - 3)}) << N;
  }
  const ScheduleStep* s = find_step(oracle.steps(), 3, 11);
  ASSERT_NE(s, nullptr);
  EXPECT_TRUE(has_pattern(*s, {3, 3, 3, 15}));
  EXPECT_TRUE(has_pattern(*s, {6, 6, 6, 6}));
  EXPECT_EQ(oracle.resolve(3, 6).degrees, (DegreeMultiset{3, 3, 3}));
  EXPECT_EQ(oracle.resolve(3, 7).degrees, (DegreeMultiset{6, 6}));
}

TEST(Irreducibility, ScheduleKFourAndFive) {
  FactorOracle oracle;
  for (int N = 8; N <= 16; ++N) EXPECT_EQ(oracle.resolve(4, N).degrees, DegreeMultiset{4 * (N - 4)}) << N;
  const FactorInfo& f = oracle.resolve(5, 11);
  EXPECT_EQ(f.degrees, DegreeMultiset{30});
  const ScheduleStep* s = find_step(oracle.steps(), 5, 11);
  ASSERT_NE(s, nullptr);
  EXPECT_TRUE(has_pattern(*s, {15, 15}));
  EXPECT_TRUE(has_pattern(*s, {18, 3, 3, 3, 3}));
  const ScheduleStep* s4 = find_step(oracle.steps(), 4, 10);
  ASSERT_NE(s4, nullptr);
  EXPECT_TRUE(has_pattern(*s4, {2, 2, 2, 2, 16}));
}

TEST(Irreducibility, DualityAndSmallCases) {
  FactorOracle oracle;
  EXPECT_EQ(oracle.resolve(2, 7).status, FactorStatus::zero);
  EXPECT_EQ(oracle.resolve(2, 8).degrees, (DegreeMultiset{3, 3, 3, 3}));
  EXPECT_EQ(oracle.resolve(1, 5).status, FactorStatus::zero);
  EXPECT_EQ(oracle.resolve(5, 8).degrees, oracle.resolve(3, 8).degrees);
  EXPECT_EQ(oracle.resolve(4, 5).status, FactorStatus::zero);
}

TEST(Irreducibility, ContradictingTableIsRejected) {
  KnownFactorTable t = KnownFactorTable::defaults();
  t.add(3, 11, {12, 12}, "wrong");
  FactorOracle oracle(t);
  EXPECT_THROW(oracle.resolve(3, 11), std::logic_error);
}
