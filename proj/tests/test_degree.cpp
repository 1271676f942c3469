#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace dualgr;

TEST(Degree, KnownValues) {
  EXPECT_EQ(feasible_degrees(3, 6), (std::vector<int>{3, 6, 9}));
  EXPECT_EQ(feasible_degrees(3, 7), (std::vector<int>{6, 12}));
  EXPECT_EQ(feasible_degrees(3, 8), (std::vector<int>{15}));
  EXPECT_EQ(feasible_degrees(3, 10), (std::vector<int>{21}));
  EXPECT_EQ(feasible_degrees(5, 12), (std::vector<int>{35}));
}

TEST(Degree, MatchesRectangleCount) {
  // d is feasible iff a k-row rectangle of size (k-2)d exists whose column
  // count c = (k-2)d/k also makes 2d split evenly over N-k values.
  for (int k = 2; k <= 7; ++k)
    for (int N = k + 1; N <= 16; ++N) {
      std::vector<int> brute;
      for (int d = 1; d <= k * (N - k); ++d) {
        bool rect = false;
        for (int c = 0; c <= (k - 2) * d; ++c) rect = rect || c * k == (k - 2) * d;
        bool split = false;
        for (int e = 1; e <= 2 * d; ++e) split = split || e * (N - k) == 2 * d;
        if (rect && split) brute.push_back(d);
      }
      EXPECT_EQ(feasible_degrees(k, N), brute) << k << "," << N;
    }
}

TEST(Degree, TotalIsAlwaysFeasibleForKThree) {
  for (int N = 6; N <= 30; ++N) {
    auto d = feasible_degrees(3, N);
    ASSERT_FALSE(d.empty());
    EXPECT_EQ(d.back(), 3 * (N - 3));
  }
}

TEST(Degree, Witness) {
  DegreeWitness w = cauchy_degree_witness(5, 12, 35);
  EXPECT_EQ(w.rect_width, 21);
  EXPECT_EQ(w.rect_height, 5);
  EXPECT_EQ(w.first_dividend, 105);
  EXPECT_EQ(w.second_dividend, 70);
  EXPECT_THROW(cauchy_degree_witness(3, 8, 9), std::invalid_argument);
  EXPECT_THROW(feasible_degrees(1, 4), std::invalid_argument);
}
