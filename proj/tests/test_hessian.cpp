#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace dualgr;

namespace {

// Mixed second difference with unit steps; exact because F has no square
// terms and each minor uses a variable at most once.
template <class Eval>
Integer second_difference(Eval F, int k, int N, std::size_t u, std::size_t v) {
  auto point = [&](std::initializer_list<std::size_t> on) {
    Matrix<Integer> X(k, N - k);
    for (std::size_t w : on) X(w / (N - k), w % (N - k)) += 1;
    return X;
  };
  if (u == v) return Integer(0);
  return F(point({u, v})) - F(point({u})) - F(point({v})) + F(point({}));
}

}  // namespace

TEST(Hessian, AssemblyMatchesSecondDifferences) {
  Rng rng(31);
  for (auto [k, N] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {3, 7}, {4, 8}}) {
    IntArray A = random_array(k, N, rng);
    IntHessian H = assemble(A);
    auto F = [&](const Matrix<Integer>& X) { return evaluate_form(A, X); };
    for (std::size_t u = 0; u < H.side(); ++u)
      for (std::size_t v = 0; v < H.side(); ++v) ASSERT_EQ(H.m(u, v), second_difference(F, k, N, u, v)) << k << "," << N;
    EXPECT_TRUE(structure_violations(H).empty());
  }
}

TEST(Hessian, EntryIsSignedCoefficient) {
  Rng rng(32);
  IntArray A = random_array(3, 7, rng);
  IntHessian H = assemble(A);
  for (const auto& s : symbolic_slots(3, 7)) {
    MultiIndex tuple = first_index(3);
    tuple[s.p - 1] = s.t;
    tuple[s.p2 - 1] = s.t2;
    EXPECT_EQ(H.at(s.p, s.t, s.p2, s.t2), A.get(tuple));
  }
}

TEST(Hessian, AtOriginEqualsAssembly) {
  Rng rng(33);
  const Chart chart(3, 6);
  IntArray A = random_array(3, 6, rng);
  EXPECT_EQ(hessian_at(chart, A, Matrix<Integer>(3, 3)), assemble(chart, A));
}

TEST(Hessian, DualAssemblyMatchesDualChartDifferences) {
  Rng rng(34);
  IntArray A = random_array(3, 7, rng);
  IntHessian H = assemble_dual(A);
  auto F = [&](const Matrix<Integer>& Y) { return evaluate_frame(A, dual_chart_point(Y, 3, 7)); };
  for (std::size_t u = 0; u < H.side(); ++u)
    for (std::size_t v = 0; v < H.side(); ++v) ASSERT_EQ(H.m(u, v), second_difference(F, 3, 7, u, v));
}

TEST(Hessian, SymbolicShape) {
  auto H = assemble_symbolic(3, 6);
  EXPECT_TRUE(structure_violations(H).empty());
  auto names = symbolic_variable_names(3, 6);
  ASSERT_EQ(names.size(), 9u);
  EXPECT_EQ(H.at(1, 4, 2, 5).to_string(names), "a_1_2_4_5");
  EXPECT_EQ(H.at(1, 5, 2, 4).to_string(names), "-a_1_2_4_5");
  EXPECT_TRUE(H.at(1, 4, 1, 5).is_zero());
}

TEST(Hessian, StructureViolationsAreLocated) {
  Rng rng(35);
  IntHessian H = assemble(random_array(3, 6, rng));
  H.at(1, 4, 2, 5) += 1;
  auto v = structure_violations(H);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v[0].find("(1,4)x(2,5)"), std::string::npos);
}

TEST(Hessian, UpperBlocksRoundTrip) {
  Rng rng(36);
  IntHessian H = random_hessian(4, 8, rng);
  std::map<std::pair<int, int>, Matrix<Integer>> upper;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) upper[{i, j}] = H.block(i, j);
  EXPECT_EQ(from_upper_blocks(4, 8, upper), H);
  EXPECT_EQ(assemble(array_from_hessian(H)), H);
}

TEST(Hessian, DualityPermutationGivesDualShape) {
  EXPECT_EQ(duality_permutation(3, 6), (std::vector<int>{1, 4, 7, 2, 5, 8, 3, 6, 9}));
  Rng rng(37);
  IntHessian H = assemble(random_array(3, 8, rng));
  IntHessian D = apply_duality(H);
  EXPECT_EQ(D.k, 5);
  EXPECT_TRUE(structure_violations(D).empty());
  EXPECT_EQ(det(D.m), det(H.m));
}

TEST(Hessian, SpecializationMultiplies) {
  Rng rng(38);
  for (int trial = 0; trial < 5; ++trial) {
    IntHessian H1 = random_hessian(3, 6, rng), H2 = random_hessian(3, 7, rng);
    IntHessian H = specialize_embed(H1, H2);
    EXPECT_EQ(H.N, 10);
    EXPECT_TRUE(structure_violations(H).empty());
    EXPECT_EQ(det(H.m), det(H1.m) * det(H2.m));
    IntHessian P1 = random_hessian(2, 6, rng), P2 = random_hessian(3, 7, rng);
    IntHessian P = specialize_embed_positions(P1, P2);
    EXPECT_EQ(P.k, 5);
    EXPECT_TRUE(structure_violations(P).empty());
    Integer d = det(P.m), prod = det(P1.m) * det(P2.m);
    EXPECT_TRUE(d == prod || d == -prod);
  }
  EXPECT_THROW(specialize_embed(random_hessian(3, 6, rng), random_hessian(4, 8, rng)), std::invalid_argument);
}

TEST(Hessian, KTwoOddIsSingular) {
  Rng rng(39);
  for (int N : {5, 7}) EXPECT_TRUE(is_zero(det(assemble(random_array(2, N, rng)).m)));
  bool any = false;
  for (int trial = 0; trial < 5; ++trial) any = any || !is_zero(det(assemble(random_array(2, 6, rng)).m));
  EXPECT_TRUE(any);
}

TEST(Hessian, BlockRowRanksAndAdjugate) {
  Matrix<Integer> m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_TRUE(adjugate_rank_check(m));
  EXPECT_FALSE(adjugate_rank_check(Matrix<Integer>::identity(3)));
  IntHessian H(3, 5);
  EXPECT_EQ(block_row_rank(H, 1), 0u);
  EXPECT_EQ(corank(H), 6u);
}
