#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "test_util.hpp"

using namespace dualgr;

namespace {

std::vector<int> row_of(const Matrix<Integer>& m, std::size_t r) {
  std::vector<int> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(static_cast<int>(m(r, c).get_si()));
  return out;
}

}  // namespace

TEST(Certificates, IdsAndPayloads) {
  auto ids = certificate_ids();
  EXPECT_EQ(ids.size(), 10u);
  EXPECT_EQ(row_of(load_certificate("corank-3-9").blocks.at("A12"), 0), (std::vector<int>{0, 1, 0, 0, 1, 0}));
  EXPECT_EQ(row_of(load_certificate("node-3-9").blocks.at("A12"), 0), (std::vector<int>{0, 2, 3, 2, 1, 2}));
  Certificate inv = load_certificate("invertible-4-8");
  EXPECT_EQ(inv.blocks.at("H").rows(), 16u);
  EXPECT_EQ(inv.blocks.at("H").cols(), 16u);
  EXPECT_THROW(load_certificate("corank-9-9"), std::invalid_argument);
}

TEST(Certificates, ChecksumsAreStable) {
  for (const auto& id : certificate_ids()) EXPECT_EQ(checksum(load_certificate(id)), embedded_checksum(id));
  EXPECT_EQ(fnv1a64(""), 14695981039346656037ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(checksum_hex(0xabcULL), "0000000000000abc");
}

TEST(Certificates, EveryEmbeddedCertificateVerifies) {
  for (const auto& id : certificate_ids()) {
    VerifyReport r = verify_certificate(load_certificate(id));
    EXPECT_TRUE(r.pass) << id << " " << r.to_json().dump();
    EXPECT_TRUE(structure_violations(certificate_hessian(load_certificate(id))).empty()) << id;
  }
}

TEST(Certificates, CorankValuesAreIndependent) {
  const std::vector<std::pair<std::string, std::size_t>> expected = {{"corank-3-9", 17},  {"corank-3-10", 20}, {"corank-3-11", 23},
                                                                     {"corank-4-8", 15},  {"corank-4-9", 19},  {"corank-5-10", 24}};
  for (const auto& [id, rank] : expected) {
    IntHessian H = certificate_hessian(load_certificate(id));
    EXPECT_EQ(testutil::gauss_rank(H.m), rank) << id;
    for (int i = 1; i <= H.k; ++i)
      EXPECT_EQ(testutil::gauss_rank(H.m.block((i - 1) * H.block_size(), 0, H.block_size(), H.side())), H.block_size()) << id;
  }
}

TEST(Certificates, InvertibleDeterminant) {
  VerifyReport r = verify_certificate(load_certificate("invertible-4-8"));
  ASSERT_TRUE(r.det.has_value());
  EXPECT_EQ(*r.det, det_bareiss(certificate_hessian(load_certificate("invertible-4-8")).m));
  EXPECT_FALSE(is_zero(*r.det));
}

TEST(Certificates, CorruptedCopyFailsWithLocation) {
  Certificate c = load_certificate("corank-4-8");
  c.blocks.at("A13")(1, 2) += 1;
  VerifyReport r = verify_certificate(c);
  EXPECT_FALSE(r.pass);
  bool located = false;
  for (const auto& d : r.discrepancies) located = located || d.find("A13[2][3]") != std::string::npos;
  EXPECT_TRUE(located) << r.to_json().dump();
}

TEST(Certificates, ExportImportRoundTrip) {
  for (const auto& id : certificate_ids()) {
    Certificate c = load_certificate(id);
    json j = export_certificate(c);
    Certificate back = import_certificate(json::parse(j.dump()));
    EXPECT_EQ(canonical_form(back), canonical_form(c));
    EXPECT_EQ(export_certificate(back).dump(), j.dump());
  }
}

TEST(Certificates, ImportRejectsBadInput) {
  json j = export_certificate(load_certificate("corank-3-9"));
  json short_row = j;
  short_row.erase("checksum");
  short_row["blocks"]["A12"][0].erase(0);
  EXPECT_THROW(import_certificate(short_row), std::invalid_argument);
  json tampered = j;
  tampered["blocks"]["A12"][0][0] = 4;
  EXPECT_THROW(import_certificate(tampered), std::invalid_argument);
  json wrong_size = j;
  wrong_size.erase("checksum");
  wrong_size["N"] = 10;
  EXPECT_THROW(import_certificate(wrong_size), std::invalid_argument);
  EXPECT_THROW(import_certificate(json::parse("[1,2]")), std::invalid_argument);
}

TEST(Certificates, UserCandidateIsVerifiable) {
  Rng rng(51);
  IntHessian H = random_hessian(3, 9, rng);
  Certificate c{"candidate", "corank1", 3, 9, {}, ""};
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) c.blocks.emplace("A" + std::to_string(i) + std::to_string(j), H.block(i, j));
  Certificate back = import_certificate(export_certificate(c));
  VerifyReport r = verify_certificate(back);
  ASSERT_TRUE(r.corank.has_value());
  EXPECT_EQ(*r.corank, H.side() - rank_exact(H));
  EXPECT_EQ(r.pass, *r.corank == 1 && adjugate_rank_check(H));
}

TEST(Builder, ReachesLargerCases) {
  for (auto [k, N] : std::vector<std::pair<int, int>>{{3, 12}, {3, 15}, {4, 10}, {4, 11}, {5, 13}, {6, 12}, {7, 14}}) {
    Certificate c = build_corank_certificate(k, N, 0);
    VerifyReport r = verify_certificate(c);
    EXPECT_TRUE(r.pass) << k << "," << N << " " << r.to_json().dump();
    EXPECT_EQ(*r.rank, static_cast<std::size_t>(k * (N - k) - 1));
  }
  EXPECT_THROW(build_corank_certificate(3, 8, 0), std::invalid_argument);
}

TEST(Builder, EmbeddedCaseReturnsEmbeddedMatrix) {
  EXPECT_EQ(build_corank_hessian(4, 9, 0), certificate_hessian(load_certificate("corank-4-9")));
}
