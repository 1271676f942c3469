#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dualgr {

struct CertificateRecord {
  std::string id, kind;
  int k, N;
  std::vector<std::pair<std::string, std::vector<std::vector<int>>>> blocks;
  std::string claim;
  std::uint64_t checksum;
};

/// Embedded certificate payloads. Blocks are upper Hessian blocks A_ij
/// as printed (lower blocks are their negatives); "H" is a full matrix.
inline const std::vector<CertificateRecord>& certificate_records() {
  static const std::vector<CertificateRecord> records = {
      {"corank-3-9", "corank1", 3, 9,
       {
        {"A12",
         {{0, 1, 0, 0, 1, 0},
          {-1, 0, 1, 0, 1, 1},
          {0, -1, 0, 0, 1, 0},
          {0, 0, 0, 0, 0, 0},
          {-1, -1, -1, 0, 0, 0},
          {0, -1, 0, 0, 0, 0}}},
        {"A13",
         {{0, 0, 1, 1, 0, 1},
          {0, 0, 0, 1, 0, 1},
          {-1, 0, 0, 0, 1, 0},
          {-1, -1, 0, 0, 1, 0},
          {0, 0, -1, -1, 0, 1},
          {-1, -1, 0, 0, -1, 0}}},
        {"A23",
         {{0, 1, 1, 0, 1, 1},
          {-1, 0, 0, 1, 1, 1},
          {-1, 0, 0, 0, 0, 0},
          {0, -1, 0, 0, 0, 0},
          {-1, -1, 0, 0, 0, 1},
          {-1, -1, 0, 0, -1, 0}}},
       },
       "rank k(N-k)-1 with every block row of full rank",
       0x6eec1724446a3e0fULL},
      {"corank-3-10", "corank1", 3, 10,
       {
        {"A12",
         {{0, 0, 0, 1, 1, 0, 0},
          {0, 0, 0, 1, 0, 0, 0},
          {0, 0, 0, 1, 0, 1, 1},
          {-1, -1, -1, 0, 1, 0, 1},
          {-1, 0, 0, -1, 0, 1, 0},
          {0, 0, -1, 0, -1, 0, 1},
          {0, 0, -1, -1, 0, -1, 0}}},
        {"A13",
         {{0, 1, 0, 0, 0, 1, 1},
          {-1, 0, 1, 0, 0, 1, 1},
          {0, -1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 1, 1, 0},
          {0, 0, 0, -1, 0, 0, 0},
          {-1, -1, 0, -1, 0, 0, 1},
          {-1, -1, 0, 0, 0, -1, 0}}},
        {"A23",
         {{0, 0, 0, 0, 1, 1, 1},
          {0, 0, 0, 1, 0, 0, 0},
          {0, 0, 0, 1, 0, 0, 0},
          {0, -1, -1, 0, 0, 0, 1},
          {-1, 0, 0, 0, 0, 1, 1},
          {-1, 0, 0, 0, -1, 0, 0},
          {-1, 0, 0, -1, -1, 0, 0}}},
       },
       "rank k(N-k)-1 with every block row of full rank",
       0x7177536943f3a23fULL},
      {"corank-3-11", "corank1", 3, 11,
       {
        {"A12",
         {{0, 1, 0, 0, 1, 1, 0, 0},
          {-1, 0, 0, 1, 1, 1, 1, 1},
          {0, 0, 0, 0, 0, 1, 1, 0},
          {0, -1, 0, 0, 1, 1, 0, 1},
          {-1, -1, 0, -1, 0, 0, 1, 1},
          {-1, -1, -1, -1, 0, 0, 0, 1},
          {0, -1, -1, 0, -1, 0, 0, 0},
          {0, -1, 0, -1, -1, -1, 0, 0}}},
        {"A13",
         {{0, 1, 1, 0, 0, 1, 1, 0},
          {-1, 0, 0, 1, 1, 0, 0, 1},
          {-1, 0, 0, 0, 1, 0, 1, 1},
          {0, -1, 0, 0, 0, 0, 0, 1},
          {0, -1, -1, 0, 0, 1, 0, 0},
          {-1, 0, 0, 0, -1, 0, 1, 1},
          {-1, 0, -1, 0, 0, -1, 0, 0},
          {0, -1, -1, -1, 0, -1, 0, 0}}},
        {"A23",
         {{0, 1, 0, 0, 1, 1, 0, 0},
          {-1, 0, 0, 0, 0, 1, 1, 1},
          {0, 0, 0, 0, 0, 1, 0, 1},
          {0, 0, 0, 0, 1, 1, 1, 1},
          {-1, 0, 0, -1, 0, 0, 1, 0},
          {-1, -1, -1, -1, 0, 0, 0, 1},
          {0, -1, 0, -1, -1, 0, 0, 0},
          {0, -1, -1, -1, 0, -1, 0, 0}}},
       },
       "rank k(N-k)-1 with every block row of full rank",
       0x3ac07607702ee83dULL},
      {"corank-4-8", "corank1", 4, 8,
       {
        {"A12",
         {{0, 0, 1, 1},
          {0, 0, 0, 1},
          {-1, 0, 0, 0},
          {-1, -1, 0, 0}}},
        {"A13",
         {{0, 0, 0, 0},
          {0, 0, 0, 1},
          {0, 0, 0, 1},
          {0, -1, -1, 0}}},
        {"A14",
         {{0, 1, 0, 1},
          {-1, 0, 0, 1},
          {0, 0, 0, 0},
          {-1, -1, 0, 0}}},
        {"A23",
         {{0, 0, 1, 0},
          {0, 0, 1, 1},
          {-1, -1, 0, 0},
          {0, -1, 0, 0}}},
        {"A24",
         {{0, 0, 0, 1},
          {0, 0, 0, 1},
          {0, 0, 0, 1},
          {-1, -1, -1, 0}}},
        {"A34",
         {{0, 0, 0, 0},
          {0, 0, 0, 0},
          {0, 0, 0, 0},
          {0, 0, 0, 0}}},
       },
       "rank k(N-k)-1 with every block row of full rank",
       0xedae38ca3e80ceb6ULL},
      {"corank-4-9", "corank1", 4, 9,
       {
        {"A12",
         {{0, 0, 1, 1, 0},
          {0, 0, 1, 0, 1},
          {-1, -1, 0, 0, 1},
          {-1, 0, 0, 0, 0},
          {0, -1, -1, 0, 0}}},
        {"A13",
         {{0, 1, 1, 1, 1},
          {-1, 0, 0, 1, 0},
          {-1, 0, 0, 1, 0},
          {-1, -1, -1, 0, 0},
          {-1, 0, 0, 0, 0}}},
        {"A14",
         {{0, 0, 0, 0, 0},
          {0, 0, 1, 0, 1},
          {0, -1, 0, 0, 1},
          {0, 0, 0, 0, 0},
          {0, -1, -1, 0, 0}}},
        {"A23",
         {{0, 0, 0, 1, 1},
          {0, 0, 0, 0, 0},
          {0, 0, 0, 1, 1},
          {-1, 0, -1, 0, 1},
          {-1, 0, -1, -1, 0}}},
        {"A24",
         {{0, 1, 1, 0, 0},
          {-1, 0, 0, 0, 1},
          {-1, 0, 0, 0, 1},
          {0, 0, 0, 0, 0},
          {0, -1, -1, 0, 0}}},
        {"A34",
         {{0, 1, 1, 1, 0},
          {-1, 0, 1, 0, 1},
          {-1, -1, 0, 0, 1},
          {-1, 0, 0, 0, 0},
          {0, -1, -1, 0, 0}}},
       },
       "rank k(N-k)-1 with every block row of full rank",
       0x95403e7ee624352bULL},
      {"corank-5-10", "corank1", 5, 10,
       {
        {"A12",
         {{0, -1, -1, 0, -1},
          {1, 0, 0, -1, -1},
          {1, 0, 0, -1, -1},
          {0, 1, 1, 0, -1},
          {1, 1, 1, 1, 0}}},
        {"A13",
         {{0, 0, -1, -1, -1},
          {0, 0, -1, -1, -1},
          {1, 1, 0, 0, -1},
          {1, 1, 0, 0, -1},
          {1, 1, 1, 1, 0}}},
        {"A14",
         {{0, 0, 0, -1, 0},
          {0, 0, -1, -1, -1},
          {0, 1, 0, 0, -1},
          {1, 1, 0, 0, 0},
          {0, 1, 1, 0, 0}}},
        {"A15",
         {{0, 0, -1, 0, 0},
          {0, 0, 0, 0, 0},
          {1, 0, 0, -1, 0},
          {0, 0, 1, 0, -1},
          {0, 0, 0, 1, 0}}},
        {"A23",
         {{0, 0, 0, -1, 0},
          {0, 0, -1, -1, -1},
          {0, 1, 0, -1, 0},
          {1, 1, 1, 0, -1},
          {0, 1, 0, 1, 0}}},
        {"A24",
         {{0, 0, -1, 0, -1},
          {0, 0, -1, 0, -1},
          {1, 1, 0, 0, 0},
          {0, 0, 0, 0, -1},
          {1, 1, 0, 1, 0}}},
        {"A25",
         {{0, 0, -1, 0, 0},
          {0, 0, 0, -1, 0},
          {1, 0, 0, -1, 0},
          {0, 1, 1, 0, -1},
          {0, 0, 0, 1, 0}}},
        {"A34",
         {{0, 0, -1, 0, -1},
          {0, 0, 0, 0, 0},
          {1, 0, 0, -1, 0},
          {0, 0, 1, 0, -1},
          {1, 0, 0, 1, 0}}},
        {"A35",
         {{0, 0, 0, 0, -1},
          {0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0},
          {0, 0, 0, 0, -1},
          {1, 0, 0, 1, 0}}},
        {"A45",
         {{0, 0, 0, -1, 0},
          {0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0},
          {1, 0, 0, 0, -1},
          {0, 0, 0, 1, 0}}},
       },
       "rank k(N-k)-1 with every block row of full rank",
       0x657101a520a684cdULL},
      {"invertible-4-8", "invertible", 4, 8,
       {
        {"H",
         {{0, 0, 0, 0, 0, 1, 1, 1, 0, -1, 0, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, -1, 0, 1, 0, 1, 0, -1, 0, 0, 0, 1, 0},
          {0, 0, 0, 0, -1, -1, 0, 0, 0, 1, 0, -1, -1, -1, 0, 0},
          {0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
          {0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},
          {1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0},
          {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
          {1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
          {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {-1, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0},
          {0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0},
          {1, 1, 0, 0, -1, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0}}},
       },
       "nonzero determinant",
       0x12aae78a10fae4e3ULL},
      {"node-3-9", "nodepair", 3, 9,
       {
        {"A12",
         {{0, 2, 3, 2, 1, 2},
          {-2, 0, 1, 0, 3, 2},
          {-3, -1, 0, 1, 3, 2},
          {-2, 0, -1, 0, 0, 0},
          {-1, -3, -3, 0, 0, 0},
          {-2, -2, -2, 0, 0, 0}}},
        {"A13",
         {{0, -3, -2, -2, -3, -1},
          {3, 0, 0, -2, 0, -1},
          {2, 0, 0, -1, -3, -3},
          {2, 2, 1, 0, 0, 0},
          {3, 0, 3, 0, 0, 0},
          {1, 1, 3, 0, 0, 0}}},
        {"A23",
         {{0, 2, 0, 0, 3, 3},
          {-2, 0, 1, 1, 0, 2},
          {0, -1, 0, 2, 1, 0},
          {0, -1, -2, 0, 0, 0},
          {-3, 0, -1, 0, 0, 0},
          {-3, -2, 0, 0, 0, 0}}},
       },
       "H(x0) invertible; completes to an invertible H(x') satisfying the shared-entry conditions",
       0x7fba121082daab87ULL},
      {"node-3-10", "nodepair", 3, 10,
       {
        {"A12",
         {{0, 1, 0, 0, 0, 2, 0},
          {-1, 0, 2, 1, 0, 2, 2},
          {0, -2, 0, 2, 0, 2, 2},
          {0, -1, -2, 0, 2, 0, 0},
          {0, 0, 0, -2, 0, 0, 0},
          {-2, -2, -2, 0, 0, 0, 0},
          {0, -2, -2, 0, 0, 0, 0}}},
        {"A13",
         {{0, -2, -1, -2, -1, -1, -1},
          {2, 0, -1, -2, -1, 0, -1},
          {1, 1, 0, -1, -2, -2, -1},
          {2, 2, 1, 0, -1, 0, -1},
          {1, 1, 2, 1, 0, 0, 0},
          {1, 0, 2, 0, 0, 0, 0},
          {1, 1, 1, 1, 0, 0, 0}}},
        {"A23",
         {{0, 1, 2, 2, 1, 1, 2},
          {-1, 0, 1, 2, 1, 2, 1},
          {-2, -1, 0, 2, 0, 1, 0},
          {-2, -2, -2, 0, 0, 2, 1},
          {-1, -1, 0, 0, 0, 0, 0},
          {-1, -2, -1, -2, 0, 0, 0},
          {-2, -1, 0, -1, 0, 0, 0}}},
       },
       "H(x0) invertible; completes to an invertible H(x') satisfying the shared-entry conditions",
       0xb423c5e6cdd6c902ULL},
      {"node-3-11", "nodepair", 3, 11,
       {
        {"A12",
         {{0, 1, 0, 2, 2, 2, 0, 1},
          {-1, 0, 0, 0, 0, 0, 1, 2},
          {0, 0, 0, 1, 2, 1, 1, 0},
          {-2, 0, -1, 0, 1, 0, 2, 0},
          {-2, 0, -2, -1, 0, 0, 2, 2},
          {-2, 0, -1, 0, 0, 0, 0, 0},
          {0, -1, -1, -2, -2, 0, 0, 0},
          {-1, -2, 0, 0, -2, 0, 0, 0}}},
        {"A13",
         {{0, -1, -1, -1, -1, -2, -1, -2},
          {1, 0, -1, 0, -2, -2, 0, 0},
          {1, 1, 0, -1, 0, 0, 0, -1},
          {1, 0, 1, 0, 0, -1, -2, -2},
          {1, 2, 0, 0, 0, 0, -1, 0},
          {2, 2, 0, 1, 0, 0, 0, 0},
          {1, 0, 0, 2, 1, 0, 0, 0},
          {2, 0, 1, 2, 0, 0, 0, 0}}},
        {"A23",
         {{0, 1, 0, 2, 1, 2, 2, 2},
          {-1, 0, 0, 1, 1, 0, 0, 2},
          {0, 0, 0, 0, 1, 2, 2, 0},
          {-2, -1, 0, 0, 2, 0, 0, 2},
          {-1, -1, -1, -2, 0, 1, 0, 0},
          {-2, 0, -2, 0, -1, 0, 0, 0},
          {-2, 0, -2, 0, 0, 0, 0, 0},
          {-2, -2, 0, -2, 0, 0, 0, 0}}},
       },
       "H(x0) invertible; completes to an invertible H(x') satisfying the shared-entry conditions",
       0xaadbccf2784538c4ULL},
  };
  return records;
}

}  // namespace dualgr
