#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dualgr {

/// Degrees d in [1, k(N-k)] that an irreducible factor of det H_{k,N} may
/// have: k | (k-2)d and (N-k) | 2d.
inline std::vector<int> feasible_degrees(int k, int N) {
  if (k < 2 || N <= k) throw std::invalid_argument("feasible degrees need 2 <= k < N");
  std::vector<int> out;
  const int total = k * (N - k);
  for (int d = 1; d <= total; ++d)
    if (((k - 2) * d) % k == 0 && (2 * d) % (N - k) == 0) out.push_back(d);
  return out;
}

struct DegreeWitness {
  int k, N, d;
  int rect_width;   // (k-2)d/k columns of the rectangular partition
  int rect_height;  // k rows
  int first_dividend;   // (k-2)d, divisible by k
  int second_dividend;  // 2d, divisible by N-k
  std::string rule;

  std::string describe() const {
    return "rectangle " + std::to_string(rect_width) + "x" + std::to_string(rect_height) + "; " + std::to_string(k) + "|" +
           std::to_string(first_dividend) + ", " + std::to_string(N - k) + "|" + std::to_string(second_dividend);
  }
};

/// Why d passes both divisibility tests; throws if it does not.
inline DegreeWitness cauchy_degree_witness(int k, int N, int d) {
  if (k < 2 || N <= k) throw std::invalid_argument("feasible degrees need 2 <= k < N");
  if (d < 1 || d > k * (N - k) || ((k - 2) * d) % k != 0 || (2 * d) % (N - k) != 0)
    throw std::invalid_argument("degree " + std::to_string(d) + " is not feasible for (" + std::to_string(k) + "," +
                                std::to_string(N) + ")");
  DegreeWitness w{k, N, d, (k - 2) * d / k, k, (k - 2) * d, 2 * d, ""};
  w.rule = k == 3 ? "k=3: 3|d and (N-3)|2d" : "general: k|(k-2)d and (N-k)|2d (necessary condition)";
  return w;
}

}  // namespace dualgr
