#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dualgr.hpp"

namespace testutil {

using namespace dualgr;

/// Sum over permutations; only for small matrices.
template <class T>
T leibniz_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = T(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    T prod = T(1);
    for (std::size_t i = 0; i < n; ++i) prod = prod * m(i, perm[i]);
    total = inversions % 2 ? T(total - prod) : T(total + prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank by plain Gaussian elimination over Q.
inline std::size_t gauss_rank(const Matrix<Integer>& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// All k-subsets of {1..N} by bitmask, sorted lexicographically.
inline std::vector<MultiIndex> brute_indices(int k, int N) {
  std::vector<MultiIndex> out;
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    MultiIndex I;
    for (int b = 0; b < N; ++b)
      if (mask & (1u << b)) I.push_back(b + 1);
    out.push_back(I);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testutil
