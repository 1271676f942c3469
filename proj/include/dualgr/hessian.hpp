#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dualgr/exterior_form.hpp"
#include "dualgr/matrix.hpp"

namespace dualgr {

/// Hessian of F(A, ·) in chart coordinates. Row (p, t) sits at
/// (p-1)(N-k) + (t-k-1): k blocks of height N-k.
template <class T>
struct HessianMatrix {
  int k = 0, N = 0;
  Matrix<T> m;

  HessianMatrix() = default;
  HessianMatrix(int k_, int N_) : k(k_), N(N_), m(side_of(k_, N_), side_of(k_, N_)) {}
  HessianMatrix(int k_, int N_, Matrix<T> mat) : k(k_), N(N_), m(std::move(mat)) {
    if (m.rows() != side_of(k, N) || !m.square()) throw std::invalid_argument("Hessian must be k(N-k) square");
  }

  static std::size_t side_of(int k, int N) {
    if (k < 1 || N <= k) throw std::invalid_argument("Hessian shape needs 1 <= k < N");
    return static_cast<std::size_t>(k * (N - k));
  }
  std::size_t side() const { return m.rows(); }
  std::size_t block_size() const { return static_cast<std::size_t>(N - k); }

  /// (p, t) label of a row.
  std::pair<int, int> label(std::size_t row) const {
    return {static_cast<int>(row / block_size()) + 1, static_cast<int>(row % block_size()) + k + 1};
  }

  T& at(int p, int t, int p2, int t2) { return m(chart_variable(k, N, p, t), chart_variable(k, N, p2, t2)); }
  const T& at(int p, int t, int p2, int t2) const { return m(chart_variable(k, N, p, t), chart_variable(k, N, p2, t2)); }

  /// Block (i, j), 1-based, of size (N-k)×(N-k).
  Matrix<T> block(int i, int j) const {
    std::size_t b = block_size();
    return m.block((i - 1) * b, (j - 1) * b, b, b);
  }

  void set_block(int i, int j, const Matrix<T>& B) {
    std::size_t b = block_size();
    if (B.rows() != b || B.cols() != b) throw std::invalid_argument("block has wrong size");
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t c = 0; c < b; ++c) m((i - 1) * b + r, (j - 1) * b + c) = B(r, c);
  }

  bool operator==(const HessianMatrix& o) const { return k == o.k && N == o.N && m == o.m; }
};

using IntHessian = HessianMatrix<Integer>;

/// Literal second partials of F(A, ·) at the origin.
template <class T>
HessianMatrix<T> assemble(const Chart& chart, const ExteriorArray<T>& A) {
  chart.check(A.k(), A.N());
  HessianMatrix<T> H(A.k(), A.N());
  for (const auto& term : chart.hessian_terms()) {
    T a = A.get(chart.space()[term.index]);
    if (is_zero(a)) continue;
    T v = a * convert<T>::from(term.coeff);
    H.m(term.u, term.v) = H.m(term.u, term.v) + v;
    if (term.u != term.v) H.m(term.v, term.u) = H.m(term.v, term.u) + v;
  }
  return H;
}

template <class T>
HessianMatrix<T> assemble(const ExteriorArray<T>& A) {
  return assemble(Chart(A.k(), A.N()), A);
}

/// Second partials of F(A, ·) at an arbitrary chart point.
template <class T>
HessianMatrix<T> hessian_at(const Chart& chart, const ExteriorArray<T>& A, const Matrix<T>& X) {
  MultiPoly<T> F = dehomogenized_polynomial(chart, A);
  std::vector<T> pt = flatten_chart_point(X);
  HessianMatrix<T> H(A.k(), A.N());
  const std::size_t n = chart.num_variables();
  for (std::size_t u = 0; u < n; ++u) {
    MultiPoly<T> Fu = F.derivative(u);
    for (std::size_t v = u; v < n; ++v) {
      T val = Fu.derivative(v).evaluate(pt);
      H.m(u, v) = val;
      H.m(v, u) = val;
    }
  }
  return H;
}

/// Hessian at the centre of the chart around span(e_{N-k+1..N}); rows are
/// labelled (p, s) with p the position in I^ℓ and s in 1..N-k.
template <class T>
HessianMatrix<T> assemble_dual(const Chart& chart, const ExteriorArray<T>& A) {
  return assemble(chart, dual_chart_array(A));
}

template <class T>
HessianMatrix<T> assemble_dual(const ExteriorArray<T>& A) {
  return assemble(dual_chart_array(A));
}

/// The independent Hessian entries a^{tt'}_{pp'}, p < p', t < t', in the
/// order used for symbolic variables.
struct SymbolicSlot {
  int p, p2, t, t2;
};

inline std::vector<SymbolicSlot> symbolic_slots(int k, int N) {
  std::vector<SymbolicSlot> s;
  for (int p = 1; p <= k; ++p)
    for (int p2 = p + 1; p2 <= k; ++p2)
      for (int t = k + 1; t <= N; ++t)
        for (int t2 = t + 1; t2 <= N; ++t2) s.push_back({p, p2, t, t2});
  return s;
}

inline std::vector<std::string> symbolic_variable_names(int k, int N) {
  std::vector<std::string> names;
  for (const auto& s : symbolic_slots(k, N))
    names.push_back("a_" + std::to_string(s.p) + "_" + std::to_string(s.p2) + "_" + std::to_string(s.t) + "_" +
                    std::to_string(s.t2));
  return names;
}

/// Array whose quadratic coefficients are the fresh variables a_p_p'_t_t'
/// (positional); everything else is zero.
inline ExteriorArray<IntPoly> symbolic_array(int k, int N) {
  auto slots = symbolic_slots(k, N);
  ExteriorArray<IntPoly> A(k, N);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    MultiIndex tuple = first_index(k);
    tuple[slots[i].p - 1] = slots[i].t;
    tuple[slots[i].p2 - 1] = slots[i].t2;
    A.set_positional(tuple, IntPoly::variable(slots.size(), i));
  }
  return A;
}

inline HessianMatrix<IntPoly> assemble_symbolic(int k, int N) { return assemble(symbolic_array(k, N)); }

/// Located failures of the Hessian shape: symmetry, zero diagonal blocks,
/// skew off-diagonal blocks.
template <class T>
std::vector<std::string> structure_violations(const HessianMatrix<T>& H) {
  std::vector<std::string> out;
  const std::size_t n = H.side(), b = H.block_size();
  auto where = [&](std::size_t r, std::size_t c) {
    auto [p, t] = H.label(r);
    auto [p2, t2] = H.label(c);
    return "(" + std::to_string(p) + "," + std::to_string(t) + ")x(" + std::to_string(p2) + "," + std::to_string(t2) + ")";
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r < c && !(H.m(r, c) == H.m(c, r))) out.push_back("not symmetric at " + where(r, c));
      bool same_block = r / b == c / b;
      if (same_block && !is_zero(H.m(r, c))) out.push_back("nonzero diagonal-block entry at " + where(r, c));
      if (!same_block && r / b < c / b) {
        std::size_t rr = (r / b) * b + c % b, cc = (c / b) * b + r % b;
        if (!(H.m(r, c) == T(-H.m(rr, cc)))) out.push_back("block not skew at " + where(r, c));
      }
    }
  return out;
}

/// Hessian-shaped matrix from its upper blocks A_ij (i < j); the lower block
/// (j, i) is -A_ij and diagonal blocks vanish.
template <class T>
HessianMatrix<T> from_upper_blocks(int k, int N, const std::map<std::pair<int, int>, Matrix<T>>& blocks) {
  HessianMatrix<T> H(k, N);
  for (const auto& [ij, B] : blocks) {
    auto [i, j] = ij;
    if (i < 1 || j > k || i >= j) throw std::invalid_argument("upper block indices must satisfy 1 <= i < j <= k");
    H.set_block(i, j, B);
    H.set_block(j, i, B.template map<T>([](const T& x) { return T(-x); }));
  }
  return H;
}

/// Array with quadratic coefficients read from the upper blocks of H.
template <class T>
ExteriorArray<T> array_from_hessian(const HessianMatrix<T>& H) {
  ExteriorArray<T> A(H.k, H.N);
  for (const auto& s : symbolic_slots(H.k, H.N)) {
    MultiIndex tuple = first_index(H.k);
    tuple[s.p - 1] = s.t;
    tuple[s.p2 - 1] = s.t2;
    A.set_positional(tuple, H.at(s.p, s.t, s.p2, s.t2));
  }
  return A;
}

/// Hessian with independent entries uniform in [-bound, bound]; entries in
/// the listed upper blocks (i, j) are left zero.
inline IntHessian random_hessian(int k, int N, Rng& rng, int bound = 3, const std::set<std::pair<int, int>>& zero_blocks = {}) {
  IntHessian H(k, N);
  for (const auto& s : symbolic_slots(k, N)) {
    if (zero_blocks.count({s.p, s.p2})) continue;
    Integer v = static_cast<long>(rng.uniform(-bound, bound));
    H.at(s.p, s.t, s.p2, s.t2) = v;
    H.at(s.p2, s.t2, s.p, s.t) = v;
    H.at(s.p, s.t2, s.p2, s.t) = -v;
    H.at(s.p2, s.t, s.p, s.t2) = -v;
  }
  return H;
}

template <class T>
T det_exact(const HessianMatrix<T>& H) {
  return det(H.m);
}

inline std::size_t rank_exact(const IntHessian& H) { return rank_exact(H.m); }
inline std::size_t corank(const IntHessian& H) { return H.side() - rank_exact(H); }

/// Rank of block row i: the N-k rows labelled (i, ·).
inline std::size_t block_row_rank(const IntHessian& H, int i) {
  return rank_exact(H.m.block((i - 1) * H.block_size(), 0, H.block_size(), H.side()));
}

/// Rank of the k rows labelled (·, t): the block rows of the dual Hessian.
inline std::size_t dual_block_row_rank(const IntHessian& H, int t) {
  std::vector<std::size_t> rows, cols(H.side());
  for (int p = 1; p <= H.k; ++p) rows.push_back(chart_variable(H.k, H.N, p, t));
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  return rank_exact(H.m.submatrix(rows, cols));
}

/// 1-based row order regrouping H_{k,N} by value: [1, m+1, 2m+1, ...], [2, ...], ...
/// with m = N-k.
inline std::vector<int> duality_permutation(int k, int N) {
  if (k < 1 || N <= k) throw std::invalid_argument("duality needs 1 <= k < N");
  const int m = N - k;
  std::vector<int> perm;
  for (int j = 1; j <= m; ++j)
    for (int p = 0; p < k; ++p) perm.push_back(p * m + j);
  return perm;
}

template <class T>
HessianMatrix<T> apply_duality(const HessianMatrix<T>& H) {
  std::vector<std::size_t> perm;
  for (int r : duality_permutation(H.k, H.N)) perm.push_back(static_cast<std::size_t>(r - 1));
  return HessianMatrix<T>(H.N - H.k, H.N, H.m.permuted(perm));
}

/// Value split: H(k, a) ⊕ H(k, b) inside H(k, a+b-k), each block A_ij being
/// diag(S1, S2) with S1 from H1 and S2 from H2.
template <class T>
HessianMatrix<T> specialize_embed(const HessianMatrix<T>& H1, const HessianMatrix<T>& H2) {
  if (H1.k != H2.k) throw std::invalid_argument("value split needs equal k");
  const int k = H1.k, m1 = H1.N - k, m2 = H2.N - k;
  HessianMatrix<T> H(k, k + m1 + m2);
  for (int p = 1; p <= k; ++p)
    for (int p2 = 1; p2 <= k; ++p2) {
      for (int s = 0; s < m1; ++s)
        for (int s2 = 0; s2 < m1; ++s2) H.at(p, k + 1 + s, p2, k + 1 + s2) = H1.at(p, k + 1 + s, p2, k + 1 + s2);
      for (int s = 0; s < m2; ++s)
        for (int s2 = 0; s2 < m2; ++s2) H.at(p, k + 1 + m1 + s, p2, k + 1 + m1 + s2) = H2.at(p, k + 1 + s, p2, k + 1 + s2);
    }
  return H;
}

/// Position split: H(k1, k1+m) ⊕ H(k2, k2+m) inside H(k1+k2, k1+k2+m) as a
/// block-diagonal arrangement of block rows.
template <class T>
HessianMatrix<T> specialize_embed_positions(const HessianMatrix<T>& H1, const HessianMatrix<T>& H2) {
  if (H1.N - H1.k != H2.N - H2.k) throw std::invalid_argument("position split needs equal N-k");
  const int k1 = H1.k, k2 = H2.k, m = H1.N - H1.k;
  HessianMatrix<T> H(k1 + k2, k1 + k2 + m);
  for (int i = 1; i <= k1; ++i)
    for (int j = 1; j <= k1; ++j) H.set_block(i, j, H1.block(i, j));
  for (int i = 1; i <= k2; ++i)
    for (int j = 1; j <= k2; ++j) H.set_block(k1 + i, k1 + j, H2.block(i, j));
  return H;
}

/// True iff corank(H) = 1, confirmed by a nonzero cofactor placed on the
/// supports of the left and right kernel vectors (so adj H = λ u vᵀ, λ ≠ 0).
inline bool adjugate_rank_check(const Matrix<Integer>& M) {
  if (!M.square()) throw std::invalid_argument("adjugate check needs a square matrix");
  const std::size_t n = M.rows();
  if (n == 0 || n - rank_exact(M) != 1) return false;
  auto right = nullspace(to_rational(M));
  auto left = nullspace(to_rational(M.transpose()));
  if (right.size() != 1 || left.size() != 1) return false;
  std::size_t i = 0, j = 0;
  while (is_zero(left[0][i])) ++i;
  while (is_zero(right[0][j])) ++j;
  return !is_zero(det(minor_matrix(M, i, j)));
}

inline bool adjugate_rank_check(const IntHessian& H) { return adjugate_rank_check(H.m); }

}  // namespace dualgr
