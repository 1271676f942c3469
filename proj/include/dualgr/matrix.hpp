#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dualgr/ring.hpp"

namespace dualgr {

/// Dense row-major matrix over any ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : r_(rows), c_(cols), d_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
      d_.insert(d_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
  const T& at(std::size_t i, std::size_t j) const {
    if (i >= r_ || j >= c_) throw std::out_of_range("matrix index out of range");
    return d_[i * c_ + j];
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t l = 0; l < a.c_; ++l) {
        if (is_zero(a(i, l))) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) = m(i, j) + a(i, l) * b(l, j);
      }
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.d_.size(); ++i) m.d_[i] = m.d_[i] + b.d_[i];
    return m;
  }

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = at(rows[i], cols[j]);
    return m;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = at(r0 + i, c0 + j);
    return m;
  }

  /// Same permutation on rows and columns: result(a, b) = this(perm[a], perm[b]).
  Matrix permuted(const std::vector<std::size_t>& perm) const { return submatrix(perm, perm); }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = i + 1; j < c_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  template <class U, class F>
  Matrix<U> map(F f) const {
    Matrix<U> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> d_;
};

/// Division-free determinant by expansion along rows over column subsets.
/// Exponential in n; meant for small matrices and as a cross-check.
template <class T>
T det_cofactor(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n > 20) throw std::invalid_argument("cofactor expansion limited to n <= 20");
  // minors[mask] = det of rows 0..popcount(mask)-1 against the columns in mask.
  std::vector<T> cur(std::size_t{1} << n, T(0)), next(std::size_t{1} << n, T(0));
  std::vector<std::uint32_t> masks{0};
  cur[0] = T(1);
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<std::uint32_t> produced;
    for (std::uint32_t mask : masks) {
      if (is_zero(cur[mask])) continue;
      int higher = 0;  // columns in mask above j, for the sign of inserting j
      for (int j = static_cast<int>(n) - 1; j >= 0; --j) {
        std::uint32_t bit = 1u << j;
        if (mask & bit) {
          ++higher;
          continue;
        }
        if (is_zero(m(row, j))) continue;
        T term = cur[mask] * m(row, j);
        std::uint32_t nm = mask | bit;
        if (is_zero(next[nm])) produced.push_back(nm);
        if (higher % 2)
          next[nm] = next[nm] - term;
        else
          next[nm] = next[nm] + term;
      }
      cur[mask] = T(0);
    }
    std::sort(produced.begin(), produced.end());
    produced.erase(std::unique(produced.begin(), produced.end()), produced.end());
    masks.clear();
    for (auto nm : produced)
      if (!is_zero(next[nm])) masks.push_back(nm);
    std::swap(cur, next);
  }
  return cur[(std::size_t{1} << n) - 1];
}

/// Fraction-free Gaussian elimination with exact division; valid over any
/// integral domain with exact_div. Small matrices go through cofactors.
template <class T>
T det_bareiss(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n < 5) return det_cofactor(m);
  T prev = T(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(v, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return sign < 0 ? T(-d) : d;
}

template <class T>
T det(const Matrix<T>& m) {
  return det_bareiss(m);
}

/// Polynomial entries swell badly under elimination; sparse expansion over
/// column subsets is far cheaper at the sizes used here.
template <class C>
MultiPoly<C> det(const Matrix<MultiPoly<C>>& m) {
  return m.rows() <= 16 ? det_cofactor(m) : det_bareiss(m);
}

/// In-place reduced row echelon form over a field; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of the right kernel {v : m v = 0} over a field.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[f] = F(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank modulo P; a lower bound for the rank over Q.
template <std::uint64_t P>
std::size_t rank_mod_p(const Matrix<Integer>& m) {
  Matrix<Zp<P>> z = m.template map<Zp<P>>([](const Integer& x) { return Zp<P>(x); });
  return rref(z).size();
}

/// Exact rank over Z by fraction-free elimination with full pivoting.
inline std::size_t rank_fraction_free(Matrix<Integer> m) {
  const std::size_t R = m.rows(), C = m.cols();
  Integer prev = 1;
  std::size_t k = 0;
  for (; k < std::min(R, C); ++k) {
    std::size_t pi = R, pj = C;
    for (std::size_t i = k; i < R && pi == R; ++i)
      for (std::size_t j = k; j < C; ++j)
        if (!is_zero(m(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == R) break;
    if (pi != k)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(k, j), m(pi, j));
    if (pj != k)
      for (std::size_t i = 0; i < R; ++i) std::swap(m(i, k), m(i, pj));
    for (std::size_t i = k + 1; i < R; ++i) {
      for (std::size_t j = k + 1; j < C; ++j) m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return k;
}

/// Exact rank over Q: a modular pass settles full rank, otherwise
/// fraction-free elimination decides.
inline std::size_t rank_exact(const Matrix<Integer>& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  if (rank_mod_p<kDefaultPrime>(m) == full) return full;
  return rank_fraction_free(m);
}

/// Clears denominators row by row; rank and row space are unchanged.
inline Matrix<Integer> clear_denominators(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

inline std::size_t rank_exact(const Matrix<Rational>& m) { return rank_exact(clear_denominators(m)); }

template <class T>
Matrix<T> stack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() && b.rows() && a.cols() != b.cols()) throw std::invalid_argument("stacking matrices of different widths");
  Matrix<T> m(a.rows() + b.rows(), a.rows() ? a.cols() : b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

/// Row spaces of a and b coincide over Q.
inline bool same_row_space(const Matrix<Integer>& a, const Matrix<Integer>& b) {
  std::size_t ra = rank_exact(a), rb = rank_exact(b);
  return ra == rb && rank_exact(stack(a, b)) == ra;
}

template <class T>
Matrix<T> minor_matrix(const Matrix<T>& m, std::size_t skip_row, std::size_t skip_col) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (i != skip_row) rows.push_back(i);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j != skip_col) cols.push_back(j);
  return m.submatrix(rows, cols);
}

/// Classical adjugate: adj(i, j) = (-1)^(i+j) det of m without row j, column i.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T d = det(minor_matrix(m, j, i));
      a(i, j) = (i + j) % 2 ? T(-d) : d;
    }
  return a;
}

inline Matrix<Rational> to_rational(const Matrix<Integer>& m) {
  return m.map<Rational>([](const Integer& x) { return Rational(x); });
}

}  // namespace dualgr
