#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualgr/matrix.hpp"
#include "dualgr/multiindex.hpp"
#include "dualgr/random.hpp"
#include "dualgr/ring.hpp"

namespace dualgr {

/// Coefficients a_I of an element of Λ^k(C^N)^*, stored on sorted keys only.
/// Reads through unsorted or repeated tuples resolve the alternating sign.
template <class T>
class ExteriorArray {
 public:
  ExteriorArray() = default;
  ExteriorArray(int k, int N) : k_(k), N_(N) {
    if (k < 1 || N < k) throw std::invalid_argument("exterior array needs 1 <= k <= N");
  }

  int k() const { return k_; }
  int N() const { return N_; }
  const std::map<MultiIndex, T>& entries() const { return e_; }

  T get(const MultiIndex& I) const {
    if (static_cast<int>(I.size()) != k_) throw std::invalid_argument("index arity differs from k");
    SignedIndex s = sort_with_sign(I, N_);
    if (s.sign == 0) return T(0);
    auto it = e_.find(s.index);
    if (it == e_.end()) return T(0);
    return s.sign > 0 ? it->second : T(-it->second);
  }

  /// Stores a coefficient under a sorted key.
  void set(const MultiIndex& I, const T& v) {
    if (static_cast<int>(I.size()) != k_) throw std::invalid_argument("index arity differs from k");
    check_range(I, N_);
    if (!is_strictly_increasing(I)) throw std::invalid_argument("array keys must be strictly increasing: " + to_string(I));
    if (is_zero(v))
      e_.erase(I);
    else
      e_[I] = v;
  }

  /// Stores v at a positional tuple, i.e. sets the sorted key to sign * v.
  void set_positional(const MultiIndex& tuple, const T& v) {
    SignedIndex s = sort_with_sign(tuple, N_);
    if (s.sign == 0) throw std::invalid_argument("positional tuple has repeated values");
    set(s.index, s.sign > 0 ? v : T(-v));
  }

  template <class U, class F>
  ExteriorArray<U> map(F f) const {
    ExteriorArray<U> out(k_, N_);
    for (const auto& [I, v] : e_) out.set(I, f(v));
    return out;
  }

  bool operator==(const ExteriorArray& o) const { return k_ == o.k_ && N_ == o.N_ && e_ == o.e_; }

 private:
  int k_ = 0, N_ = 0;
  std::map<MultiIndex, T> e_;
};

using IntArray = ExteriorArray<Integer>;

template <class U, class T>
ExteriorArray<U> lift(const ExteriorArray<T>& a) {
  return a.template map<U>([](const T& x) { return convert<U>::from(x); });
}

/// Coefficient of I^f with value t_i placed at position p_i. Colliding values
/// read 0; colliding positions are an error.
template <class T>
T positional_get(const ExteriorArray<T>& A, const std::vector<int>& values, const std::vector<int>& positions) {
  if (values.size() != positions.size()) throw std::invalid_argument("values and positions differ in length");
  MultiIndex tuple = first_index(A.k());
  std::vector<bool> used(A.k() + 1, false);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    int p = positions[i];
    if (p < 1 || p > A.k()) throw std::out_of_range("position outside [1,k]");
    if (used[p]) throw std::invalid_argument("position " + std::to_string(p) + " used twice");
    used[p] = true;
    if (values[i] <= A.k() || values[i] > A.N()) throw std::out_of_range("value outside [k+1,N]");
    tuple[p - 1] = values[i];
  }
  return A.get(tuple);
}

/// Chart coordinate x^p_t (1 <= p <= k < t <= N) as a flat variable index;
/// blocks by p, then t. This is also the Hessian row order.
inline std::size_t chart_variable(int k, int N, int p, int t) {
  if (p < 1 || p > k || t <= k || t > N) throw std::out_of_range("chart coordinate out of range");
  return static_cast<std::size_t>((p - 1) * (N - k) + (t - k - 1));
}

inline std::vector<std::string> chart_variable_names(int k, int N) {
  std::vector<std::string> names;
  for (int p = 1; p <= k; ++p)
    for (int t = k + 1; t <= N; ++t) names.push_back("x_" + std::to_string(p) + "_" + std::to_string(t));
  return names;
}

/// The k×N frame [I_k | X] of a chart point.
template <class T>
Matrix<T> chart_frame(const Matrix<T>& X, int k, int N) {
  if (static_cast<int>(X.rows()) != k || static_cast<int>(X.cols()) != N - k) throw std::invalid_argument("chart point must be k×(N-k)");
  Matrix<T> K(k, N);
  for (int i = 0; i < k; ++i) {
    K(i, i) = T(1);
    for (int j = 0; j < N - k; ++j) K(i, k + j) = X(i, j);
  }
  return K;
}

/// The k×N frame [Y | I_k] of the chart centred at span(e_{N-k+1..N}).
template <class T>
Matrix<T> dual_chart_point(const Matrix<T>& Y, int k, int N) {
  if (static_cast<int>(Y.rows()) != k || static_cast<int>(Y.cols()) != N - k) throw std::invalid_argument("dual chart point must be k×(N-k)");
  Matrix<T> K(k, N);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < N - k; ++j) K(i, j) = Y(i, j);
    K(i, N - k + i) = T(1);
  }
  return K;
}

/// Minor of a frame on the columns listed in I (in that order).
template <class T>
T frame_minor(const Matrix<T>& K, const MultiIndex& I) {
  std::vector<std::size_t> rows(K.rows()), cols;
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (int c : I) cols.push_back(static_cast<std::size_t>(c - 1));
  return det_cofactor(K.submatrix(rows, cols));
}

/// η_I at the chart point X: minor of [I_k | X] on columns I.
template <class T>
T plucker_minor(const Matrix<T>& X, const MultiIndex& I) {
  int k = static_cast<int>(X.rows());
  return frame_minor(chart_frame(X, k, k + static_cast<int>(X.cols())), I);
}

/// F(A, K) = Σ a_I η_I(K) on an arbitrary frame.
template <class T>
T evaluate_frame(const ExteriorArray<T>& A, const Matrix<T>& K) {
  if (static_cast<int>(K.rows()) != A.k() || static_cast<int>(K.cols()) != A.N()) throw std::invalid_argument("frame must be k×N");
  T total = T(0);
  for (const auto& [I, a] : A.entries()) total = total + a * frame_minor(K, I);
  return total;
}

template <class T>
T evaluate_form(const ExteriorArray<T>& A, const Matrix<T>& X) {
  return evaluate_frame(A, chart_frame(X, A.k(), A.N()));
}

/// Symbolic Plücker coordinates of the standard chart, shared by all arrays of
/// one shape: η_I as a polynomial in the k(N-k) chart coordinates, and the
/// second partials of each η_I at the origin.
class Chart {
 public:
  struct HessianTerm {
    std::size_t index;  // position of I in space()
    std::size_t u, v;   // chart variables
    Integer coeff;      // ∂²η_I/∂x_u∂x_v at the origin
  };

  Chart(int k, int N) : k_(k), N_(N), space_(k, N) {
    if (k < 1 || N <= k) throw std::invalid_argument("chart needs 1 <= k < N");
    const std::size_t n = static_cast<std::size_t>(k * (N - k));
    Matrix<IntPoly> X(k, N - k);
    for (int p = 1; p <= k; ++p)
      for (int t = k + 1; t <= N; ++t) X(p - 1, t - k - 1) = IntPoly::variable(n, chart_variable(k, N, p, t));
    Matrix<IntPoly> K = chart_frame(X, k, N);
    for (const auto& I : space_.all()) {
      IntPoly eta = frame_minor(K, I).with_arity(n);
      for (const auto& [e, c] : eta.terms()) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < n; ++i)
          for (unsigned r = 0; r < e[i]; ++r) vars.push_back(i);
        if (vars.size() != 2) continue;
        Integer d = vars[0] == vars[1] ? Integer(2 * c) : c;
        hessian_terms_.push_back({minors_.size(), vars[0], vars[1], d});
      }
      minors_.push_back(std::move(eta));
    }
  }

  int k() const { return k_; }
  int N() const { return N_; }
  std::size_t num_variables() const { return static_cast<std::size_t>(k_ * (N_ - k_)); }
  const IndexSpace& space() const { return space_; }
  const IntPoly& minor(const MultiIndex& sorted) const { return minors_[space_.position(sorted)]; }
  const std::vector<IntPoly>& minors() const { return minors_; }
  const std::vector<HessianTerm>& hessian_terms() const { return hessian_terms_; }

  void check(int k, int N) const {
    if (k != k_ || N != N_) throw std::invalid_argument("array shape differs from chart shape");
  }

 private:
  int k_, N_;
  IndexSpace space_;
  std::vector<IntPoly> minors_;
  std::vector<HessianTerm> hessian_terms_;
};

/// F(A, ·) on the standard chart as a polynomial in the chart coordinates.
template <class C>
MultiPoly<C> dehomogenized_polynomial(const Chart& chart, const ExteriorArray<C>& A) {
  chart.check(A.k(), A.N());
  MultiPoly<C> F = MultiPoly<C>::constant(chart.num_variables(), C(0));
  for (const auto& [I, a] : A.entries())
    F += chart.minor(I).template map_coefficients<C>([](const Integer& c) { return convert<C>::from(c); }) * a;
  return F;
}

template <class C>
MultiPoly<C> dehomogenized_polynomial(const ExteriorArray<C>& A) {
  return dehomogenized_polynomial(Chart(A.k(), A.N()), A);
}

template <class T>
std::vector<T> flatten_chart_point(const Matrix<T>& X) {
  std::vector<T> v;
  for (std::size_t i = 0; i < X.rows(); ++i)
    for (std::size_t j = 0; j < X.cols(); ++j) v.push_back(X(i, j));
  return v;
}

/// ∂F/∂x^p_t at X, in chart-variable order.
template <class T>
std::vector<T> gradient(const Chart& chart, const ExteriorArray<T>& A, const Matrix<T>& X) {
  MultiPoly<T> F = dehomogenized_polynomial(chart, A);
  std::vector<T> pt = flatten_chart_point(X);
  std::vector<T> g;
  for (std::size_t i = 0; i < chart.num_variables(); ++i) g.push_back(F.derivative(i).evaluate(pt));
  return g;
}

template <class T>
std::vector<T> gradient(const ExteriorArray<T>& A, const Matrix<T>& X) {
  return gradient(Chart(A.k(), A.N()), A, X);
}

/// The hypersurface F(A, ·) = 0 is singular at X.
template <class T>
bool is_critical(const Chart& chart, const ExteriorArray<T>& A, const Matrix<T>& X) {
  MultiPoly<T> F = dehomogenized_polynomial(chart, A);
  std::vector<T> pt = flatten_chart_point(X);
  if (!is_zero(F.evaluate(pt))) return false;
  for (std::size_t i = 0; i < chart.num_variables(); ++i)
    if (!is_zero(F.derivative(i).evaluate(pt))) return false;
  return true;
}

template <class T>
bool is_critical(const ExteriorArray<T>& A, const Matrix<T>& X) {
  return is_critical(Chart(A.k(), A.N()), A, X);
}

/// a_I = 0 for every I in star(J): the array lies in ∇(x(J)).
template <class T>
bool nabla_membership(const ExteriorArray<T>& A, const MultiIndex& J) {
  for (const auto& I : star(J, A.N()))
    if (!is_zero(A.get(I))) return false;
  return true;
}

/// Positional tuple for a sorted index relative to I^f: the positions of
/// I^f \ I (ascending) receive the values of I \ I^f (ascending).
inline MultiIndex positional_form(const MultiIndex& I, int k) {
  MultiIndex tuple = first_index(k);
  std::vector<int> values;
  for (int v : I)
    if (v > k) values.push_back(v);
  std::size_t next = 0;
  for (int p = 1; p <= k && next < values.size(); ++p)
    if (!contains(I, p)) tuple[p - 1] = values[next++];
  return tuple;
}

/// Moves the chart origin to X: each positional coefficient of the result is
/// the matching iterated partial derivative of F(A, ·) at X.
template <class T>
ExteriorArray<T> act_translation(const Chart& chart, const ExteriorArray<T>& A, const Matrix<T>& X) {
  const int k = A.k(), N = A.N();
  MultiPoly<T> F = dehomogenized_polynomial(chart, A);
  std::vector<T> pt = flatten_chart_point(X);
  ExteriorArray<T> B(k, N);
  for (const auto& I : chart.space().all()) {
    MultiIndex tuple = positional_form(I, k);
    MultiPoly<T> D = F;
    for (int p = 1; p <= k; ++p)
      if (tuple[p - 1] != p) D = D.derivative(chart_variable(k, N, p, tuple[p - 1]));
    if (D.is_zero()) continue;
    B.set_positional(tuple, D.evaluate(pt));
  }
  return B;
}

template <class T>
ExteriorArray<T> act_translation(const ExteriorArray<T>& A, const Matrix<T>& X) {
  return act_translation(Chart(A.k(), A.N()), A, X);
}

/// Right action of an N×N matrix: (A·g)_J = Σ_I a_I det g[I, J].
template <class T>
ExteriorArray<T> act_gl(const ExteriorArray<T>& A, const Matrix<T>& g) {
  const int k = A.k(), N = A.N();
  if (static_cast<int>(g.rows()) != N || !g.square()) throw std::invalid_argument("group element must be N×N");
  ExteriorArray<T> B(k, N);
  for (const auto& J : enumerate_indices(k, N)) {
    std::vector<std::size_t> cols;
    for (int c : J) cols.push_back(static_cast<std::size_t>(c - 1));
    T total = T(0);
    for (const auto& [I, a] : A.entries()) {
      std::vector<std::size_t> rows;
      for (int r : I) rows.push_back(static_cast<std::size_t>(r - 1));
      T m = det_cofactor(g.submatrix(rows, cols));
      if (!is_zero(m)) total = total + a * m;
    }
    B.set(J, total);
  }
  return B;
}

/// g with [I_k | x] g = [I_k | X + x]; act_gl(A, gᵀ) moves the chart origin to X.
template <class T>
Matrix<T> translation_matrix(const Matrix<T>& X) {
  const std::size_t k = X.rows(), N = k + X.cols();
  Matrix<T> g = Matrix<T>::identity(N);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < X.cols(); ++j) g(i, k + j) = X(i, j);
  return g;
}

/// Permutation matrix Q with [Y | I_k] = [I_k | Y] Q.
template <class T>
Matrix<T> dual_chart_permutation(int k, int N) {
  Matrix<T> Q(N, N);
  for (int c = 1; c <= N; ++c) {
    int src = c <= N - k ? k + c : c - (N - k);
    Q(src - 1, c - 1) = T(1);
  }
  return Q;
}

/// Array whose standard-chart expansion is F(A, ·) on the dual chart.
template <class T>
ExteriorArray<T> dual_chart_array(const ExteriorArray<T>& A) {
  return act_gl(A, dual_chart_permutation<T>(A.k(), A.N()).transpose());
}

/// Entries uniform in [-bound, bound].
inline IntArray random_array(int k, int N, Rng& rng, int bound = 5) {
  IntArray A(k, N);
  for (const auto& I : enumerate_indices(k, N)) A.set(I, Integer(static_cast<long>(rng.uniform(-bound, bound))));
  return A;
}

/// Random array singular at the origin: zero on star(I^f).
inline IntArray random_critical_array(int k, int N, Rng& rng, int bound = 5) {
  IntArray A = random_array(k, N, rng, bound);
  for (const auto& I : star(first_index(k), N)) A.set(I, 0);
  return A;
}

inline Matrix<Integer> random_matrix(std::size_t r, std::size_t c, Rng& rng, int bound = 3) {
  Matrix<Integer> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Integer(static_cast<long>(rng.uniform(-bound, bound)));
  return m;
}

}  // namespace dualgr
