#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualgr/ring/scalar.hpp"

namespace dualgr {

/// Dense univariate polynomial over a field; coeffs()[i] multiplies s^i.
template <class F>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }
  UniPoly(const F& c) : c_{c} { trim(); }

  static UniPoly monomial(int degree, const F& c) {
    std::vector<F> v(degree + 1, F(0));
    v[degree] = c;
    return UniPoly(std::move(v));
  }

  const std::vector<F>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  F leading() const { return c_.empty() ? F(0) : c_.back(); }
  F operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : F(0); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
  }
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly pow(unsigned e) const {
    UniPoly r(F(1)), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  F evaluate(const F& s) const {
    F r = F(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + *it;
    return r;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    F inv = F(1) / leading();
    for (auto& x : r.c_) x *= inv;
    return r;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (dualgr::is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + dualgr::to_string(c_[i]) + ")";
      if (i > 0) s += "*s^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && dualgr::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Polynomial of degree < n through n points with distinct abscissae (Newton form).
template <class F>
UniPoly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolation needs matching nonempty data");
  const std::size_t n = xs.size();
  std::vector<F> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      F den = xs[i] - xs[i - j];
      if (is_zero(den)) throw std::invalid_argument("interpolation abscissae must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  UniPoly<F> r(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) r = r * UniPoly<F>(std::vector<F>{-xs[i], F(1)}) + UniPoly<F>(dd[i]);
  return r;
}

/// Decides whether f = c * g^r for a polynomial g and constant c, returning
/// monic g when so. The zero polynomial is reported as zero^r.
template <class F>
std::optional<UniPoly<F>> uni_root_structure(const UniPoly<F>& f, int r) {
  if (r < 2) throw std::invalid_argument("root order must be at least 2");
  if (f.is_zero()) return UniPoly<F>();
  if (f.degree() % r != 0) return std::nullopt;
  const int m = f.degree() / r;
  const UniPoly<F> h = f.monic();
  // Match the top m coefficients of g^r against h, then check the rest.
  std::vector<F> g(m + 1, F(0));
  g[m] = F(1);
  const F rf = F(r);
  for (int i = 1; i <= m; ++i) {
    UniPoly<F> partial(g);
    F known = partial.pow(r)[r * m - i];
    g[m - i] = (h[r * m - i] - known) / rf;
  }
  UniPoly<F> cand(g);
  if (cand.pow(r) == h) return cand;
  return std::nullopt;
}

using QPoly = UniPoly<Rational>;

}  // namespace dualgr
