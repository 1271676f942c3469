#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dualgr/ring/scalar.hpp"

namespace dualgr {

namespace detail {
inline bool divides_exactly(const Integer& a, const Integer& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}
inline bool divides_exactly(const Rational&, const Rational&) { return true; }
template <std::uint64_t P>
bool divides_exactly(const Zp<P>&, const Zp<P>&) {
  return true;
}

struct ExponentHash {
  std::size_t operator()(const std::vector<std::uint16_t>& e) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : e) h = (h ^ x) * 1099511628211ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};
}  // namespace detail

/// Sparse multivariate polynomial with nonzero coefficients, kept in
/// descending graded-lex order (also the serialization order). Arity 0 marks
/// a constant usable at any arity.
template <class C>
class MultiPoly {
 public:
  using Coeff = C;
  using Exponents = std::vector<std::uint16_t>;
  struct Term {
    Exponents exp;
    C coeff;
  };

  static unsigned degree_of(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  static bool grlex_greater(const Exponents& a, const Exponents& b) {
    unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
  }

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(C(c)) {}
  MultiPoly(const C& c) {
    if (!dualgr::is_zero(c)) terms_.push_back({Exponents{}, c});
  }

  static MultiPoly variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(std::move(e), C(1));
  }

  static MultiPoly monomial(Exponents e, const C& c) {
    MultiPoly p;
    p.nvars_ = e.size();
    if (!dualgr::is_zero(c)) p.terms_.push_back({std::move(e), c});
    return p;
  }

  static MultiPoly constant(std::size_t nvars, const C& c) { return monomial(Exponents(nvars, 0), c); }

  std::size_t arity() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exp) == 0); }

  C constant_term() const {
    if (!terms_.empty() && degree_of(terms_.back().exp) == 0) return terms_.back().coeff;
    return C(0);
  }

  C coefficient(const Exponents& e) const {
    Exponents f = e;
    f.resize(std::max(nvars_, e.size()), 0);
    for (const auto& t : terms_)
      if (padded_to(t.exp, f.size()) == f) return t.coeff;
    return C(0);
  }

  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(degree_of(terms_[0].exp)); }

  int degree_in(std::size_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_)
      if (var < t.exp.size()) d = std::max(d, static_cast<int>(t.exp[var]));
    return d;
  }

  /// Same polynomial viewed in `n` variables (n >= arity unless constant).
  MultiPoly with_arity(std::size_t n) const {
    if (n == nvars_) return *this;
    if (nvars_ != 0 && n < nvars_) throw std::invalid_argument("cannot shrink polynomial arity");
    MultiPoly p = *this;
    p.nvars_ = n;
    for (auto& t : p.terms_) t.exp.resize(n, 0);
    return p;
  }

  MultiPoly operator-() const {
    MultiPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = merge(*this, o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = merge(*this, o, true); }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    std::size_t n = common_arity(a, b);
    MultiPoly r;
    r.nvars_ = n;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      // Monomial times polynomial keeps the order.
      const MultiPoly& m = a.terms_.size() == 1 ? a : b;
      const MultiPoly& p = a.terms_.size() == 1 ? b : a;
      const Exponents me = padded_to(m.terms_[0].exp, n);
      r.terms_.reserve(p.terms_.size());
      for (const auto& t : p.terms_) {
        Exponents e = padded_to(t.exp, n);
        for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(e[i] + me[i]);
        r.terms_.push_back({std::move(e), t.coeff * m.terms_[0].coeff});
      }
      return r;
    }
    std::unordered_map<Exponents, C, detail::ExponentHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    Exponents e(n);
    for (const auto& ta : a.terms_) {
      const Exponents ea = padded_to(ta.exp, n);
      for (const auto& tb : b.terms_) {
        for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + (i < tb.exp.size() ? tb.exp[i] : 0));
        auto [it, fresh] = acc.try_emplace(e);
        if (fresh)
          it->second = ta.coeff * tb.coeff;
        else
          it->second += ta.coeff * tb.coeff;
      }
    }
    r.terms_.reserve(acc.size());
    for (auto& [ex, c] : acc)
      if (!dualgr::is_zero(c)) r.terms_.push_back({ex, std::move(c)});
    r.sort_terms();
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator*(const MultiPoly& a, const C& c) {
    MultiPoly p;
    p.nvars_ = a.nvars_;
    if (dualgr::is_zero(c)) return p;
    p.terms_ = a.terms_;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
  }

  bool operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    std::size_t n = std::max(nvars_, o.nvars_);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coeff != o.terms_[i].coeff) return false;
      if (padded_to(terms_[i].exp, n) != padded_to(o.terms_[i].exp, n)) return false;
    }
    return true;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(nvars_, C(1)), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly p;
    p.nvars_ = nvars_;
    for (const auto& t : terms_) {
      if (var >= t.exp.size() || t.exp[var] == 0) continue;
      Exponents f = t.exp;
      --f[var];
      p.terms_.push_back({std::move(f), t.coeff * C(static_cast<int>(t.exp[var]))});
    }
    p.sort_terms();
    return p;
  }

  /// Value at a point; coefficients are lifted into S.
  template <class S>
  S evaluate(const std::vector<S>& point) const {
    if (nvars_ != 0 && point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong arity");
    S total = S(0);
    for (const auto& t : terms_) {
      S v = convert<S>::from(t.coeff);
      for (std::size_t i = 0; i < t.exp.size(); ++i)
        for (unsigned j = 0; j < t.exp[i]; ++j) v = v * point[i];
      total = total + v;
    }
    return total;
  }

  /// Replaces variable `var` by `value`; arity is kept.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const {
    if (var >= nvars_) throw std::out_of_range("substituted variable out of range");
    std::vector<MultiPoly> powers{constant(nvars_, C(1))};
    MultiPoly out = constant(nvars_, C(0));
    for (const auto& t : terms_) {
      while (powers.size() <= t.exp[var]) powers.push_back(powers.back() * value);
      Exponents f = t.exp;
      f[var] = 0;
      out += monomial(std::move(f), t.coeff) * powers[t.exp[var]];
    }
    return out;
  }

  /// Full substitution of every variable by a polynomial.
  MultiPoly compose(const std::vector<MultiPoly>& values) const {
    if (nvars_ != 0 && values.size() != nvars_) throw std::invalid_argument("composition has wrong arity");
    MultiPoly out;
    for (const auto& t : terms_) {
      MultiPoly v = MultiPoly(t.coeff);
      for (std::size_t i = 0; i < t.exp.size(); ++i)
        if (t.exp[i]) v *= values[i].pow(t.exp[i]);
      out += v;
    }
    return out;
  }

  /// Exact quotient a / b; throws std::domain_error if b does not divide a.
  friend MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::size_t n = common_arity(a, b);
    MultiPoly q;
    q.nvars_ = n;
    if (a.is_zero()) return q;
    if (b.terms_.size() == 1) {
      const Exponents be = padded_to(b.terms_[0].exp, n);
      for (const auto& t : a.terms_) {
        Exponents e = padded_to(t.exp, n);
        for (std::size_t i = 0; i < n; ++i) {
          if (e[i] < be[i]) throw std::domain_error("inexact polynomial division");
          e[i] = static_cast<std::uint16_t>(e[i] - be[i]);
        }
        if (!detail::divides_exactly(t.coeff, b.terms_[0].coeff)) throw std::domain_error("inexact polynomial division");
        q.terms_.push_back({std::move(e), exact_div(t.coeff, b.terms_[0].coeff)});
      }
      return q;
    }
    // Remainder keyed by (degree, exponents), largest first.
    using Key = std::pair<unsigned, Exponents>;
    std::map<Key, C, std::greater<Key>> r;
    for (const auto& t : a.terms_) {
      Exponents e = padded_to(t.exp, n);
      unsigned d = degree_of(e);
      r.emplace(Key{d, std::move(e)}, t.coeff);
    }
    std::vector<std::pair<Exponents, unsigned>> B;
    for (const auto& t : b.terms_) {
      Exponents e = padded_to(t.exp, n);
      unsigned d = degree_of(e);
      B.emplace_back(std::move(e), d);
    }
    const Exponents& lb = B[0].first;
    const C& lc = b.terms_[0].coeff;
    Key key;
    key.second.resize(n);
    while (!r.empty()) {
      auto top = r.begin();
      Exponents e(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (top->first.second[i] < lb[i]) throw std::domain_error("inexact polynomial division");
        e[i] = static_cast<std::uint16_t>(top->first.second[i] - lb[i]);
      }
      if (!detail::divides_exactly(top->second, lc)) throw std::domain_error("inexact polynomial division");
      C qc = exact_div(top->second, lc);
      unsigned qd = top->first.first - B[0].second;
      r.erase(top);
      for (std::size_t j = 1; j < B.size(); ++j) {
        key.first = qd + B[j].second;
        for (std::size_t i = 0; i < n; ++i) key.second[i] = static_cast<std::uint16_t>(e[i] + B[j].first[i]);
        C v = qc * b.terms_[j].coeff;
        auto [it, fresh] = r.try_emplace(key);
        if (fresh) {
          it->second = -v;
        } else {
          it->second -= v;
          if (dualgr::is_zero(it->second)) r.erase(it);
        }
      }
      q.terms_.push_back({std::move(e), std::move(qc)});
    }
    return q;
  }

  template <class D, class F>
  MultiPoly<D> map_coefficients(F f) const {
    MultiPoly<D> out;
    out.nvars_ = nvars_;
    for (const auto& t : terms_) {
      D c = f(t.coeff);
      if (!dualgr::is_zero(c)) out.terms_.push_back({t.exp, std::move(c)});
    }
    return out;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      std::string cs = dualgr::to_string(t.coeff);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < t.exp.size(); ++i) {
        if (!t.exp[i]) continue;
        if (!mono.empty()) mono += '*';
        mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
      }
      if (mono.empty())
        s += cs;
      else if (cs == "1")
        s += mono;
      else
        s += cs + "*" + mono;
    }
    return s;
  }

 private:
  template <class>
  friend class MultiPoly;

  static std::size_t common_arity(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ == 0) return b.nvars_;
    if (b.nvars_ == 0 || a.nvars_ == b.nvars_) return a.nvars_;
    throw std::invalid_argument("polynomial arity mismatch");
  }

  static Exponents padded_to(const Exponents& e, std::size_t n) {
    Exponents f = e;
    f.resize(n, 0);
    return f;
  }

  void sort_terms() {
    std::vector<unsigned> deg(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) deg[i] = degree_of(terms_[i].exp);
    std::vector<std::size_t> idx(terms_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      if (deg[x] != deg[y]) return deg[x] > deg[y];
      return terms_[x].exp > terms_[y].exp;
    });
    std::vector<Term> sorted;
    sorted.reserve(terms_.size());
    for (auto i : idx) {
      if (!sorted.empty() && sorted.back().exp == terms_[i].exp) {
        sorted.back().coeff += terms_[i].coeff;
        if (dualgr::is_zero(sorted.back().coeff)) sorted.pop_back();
      } else {
        sorted.push_back(std::move(terms_[i]));
      }
    }
    terms_ = std::move(sorted);
  }

  static MultiPoly merge(const MultiPoly& a0, const MultiPoly& b0, bool subtract) {
    std::size_t n = common_arity(a0, b0);
    const MultiPoly& a = a0.nvars_ == n ? a0 : a0.with_arity(n);
    const MultiPoly& b = b0.nvars_ == n ? b0 : b0.with_arity(n);
    MultiPoly r;
    r.nvars_ = n;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int side;  // 0: take a, 1: take b, 2: equal
      if (j == b.terms_.size())
        side = 0;
      else if (i == a.terms_.size())
        side = 1;
      else if (a.terms_[i].exp == b.terms_[j].exp)
        side = 2;
      else
        side = grlex_greater(a.terms_[i].exp, b.terms_[j].exp) ? 0 : 1;
      if (side == 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (side == 1) {
        const Term& t = b.terms_[j++];
        r.terms_.push_back({t.exp, subtract ? C(-t.coeff) : t.coeff});
      } else {
        C c = subtract ? C(a.terms_[i].coeff - b.terms_[j].coeff) : C(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!dualgr::is_zero(c)) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

template <class C>
bool is_zero(const MultiPoly<C>& p) {
  return p.is_zero();
}

template <class C>
std::string to_string(const MultiPoly<C>& p) {
  return p.to_string();
}

template <class C>
struct convert<MultiPoly<C>> {
  static MultiPoly<C> from(const Integer& x) { return MultiPoly<C>(convert<C>::from(x)); }
  static MultiPoly<C> from(long long x) { return MultiPoly<C>(convert<C>::from(x)); }
};

using IntPoly = MultiPoly<Integer>;
using RatPoly = MultiPoly<Rational>;

}  // namespace dualgr
