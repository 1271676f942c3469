#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "dualgr/ring/scalar.hpp"

namespace dualgr {

/// Integer Laurent polynomial in one variable T.
class Laurent {
 public:
  Laurent() = default;
  Laurent(int c) : Laurent(Integer(c)) {}
  Laurent(const Integer& c) {
    if (!dualgr::is_zero(c)) t_[0] = c;
  }
  static Laurent monomial(int e, const Integer& c = 1) {
    Laurent l;
    if (!dualgr::is_zero(c)) l.t_[e] = c;
    return l;
  }

  const std::map<int, Integer>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int min_exponent() const {
    if (t_.empty()) throw std::domain_error("zero Laurent polynomial has no valuation");
    return t_.begin()->first;
  }
  Integer coefficient(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Integer(0) : it->second;
  }

  Laurent shifted(int by) const {
    Laurent l;
    for (const auto& [e, c] : t_) l.t_[e + by] = c;
    return l;
  }

  Laurent operator-() const {
    Laurent l = *this;
    for (auto& [e, c] : l.t_) c = -c;
    return l;
  }
  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  bool operator==(const Laurent& o) const { return t_ == o.t_; }

  Rational evaluate(const Rational& T) const {
    Rational r = 0;
    for (const auto& [e, c] : t_) {
      Rational p = 1;
      if (e > 0)
        for (int i = 0; i < e; ++i) p *= T;
      else
        for (int i = 0; i < -e; ++i) p /= T;
      r += c * p;
    }
    return r;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.get_str() + ")";
      if (e != 0) s += "*T^" + std::to_string(e);
    }
    return s;
  }

 private:
  void add_term(int e, const Integer& c) {
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (dualgr::is_zero(it->second)) t_.erase(it);
    }
  }
  std::map<int, Integer> t_;
};

template <>
struct convert<Laurent> {
  static Laurent from(const Integer& x) { return Laurent(x); }
  static Laurent from(long long x) { return Laurent(Integer(static_cast<long>(x))); }
};

inline bool is_zero(const Laurent& l) { return l.is_zero(); }
inline std::string to_string(const Laurent& l) { return l.to_string(); }

}  // namespace dualgr
