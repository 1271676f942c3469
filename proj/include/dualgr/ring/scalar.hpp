#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dualgr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integers modulo a compile-time prime P < 2^32.
template <std::uint64_t P>
class Zp {
  static_assert(P > 2 && P < (1ULL << 32), "modulus must fit in 32 bits");

 public:
  static constexpr std::uint64_t modulus = P;

  constexpr Zp() = default;
  constexpr Zp(long long x) : v_(reduce(x)) {}
  constexpr Zp(int x) : v_(reduce(x)) {}
  explicit Zp(const Integer& x) : v_(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(P))) {}

  static Zp from(const Integer& x) { return Zp(x); }
  static Zp from(const Rational& x) { return Zp(x.get_num()) / Zp(x.get_den()); }

  std::uint64_t value() const { return v_; }

  Zp operator+(Zp o) const { return raw((v_ + o.v_) % P); }
  Zp operator-(Zp o) const { return raw((v_ + P - o.v_) % P); }
  Zp operator-() const { return raw((P - v_) % P); }
  Zp operator*(Zp o) const { return raw(v_ * o.v_ % P); }
  Zp operator/(Zp o) const { return *this * o.inverse(); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }
  Zp& operator/=(Zp o) { return *this = *this / o; }
  bool operator==(const Zp&) const = default;

  Zp pow(std::uint64_t e) const {
    Zp r = 1, b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  Zp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in Z/p");
    return pow(P - 2);
  }

 private:
  static constexpr std::uint64_t reduce(long long x) {
    long long m = x % static_cast<long long>(P);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(P) : m);
  }
  static Zp raw(std::uint64_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }

  std::uint64_t v_ = 0;
};

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;
using Fp = Zp<kDefaultPrime>;
/// Further primes for independent modular trials.
using Fp2 = Zp<2147483629ULL>;
using Fp3 = Zp<2147483587ULL>;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
template <std::uint64_t P>
bool is_zero(const Zp<P>& x) {
  return x.value() == 0;
}

inline Integer exact_div(const Integer& a, const Integer& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rational exact_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  return a / b;
}
template <std::uint64_t P>
Zp<P> exact_div(const Zp<P>& a, const Zp<P>& b) {
  return a / b;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }
template <std::uint64_t P>
std::string to_string(const Zp<P>& x) {
  return std::to_string(x.value());
}

/// Parses an optionally signed decimal integer; rejects anything else.
inline Integer parse_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("not a decimal integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("not a decimal integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

/// Parses "p" or "p/q" with q nonzero.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (is_zero(den)) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Conversions used when lifting data between coefficient rings.
template <class To>
struct convert;

template <>
struct convert<Integer> {
  static Integer from(const Integer& x) { return x; }
  static Integer from(long long x) { return Integer(static_cast<long>(x)); }
};
template <>
struct convert<Rational> {
  static Rational from(const Integer& x) { return Rational(x); }
  static Rational from(const Rational& x) { return x; }
  static Rational from(long long x) { return Rational(static_cast<long>(x)); }
};
template <std::uint64_t P>
struct convert<Zp<P>> {
  static Zp<P> from(const Integer& x) { return Zp<P>(x); }
  static Zp<P> from(const Rational& x) { return Zp<P>::from(x); }
  static Zp<P> from(long long x) { return Zp<P>(x); }
};

}  // namespace dualgr
