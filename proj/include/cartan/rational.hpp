#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cartan {

// Exact rational on int64 with 128-bit intermediates; overflow throws.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d) { set(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_half_integer() const { return den_ == 1 || den_ == 2; }

  // floor as integer, and fractional part in [0,1)
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  Rational frac() const { return *this - Rational(floor()); }

  // representative of *this modulo m (m > 0 integer), in [0, m)
  Rational mod(std::int64_t m) const {
    Rational q = *this / Rational(m);
    return *this - Rational(q.floor()) * Rational(m);
  }

  Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return from128(static_cast<__int128>(a.num_) + b.num_, 1);
    return from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return from128(static_cast<__int128>(a.num_) * b.num_, 1);
    return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "p/q" always carries the denominator
  std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

  // accepts "p", "p/q", "-p/q"
  static Rational parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return Rational(v);
      }
      std::string a = s.substr(0, slash), b = s.substr(slash + 1);
      std::int64_t p = std::stoll(a, &used);
      if (used != a.size()) throw std::invalid_argument(s);
      std::int64_t q = std::stoll(b, &used);
      if (used != b.size()) throw std::invalid_argument(s);
      if (q == 0) throw std::invalid_argument("zero denominator");
      return Rational(p, q);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad rational '" + s + "'");
    }
  }

  std::size_t hash() const {
    return std::hash<std::int64_t>()(num_) * 1000003u ^ std::hash<std::int64_t>()(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  void set(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    *this = from128(n, d);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }

  static Rational from128(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    if (d != 1) {
      __int128 g = gcd128(n, d);
      if (g > 1) { n /= g; d /= g; }
    }
    constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  if (r.den() == 1) return os << r.num();
  return os << r.num() << '/' << r.den();
}

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace cartan
