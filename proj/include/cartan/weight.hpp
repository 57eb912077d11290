#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"
#include "spec.hpp"

namespace cartan {

// Coordinates on the eps basis, plus a trailing delta slot for the Hamiltonian families.
class Weight {
 public:
  static constexpr int kMax = 10;

  Weight() = default;
  Weight(int eps_dim, bool delta) : neps_(static_cast<std::uint8_t>(eps_dim)), delta_(delta) {
    if (eps_dim + (delta ? 1 : 0) > kMax) throw DimensionError("weight too long");
  }
  explicit Weight(const AlgebraSpec& s) : Weight(s.eps_dim(), s.has_delta()) {}

  static Weight from(const AlgebraSpec& s, const std::vector<Rational>& eps, Rational delta = 0) {
    Weight w(s);
    if (static_cast<int>(eps.size()) != s.eps_dim())
      throw DimensionError("expected " + std::to_string(s.eps_dim()) + " eps coordinates");
    for (int i = 0; i < s.eps_dim(); ++i) w.c_[i] = eps[i];
    if (s.has_delta()) w.c_[s.eps_dim()] = delta;
    else if (!delta.is_zero()) throw DimensionError("delta coordinate on a family without delta");
    return w;
  }

  static Weight eps_unit(const AlgebraSpec& s, int i) { Weight w(s); w.c_[i] = 1; return w; }
  static Weight delta_unit(const AlgebraSpec& s) {
    if (!s.has_delta()) throw DimensionError("no delta for this family");
    Weight w(s); w.c_[s.eps_dim()] = 1; return w;
  }

  int eps_dim() const { return neps_; }
  bool has_delta() const { return delta_; }
  int size() const { return neps_ + (delta_ ? 1 : 0); }

  const Rational& eps(int i) const { return c_[i]; }
  Rational& eps(int i) { return c_[i]; }
  Rational delta() const { return delta_ ? c_[neps_] : Rational(0); }
  void set_delta(const Rational& v) {
    if (!delta_) throw DimensionError("no delta slot");
    c_[neps_] = v;
  }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }

  bool is_zero() const {
    for (int i = 0; i < size(); ++i) if (!c_[i].is_zero()) return false;
    return true;
  }

  Rational eps_sum() const {
    Rational s = 0;
    for (int i = 0; i < neps_; ++i) s += c_[i];
    return s;
  }

  friend Weight operator+(Weight a, const Weight& b) { a.check(b); for (int i = 0; i < a.size(); ++i) a.c_[i] += b.c_[i]; return a; }
  friend Weight operator-(Weight a, const Weight& b) { a.check(b); for (int i = 0; i < a.size(); ++i) a.c_[i] -= b.c_[i]; return a; }
  friend Weight operator*(const Rational& k, Weight a) { for (int i = 0; i < a.size(); ++i) a.c_[i] *= k; return a; }
  Weight operator-() const { Weight a = *this; for (int i = 0; i < a.size(); ++i) a.c_[i] = -a.c_[i]; return a; }
  Weight& operator+=(const Weight& b) { return *this = *this + b; }
  Weight& operator-=(const Weight& b) { return *this = *this - b; }

  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.neps_ != b.neps_ || a.delta_ != b.delta_) return false;
    for (int i = 0; i < a.size(); ++i) if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  // serialization order: eps ascending index, delta last
  friend bool operator<(const Weight& a, const Weight& b) {
    for (int i = 0; i < a.size() && i < b.size(); ++i) {
      if (a.c_[i] < b.c_[i]) return true;
      if (b.c_[i] < a.c_[i]) return false;
    }
    return a.size() < b.size();
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < size(); ++i) h = (h ^ c_[i].hash()) * 1099511628211ull;
    return h;
  }

  std::vector<Rational> coords() const { return std::vector<Rational>(c_.begin(), c_.begin() + size()); }

  // human readable, e.g. (2,1,0) or (1,0;d=3)
  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < neps_; ++i) {
      if (i) s += ",";
      s += c_[i].is_integer() ? std::to_string(c_[i].num()) : c_[i].str();
    }
    if (delta_) {
      Rational d = c_[neps_];
      s += ";d=" + (d.is_integer() ? std::to_string(d.num()) : d.str());
    }
    return s + ")";
  }

 private:
  std::array<Rational, kMax> c_{};
  std::uint8_t neps_ = 0;
  bool delta_ = false;

  void check(const Weight& b) const {
    if (neps_ != b.neps_ || delta_ != b.delta_) throw DimensionError("weight shape mismatch");
  }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

// Simple-module parameter: dominant weight, depth, parity.
struct SimpleParam {
  Weight weight;
  std::int64_t depth = 0;
  int parity = 0;

  friend bool operator==(const SimpleParam& a, const SimpleParam& b) {
    return a.weight == b.weight && a.depth == b.depth && a.parity == b.parity;
  }
  friend bool operator<(const SimpleParam& a, const SimpleParam& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.parity < b.parity;
  }
};

inline int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace cartan
