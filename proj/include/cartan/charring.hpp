#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "g0reps.hpp"
#include "superalgebra.hpp"

namespace cartan {

// A character known exactly for l-degree <= hi and zero below lo.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(FormalCharacter f, Rational lo, std::optional<Rational> hi, const AlgebraSpec& s)
      : spec_(s), lo_(lo), hi_(hi), f_(std::move(f)) {
    truncate();
  }

  static TruncatedSeries exact(const AlgebraSpec& s, const FormalCharacter& f) {
    std::optional<Rational> lo;
    for (auto& [w, c] : f.terms()) {
      Rational l = ell(s, w);
      if (!lo || l < *lo) lo = l;
    }
    return TruncatedSeries(f, lo.value_or(Rational(0)), std::nullopt, s);
  }

  const AlgebraSpec& spec() const { return spec_; }
  Rational lo() const { return lo_; }
  std::optional<Rational> hi() const { return hi_; }
  const FormalCharacter& character() const { return f_; }
  std::int64_t get(const Weight& w) const { return f_.get(w); }

  FormalCharacter layer(const Rational& l) const {
    FormalCharacter out;
    for (auto& [w, c] : f_.terms()) if (ell(spec_, w) == l) out.add(w, c);
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return TruncatedSeries(a.f_ + b.f_, std::min(a.lo_, b.lo_), min_hi(a.hi_, b.hi_), a.spec_);
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::optional<Rational> hi = min_hi(a.hi_ ? std::optional<Rational>(*a.hi_ + b.lo_) : std::nullopt,
                                        b.hi_ ? std::optional<Rational>(*b.hi_ + a.lo_) : std::nullopt);
    FormalCharacter out;
    for (auto& [wa, ca] : a.f_.terms()) {
      Rational la = ell(a.spec_, wa);
      for (auto& [wb, cb] : b.f_.terms()) {
        if (hi && *hi < la + ell(a.spec_, wb)) continue;
        out.add(wa + wb, checked_mul(ca, cb));
      }
    }
    return TruncatedSeries(out, a.lo_ + b.lo_, hi, a.spec_);
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.f_ == b.f_;
  }

 private:
  AlgebraSpec spec_;
  Rational lo_ = 0;
  std::optional<Rational> hi_;
  FormalCharacter f_;

  static std::optional<Rational> min_hi(std::optional<Rational> a, std::optional<Rational> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }
  void truncate() {
    if (!hi_) return;
    FormalCharacter kept;
    for (auto& [w, c] : f_.terms()) if (!(*hi_ < ell(spec_, w))) kept.add(w, c);
    f_ = std::move(kept);
  }
};

// weights of the basis of g_{>=1}, one entry per basis vector
inline std::vector<std::pair<Weight, int>> positive_part_weights(const AlgebraSpec& s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::pair<Weight, int>>> cache;
  std::lock_guard lk(mu);
  auto key = std::make_pair(static_cast<int>(s.family), s.n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<Weight, int>> out;
  for (auto& b : build_algebra(s).basis)
    if (b.degree >= 1) out.push_back({b.weight, b.degree});
  cache.emplace(key, out);
  return out;
}

inline TruncatedSeries pi_factor(const AlgebraSpec& s, int cutoff) {
  if (cutoff < 0) throw DimensionError("cutoff must be nonnegative");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, TruncatedSeries> cache;
  auto key = std::make_tuple(static_cast<int>(s.family), s.n, cutoff);
  {
    std::lock_guard lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const Rational hi(cutoff);
  TruncatedSeries acc(FormalCharacter::monomial(Weight(s)), 0, hi, s);
  for (auto& [w, deg] : positive_part_weights(s)) {
    if (deg > cutoff) continue;
    FormalCharacter f = FormalCharacter::monomial(Weight(s));
    if (deg % 2 == 1) {
      f.add(w, 1);
    } else {
      Weight p = w;
      for (int k = 1; k * deg <= cutoff; ++k, p = p + w) f.add(p, 1);
    }
    acc = acc * TruncatedSeries(f, 0, hi, s);
  }
  std::lock_guard lk(mu);
  cache.emplace(key, acc);
  return acc;
}

inline TruncatedSeries pi_times(const AlgebraSpec& s, const FormalCharacter& f, int cutoff) {
  return pi_factor(s, cutoff) * TruncatedSeries::exact(s, f);
}

inline TruncatedSeries ch_standard(const AlgebraSpec& s, const Weight& lambda, int cutoff) {
  return pi_times(s, irreducible_character(s, lambda), cutoff);
}

inline FormalCharacter ch_kac(const AlgebraSpec& s, const Weight& lambda) {
  return wedge_g_minus1_character(s) * irreducible_character(s, lambda);
}

// Hom-description: product over g_{-1} weights of (1 + e^{-wt}) times ch L0
inline FormalCharacter ch_costandard_direct(const AlgebraSpec& s, const Weight& lambda) {
  FormalCharacter ch = FormalCharacter::monomial(Weight(s));
  for (auto& w : g_minus1_weights(s)) ch = ch * (FormalCharacter::monomial(Weight(s)) + FormalCharacter::monomial(-w));
  return ch * irreducible_character(s, lambda);
}

inline FormalCharacter ch_costandard_kac(const AlgebraSpec& s, const Weight& lambda) {
  return ch_kac(s, lambda + costandard_shift(s));
}

inline FormalCharacter ch_costandard(const AlgebraSpec& s, const Weight& lambda) {
  FormalCharacter a = ch_costandard_direct(s, lambda);
  if (!(a == ch_costandard_kac(s, lambda)))
    throw Error("costandard character mismatch between the Hom and Kac descriptions at " + lambda.str());
  return a;
}

}  // namespace cartan
