#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "rational.hpp"
#include "spec.hpp"
#include "weight.hpp"
#include "weights.hpp"

namespace cartan {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
  return r;
}

// Finitely supported map weight -> integer.
class FormalCharacter {
 public:
  using Map = std::unordered_map<Weight, std::int64_t, WeightHash>;

  FormalCharacter() = default;
  static FormalCharacter monomial(const Weight& w, std::int64_t c = 1) { FormalCharacter f; f.add(w, c); return f; }

  void add(const Weight& w, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }
  std::int64_t get(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::int64_t mass() const {
    std::int64_t m = 0;
    for (auto& [w, c] : terms_) m = checked_add(m, c);
    return m;
  }

  FormalCharacter& axpy(std::int64_t a, const FormalCharacter& o) {
    for (auto& [w, c] : o.terms_) add(w, checked_mul(a, c));
    return *this;
  }
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a.axpy(1, b); }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a.axpy(-1, b); }
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter out;
    out.terms_.reserve(a.size() * 2 + b.size());
    for (auto& [wa, ca] : a.terms_)
      for (auto& [wb, cb] : b.terms_) out.add(wa + wb, checked_mul(ca, cb));
    return out;
  }
  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) { return a.terms_ == b.terms_; }

  FormalCharacter shifted(const Weight& s) const {
    FormalCharacter out;
    for (auto& [w, c] : terms_) out.add(w + s, c);
    return out;
  }

  std::vector<std::pair<Weight, std::int64_t>> sorted() const {
    std::vector<std::pair<Weight, std::int64_t>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return v;
  }

  bool nonnegative() const {
    for (auto& [w, c] : terms_) if (c < 0) return false;
    return true;
  }

 private:
  Map terms_;
};

// Semisimple part of g_0: A_{n-1} (gl/sl), B_r, D_r acting on the eps coordinates.
enum class LieType { A, B, D };

inline LieType g0_type(const AlgebraSpec& s) {
  if (s.witt_like()) return LieType::A;
  return s.odd() ? LieType::B : LieType::D;
}

struct G0Data {
  LieType type;
  int m;  // number of eps coordinates
  std::vector<std::vector<int>> pos_roots;
  std::vector<Rational> rho;
};

inline G0Data g0_data(const AlgebraSpec& s) {
  G0Data g{g0_type(s), s.eps_dim(), {}, {}};
  const int m = g.m;
  auto unit = [&](int i, int j, int sj) {
    std::vector<int> v(m, 0);
    v[i] = 1;
    if (j >= 0) v[j] = sj;
    return v;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      g.pos_roots.push_back(unit(i, j, -1));
      if (g.type != LieType::A) g.pos_roots.push_back(unit(i, j, 1));
    }
  if (g.type == LieType::B)
    for (int i = 0; i < m; ++i) g.pos_roots.push_back(unit(i, -1, 0));
  for (int i = 0; i < m; ++i) {
    switch (g.type) {
      case LieType::A: g.rho.push_back(Rational(m - 1 - i)); break;
      case LieType::B: g.rho.push_back(Rational(2 * (m - i) - 1, 2)); break;
      case LieType::D: g.rho.push_back(Rational(m - 1 - i)); break;
    }
  }
  return g;
}

namespace detail {

inline Rational eps_dot(const Weight& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (int i = 0; i < a.eps_dim(); ++i) s += a.eps(i) * b[i];
  return s;
}
inline Rational eps_dot(const Weight& a, const std::vector<int>& b) {
  Rational s = 0;
  for (int i = 0; i < a.eps_dim(); ++i) if (b[i]) s += a.eps(i) * Rational(b[i]);
  return s;
}
inline Rational eps_norm_shift(const Weight& a, const std::vector<Rational>& rho) {
  Rational s = 0;
  for (int i = 0; i < a.eps_dim(); ++i) { Rational t = a.eps(i) + rho[i]; s += t * t; }
  return s;
}
inline Weight add_root(const Weight& w, const std::vector<int>& a, std::int64_t k) {
  Weight out = w;
  for (int i = 0; i < w.eps_dim(); ++i) if (a[i]) out[i] += Rational(k * a[i]);
  return out;
}

// dominance on the semisimple part only (no integrality)
inline bool shape_dominant(LieType t, const Weight& w) {
  const int m = w.eps_dim();
  if (t == LieType::A) {
    for (int i = 0; i + 1 < m; ++i) if (w.eps(i) < w.eps(i + 1)) return false;
    return true;
  }
  if (t == LieType::B) {
    for (int i = 0; i + 1 < m; ++i) if (w.eps(i) < w.eps(i + 1)) return false;
    return m == 0 || w.eps(m - 1) >= Rational(0);
  }
  for (int i = 0; i + 2 < m; ++i) if (w.eps(i) < w.eps(i + 1)) return false;
  return m < 2 || w.eps(m - 2) >= abs(w.eps(m - 1));
}

inline Weight dominant_rep(LieType t, const Weight& w) {
  Weight out = w;
  const int m = w.eps_dim();
  std::vector<Rational> v(m);
  int neg = 0;
  bool zero = false;
  for (int i = 0; i < m; ++i) {
    v[i] = w.eps(i);
    if (t != LieType::A) {
      if (v[i] < Rational(0)) { v[i] = -v[i]; ++neg; }
      if (v[i].is_zero()) zero = true;
    }
  }
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return b < a; });
  if (t == LieType::D && !zero && (neg % 2 == 1)) v[m - 1] = -v[m - 1];
  for (int i = 0; i < m; ++i) out[i] = v[i];
  return out;
}

inline std::vector<Weight> weyl_orbit(LieType t, const Weight& dom) {
  const int m = dom.eps_dim();
  std::vector<Rational> base(m);
  bool zero = false;
  int neg = 0;
  for (int i = 0; i < m; ++i) {
    base[i] = t == LieType::A ? dom.eps(i) : abs(dom.eps(i));
    if (base[i].is_zero()) zero = true;
    if (dom.eps(i) < Rational(0)) ++neg;
  }
  std::sort(base.begin(), base.end());
  std::vector<Weight> out;
  do {
    if (t == LieType::A) {
      Weight w = dom;
      for (int i = 0; i < m; ++i) w[i] = base[i];
      out.push_back(w);
      continue;
    }
    std::vector<int> nz;
    for (int i = 0; i < m; ++i) if (!base[i].is_zero()) nz.push_back(i);
    for (unsigned sg = 0; sg < (1u << nz.size()); ++sg) {
      if (t == LieType::D && !zero && (__builtin_popcount(sg) % 2) != (neg % 2)) continue;
      Weight w = dom;
      for (int i = 0; i < m; ++i) w[i] = base[i];
      for (std::size_t k = 0; k < nz.size(); ++k) if ((sg >> k) & 1u) w[nz[k]] = -w[nz[k]];
      out.push_back(w);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace detail

// Weyl dimension formula for the semisimple part
inline Rational weyl_dimension(const AlgebraSpec& s, const Weight& lambda) {
  G0Data g = g0_data(s);
  Rational d = 1;
  for (auto& a : g.pos_roots) {
    Rational num = detail::eps_dot(lambda, a), den = 0;
    for (int i = 0; i < g.m; ++i) { num += g.rho[i] * Rational(a[i]); den += g.rho[i] * Rational(a[i]); }
    d *= num / den;
  }
  return d;
}

struct G0Limits {
  std::int64_t max_dim = 1000000;
};

// Dominant weights of L0(lambda) with Freudenthal multiplicities.
inline std::map<Weight, std::int64_t> dominant_multiplicities(const AlgebraSpec& s, const Weight& lambda) {
  G0Data g = g0_data(s);
  std::vector<Weight> doms{lambda};
  std::unordered_map<Weight, int, WeightHash> seen{{lambda, 0}};
  for (std::size_t q = 0; q < doms.size(); ++q)
    for (auto& a : g.pos_roots) {
      Weight nu = detail::add_root(doms[q], a, -1);
      if (!detail::shape_dominant(g.type, nu) || seen.count(nu)) continue;
      seen.emplace(nu, 0);
      doms.push_back(nu);
    }
  std::vector<std::pair<Rational, Weight>> order;
  for (auto& d : doms) order.push_back({detail::eps_dot(d, g.rho), d});
  std::sort(order.begin(), order.end(), [](auto& x, auto& y) {
    if (x.first != y.first) return y.first < x.first;
    return y.second < x.second;
  });
  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  Rational top = detail::eps_norm_shift(lambda, g.rho);
  for (auto& [key, mu] : order) {
    if (mu == lambda) { mult[mu] = 1; continue; }
    Rational num = 0;
    for (auto& a : g.pos_roots)
      for (std::int64_t k = 1;; ++k) {
        Weight nu = detail::add_root(mu, a, k);
        auto it = mult.find(detail::dominant_rep(g.type, nu));
        if (it == mult.end()) break;
        num += Rational(it->second) * detail::eps_dot(nu, a);
      }
    Rational den = top - detail::eps_norm_shift(mu, g.rho);
    Rational m = Rational(2) * num / den;
    if (!m.is_integer() || m < Rational(0)) throw Error("Freudenthal recursion produced a non-integral multiplicity");
    if (m.num() > 0) mult[mu] = m.num();
  }
  return std::map<Weight, std::int64_t>(mult.begin(), mult.end());
}

namespace detail {

struct CharCache {
  std::shared_mutex mu;
  std::map<std::pair<int, Weight>, FormalCharacter> map;
};
inline CharCache& char_cache() {
  static CharCache c;
  return c;
}

}  // namespace detail

inline FormalCharacter irreducible_character(const AlgebraSpec& s, const Weight& lambda, G0Limits lim = {}) {
  if (!is_dominant(s, lambda)) throw DominanceError("irreducible_character: weight " + lambda.str() + " is not dominant");
  LieType t = g0_type(s);
  std::pair<int, Weight> key{static_cast<int>(t) * 16 + s.eps_dim(), lambda};
  auto& cache = detail::char_cache();
  {
    std::shared_lock lk(cache.mu);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return it->second;
  }
  Rational dim = weyl_dimension(s, lambda);
  if (dim > Rational(lim.max_dim))
    throw ResourceError("irreducible_character: dim L0" + lambda.str() + " = " + dim.str() + " exceeds cap");
  FormalCharacter ch;
  for (auto& [mu, m] : dominant_multiplicities(s, lambda))
    for (auto& w : detail::weyl_orbit(t, mu)) ch.add(w, m);
  std::unique_lock lk(cache.mu);
  cache.map.emplace(key, ch);
  return ch;
}

inline std::vector<Weight> g_minus1_weights(const AlgebraSpec& s) {
  std::vector<Weight> out;
  if (s.witt_like()) {
    for (int i = 0; i < s.n; ++i) out.push_back(-Weight::eps_unit(s, i));
    return out;
  }
  Weight d = Weight::delta_unit(s);
  for (int i = 0; i < s.r(); ++i) {
    out.push_back(-Weight::eps_unit(s, i) - d);
    out.push_back(Weight::eps_unit(s, i) - d);
  }
  if (s.odd()) out.push_back(-d);
  return out;
}

inline FormalCharacter wedge_g_minus1_character(const AlgebraSpec& s) {
  FormalCharacter ch = FormalCharacter::monomial(Weight(s));
  for (auto& w : g_minus1_weights(s)) ch = ch * (FormalCharacter::monomial(Weight(s)) + FormalCharacter::monomial(w));
  return ch;
}

struct FlagEntry {
  Weight weight;
  std::int64_t mult = 0;
  std::int64_t depth_offset = 0;
  int parity_offset = 0;
};

// Multiplicity table over dominant weights with depth/parity offsets relative to top.
struct FlagTable {
  Weight top;
  std::vector<FlagEntry> entries;  // sorted by weight

  std::int64_t get(const Weight& w) const {
    for (auto& e : entries) if (e.weight == w) return e.mult;
    return 0;
  }
  std::map<Weight, std::int64_t> as_map() const {
    std::map<Weight, std::int64_t> m;
    for (auto& e : entries) m[e.weight] = e.mult;
    return m;
  }
  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto& e : entries) t += e.mult;
    return t;
  }
};

inline std::int64_t integral_offset(const AlgebraSpec& s, const Weight& from, const Weight& to) {
  Rational l = ell(s, to - from);
  if (!l.is_integer()) throw Error("non-integral length offset between " + from.str() + " and " + to.str());
  return l.num();
}

inline FlagTable make_flag_table(const AlgebraSpec& s, const Weight& top, const std::map<Weight, std::int64_t>& m) {
  FlagTable t;
  t.top = top;
  for (auto& [w, c] : m) {
    if (c == 0) continue;
    std::int64_t off = integral_offset(s, top, w);
    t.entries.push_back({w, c, off, mod2(off)});
  }
  return t;
}

// Greedy highest-weight peeling into irreducible g_0 characters.
inline std::map<Weight, std::int64_t> decompose(const AlgebraSpec& s, FormalCharacter chi, G0Limits lim = {}) {
  G0Data g = g0_data(s);
  std::map<Weight, std::int64_t> out;
  while (!chi.empty()) {
    const Weight* best = nullptr;
    Rational bestf = 0;
    for (auto& [w, c] : chi.terms()) {
      Rational f = detail::eps_dot(w, g.rho);
      if (!best || bestf < f || (f == bestf && *best < w)) { best = &w; bestf = f; }
    }
    Weight mu = *best;
    std::int64_t c = chi.get(mu);
    if (c < 0) throw NotACharacterError("decompose: negative coefficient at " + mu.str());
    if (!is_dominant(s, mu)) throw NotACharacterError("decompose: maximal weight " + mu.str() + " is not dominant");
    chi.axpy(-c, irreducible_character(s, mu, lim));
    if (!chi.nonnegative()) throw NotACharacterError("decompose: peeling " + mu.str() + " left a negative coefficient");
    out[mu] += c;
  }
  return out;
}

inline FlagTable upsilon(const AlgebraSpec& s, const Weight& lambda, G0Limits lim = {}) {
  if (!is_dominant(s, lambda)) throw DominanceError("upsilon: weight " + lambda.str() + " is not dominant");
  auto m = decompose(s, wedge_g_minus1_character(s) * irreducible_character(s, lambda, lim), lim);
  return make_flag_table(s, lambda, m);
}

}  // namespace cartan
