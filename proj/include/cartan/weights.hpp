#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "rational.hpp"
#include "spec.hpp"
#include "weight.hpp"

namespace cartan {

inline Rational ht(const Weight& w) { return w.eps_sum(); }

inline Rational ell(const AlgebraSpec& s, const Weight& w) { return s.hamiltonian() ? w.delta() : w.eps_sum(); }

inline bool is_dominant(const AlgebraSpec& s, const Weight& w) {
  const int m = s.eps_dim();
  if (s.witt_like()) {
    for (int i = 0; i + 1 < m; ++i) {
      Rational d = w.eps(i) - w.eps(i + 1);
      if (!d.is_integer() || d < Rational(0)) return false;
    }
    return true;
  }
  for (int i = 0; i < m; ++i)
    if (!w.eps(i).is_half_integer()) return false;
  for (int i = 0; i + 1 < m; ++i)
    if (!(w.eps(i) - w.eps(i + 1)).is_integer()) return false;
  if (s.odd()) {
    for (int i = 0; i + 1 < m; ++i) if (w.eps(i) < w.eps(i + 1)) return false;
    return w.eps(m - 1) >= Rational(0);
  }
  for (int i = 0; i + 2 < m; ++i) if (w.eps(i) < w.eps(i + 1)) return false;
  return w.eps(m - 2) >= abs(w.eps(m - 1));
}

inline Weight zero_weight(const AlgebraSpec& s) { return Weight(s); }

// Xi = sum of all eps (W, S-bar)
inline Weight xi(const AlgebraSpec& s) {
  Weight w(s);
  for (int i = 0; i < s.eps_dim(); ++i) w[i] = 1;
  return w;
}

inline int aleph(const AlgebraSpec& s) { return s.r() % 2; }

// Theta_B for odd n, Theta_D with aleph_r for even n
inline Weight theta(const AlgebraSpec& s) {
  if (!s.hamiltonian()) throw DimensionError("theta is defined for the Hamiltonian families");
  Weight w(s);
  for (int i = 0; i < s.r(); ++i) w[i] = 1;
  if (!s.odd()) w.set_delta(aleph(s));
  return w;
}

inline Weight delta_tilde(const AlgebraSpec& s) {
  return (s.odd() ? Rational(1) : Rational(2)) * Weight::delta_unit(s);
}

struct Distinguished {
  Weight anchor;                 // Xi or Theta
  std::optional<Weight> dtilde;  // Hamiltonian families
  int aleph = 0;
};

inline Distinguished distinguished(const AlgebraSpec& s) {
  if (s.witt_like()) return {xi(s), std::nullopt, 0};
  return {theta(s), delta_tilde(s), s.odd() ? 0 : aleph(s)};
}

// shift taking a costandard module to its Kac realisation (Xi or n delta)
inline Weight costandard_shift(const AlgebraSpec& s) {
  return s.witt_like() ? xi(s) : Rational(s.n) * Weight::delta_unit(s);
}

struct RootDatum {
  std::set<Weight> all_roots;
  std::set<Weight> positive_g0;
  std::set<Weight> even_ge1, odd_ge1;
};

inline RootDatum root_system(const AlgebraSpec& s) {
  s.validate();
  RootDatum rd;
  const int n = s.n;
  auto add = [&](const Weight& w, int deg) {
    if (w.is_zero()) return;
    rd.all_roots.insert(w);
    if (deg >= 1) (deg % 2 ? rd.odd_ge1 : rd.even_ge1).insert(w);
  };
  if (s.witt_like()) {
    Weight x = xi(s);
    for (unsigned I = 0; I < (1u << n); ++I)
      for (int j = 0; j < n; ++j) {
        Weight w(s);
        int k = 0;
        for (int i = 0; i < n; ++i) if ((I >> i) & 1u) { w[i] += 1; ++k; }
        w[j] -= 1;
        if (s.family == Family::S && w == x - Weight::eps_unit(s, j)) continue;
        add(w, k - 1);
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) rd.positive_g0.insert(Weight::eps_unit(s, i) - Weight::eps_unit(s, j));
    return rd;
  }
  // +-eps_{i1} +- ... +- eps_{ik} + l delta, k-2 <= l <= n-3, k + l <= n-2 (l - k even when n is even)
  const int r = s.r();
  for (unsigned I = 0; I < (1u << r); ++I) {
    int k = __builtin_popcount(I);
    for (unsigned sg = 0; sg < (1u << r); ++sg) {
      if (sg & ~I) continue;
      for (int l = std::max(k - 2, -1); l <= std::min(n - 3, n - 2 - k); ++l) {
        if (!s.odd() && ((l - k) % 2 != 0)) continue;
        Weight w(s);
        for (int i = 0; i < r; ++i)
          if ((I >> i) & 1u) w[i] = ((sg >> i) & 1u) ? -1 : 1;
        w.set_delta(l);
        add(w, l);
      }
    }
  }
  if (s.family == Family::CH) add(Rational(n - 2) * Weight::delta_unit(s), n - 2);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      rd.positive_g0.insert(Weight::eps_unit(s, i) - Weight::eps_unit(s, j));
      rd.positive_g0.insert(Weight::eps_unit(s, i) + Weight::eps_unit(s, j));
    }
    if (s.odd()) rd.positive_g0.insert(Weight::eps_unit(s, i));
  }
  return rd;
}

inline bool in_root_lattice(const AlgebraSpec& s, const Weight& w) {
  for (int i = 0; i < s.eps_dim(); ++i) if (!w.eps(i).is_integer()) return false;
  if (s.witt_like()) return true;
  Rational d = w.delta();
  if (!d.is_integer()) return false;
  if (s.odd()) return true;
  return ((d - ht(w)).num() % 2) == 0;
}

// -w0 for the Weyl group of g_0; the delta slot is left untouched
inline Weight minus_w0(const AlgebraSpec& s, const Weight& w) {
  Weight out = w;
  const int m = s.eps_dim();
  if (s.witt_like()) {
    for (int i = 0; i < m; ++i) out[i] = -w.eps(m - 1 - i);
    return out;
  }
  if (!s.odd() && (s.r() % 2 == 1)) out[m - 1] = -w.eps(m - 1);
  return out;
}

}  // namespace cartan
