#pragma once

#include <map>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "charring.hpp"
#include "g0reps.hpp"
#include "weights.hpp"

namespace cartan {

namespace detail {

inline void require_flag_family(const AlgebraSpec& s) {
  if (s.family == Family::CH)
    throw UnsupportedShapeError("unsupported atypical shape: no Kac composition series for CH-bar");
}

inline void require_dominant(const AlgebraSpec& s, const Weight& w, const char* what) {
  if (!is_dominant(s, w)) throw DominanceError(std::string(what) + ": weight " + w.str() + " is not dominant");
}

inline Weight e(const AlgebraSpec& s, int i) { return Weight::eps_unit(s, i); }
inline Weight dl(const AlgebraSpec& s, std::int64_t k) { return Rational(k) * Weight::delta_unit(s); }

inline bool all_equal(const Weight& w, int from, int to) {
  for (int i = from + 1; i < to; ++i) if (w.eps(i) != w.eps(from)) return false;
  return true;
}

// w = k Xi + c eps_1 with c = w_1 - w_2 (n >= 3)
inline bool xi_plus_first(const Weight& w, Rational& c) {
  int m = w.eps_dim();
  if (!all_equal(w, 1, m)) return false;
  c = w.eps(0) - w.eps(1);
  return true;
}
// w = k Xi + c eps_n with c = w_n - w_1
inline bool xi_plus_last(const Weight& w, Rational& c) {
  int m = w.eps_dim();
  if (!all_equal(w, 0, m - 1)) return false;
  c = w.eps(m - 1) - w.eps(0);
  return true;
}

// H: w = a eps_1 + m delta
inline bool first_plus_delta(const Weight& w, Rational& a) {
  for (int i = 1; i < w.eps_dim(); ++i) if (!w.eps(i).is_zero()) return false;
  a = w.eps(0);
  return true;
}

}  // namespace detail

// lambda' with Lbar(lambda) = L(lambda')
inline Weight bar_to_simple(const AlgebraSpec& s, const Weight& w) {
  detail::require_flag_family(s);
  detail::require_dominant(s, w, "bar_to_simple");
  const int m = s.eps_dim();
  if (s.family == Family::W) {
    if (w.is_zero()) return w;
    for (int i = 0; i < m; ++i) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = w.eps(j).is_zero();
      for (int j = i + 1; j < m && ok; ++j) ok = w.eps(j) == Rational(1);
      if (ok) return w - xi(s) + detail::e(s, i);
    }
    return w - xi(s);
  }
  if (s.family == Family::S) {
    Rational c;
    if (detail::xi_plus_last(w, c)) {
      if (c.is_zero()) return w;
      if (c == Rational(-1)) return w - xi(s) + detail::e(s, 0) + detail::e(s, m - 1);
      return w - xi(s) + detail::e(s, m - 1);
    }
    if (detail::xi_plus_first(w, c)) return w - xi(s) + detail::e(s, 0);
    return w - xi(s);
  }
  Rational a;
  if (detail::first_plus_delta(w, a) && a.is_zero()) return w;
  if (serganova_atypical(s, w)) return w + detail::dl(s, 2 - s.n);
  return w - detail::dl(s, s.n);
}

// Simple constituents (K(kappa):L(nu)) with offsets relative to the simple head of K(kappa).
inline FlagTable kac_factors(const AlgebraSpec& s, const Weight& k) {
  detail::require_flag_family(s);
  detail::require_dominant(s, k, "kac_factors");
  const int m = s.eps_dim();
  const int n = s.n;
  const Weight X = xi(s);
  std::vector<Weight> f;
  if (!serganova_atypical(s, k)) {
    f = {bar_to_simple(s, k)};
  } else if (s.family == Family::W) {
    bool first_rest_one = true;
    for (int i = 1; i < m; ++i) first_rest_one = first_rest_one && k.eps(i) == Rational(1);
    if (k.is_zero()) {
      f = {k, -X};
    } else if (first_rest_one) {
      Rational a = k.eps(0);
      if (a == Rational(1)) f = {detail::e(s, 0), Weight(s)};
      else f = {a * detail::e(s, 0), (a - Rational(1)) * detail::e(s, 0)};
    } else {
      Rational a = k.eps(m - 1);
      f = {(a + Rational(1)) * detail::e(s, m - 1) - X, a * detail::e(s, m - 1) - X};
    }
  } else if (s.family == Family::S) {
    Rational c;
    const Weight e1 = detail::e(s, 0), en = detail::e(s, m - 1);
    if (detail::xi_plus_last(k, c) && c.is_zero()) {
      f = {k, k - X, k - X + e1};
    } else if (detail::xi_plus_first(k, c) && c == Rational(1)) {
      Weight a = k - e1;
      f = {a - X + e1 + e1, a - X + e1, a};
    } else if (detail::xi_plus_last(k, c) && c == Rational(-1)) {
      Weight a = k + en;
      f = {a - X + e1, a - X - en, a - X};
    } else if (detail::xi_plus_first(k, c)) {
      f = {k - X + e1, k - X};
    } else if (detail::xi_plus_last(k, c)) {
      f = {k - X + en, k - X};
    } else {
      throw UnsupportedShapeError("unsupported atypical shape " + k.str());
    }
  } else {
    Rational b;
    if (!detail::first_plus_delta(k, b) || !b.is_integer() || b < Rational(0))
      throw UnsupportedShapeError("unsupported atypical shape " + k.str());
    const Weight e1 = detail::e(s, 0);
    if (b.is_zero()) {
      f = {k, k - detail::dl(s, n), e1 + k + detail::dl(s, 1 - n)};
    } else if (b == Rational(1)) {
      Weight ad = k - e1;
      f = {ad - detail::dl(s, 1), ad + detail::dl(s, 1 - n), k + e1 + detail::dl(s, 1 - n), k + detail::dl(s, 2 - n),
           k - detail::dl(s, n)};
    } else {
      f = {k + detail::dl(s, 2 - n), k - detail::dl(s, n), k + e1 + detail::dl(s, 1 - n), k - e1 + detail::dl(s, 1 - n)};
    }
  }
  std::map<Weight, std::int64_t> mult;
  for (auto& w : f) {
    if (!is_dominant(s, w)) throw Error("kac_factors produced a non-dominant constituent " + w.str());
    mult[w] += 1;
  }
  return make_flag_table(s, bar_to_simple(s, k), mult);
}

// duality used by the tilting reciprocity: -w0 on eps; on H-bar also delta -> -delta in the basis eps_i + delta
inline Weight reciprocity_dual(const AlgebraSpec& s, const Weight& w) {
  Weight out = minus_w0(s, w);
  if (s.hamiltonian()) out.set_delta(ht(w) + ht(out) - w.delta());
  return out;
}

// candidate offsets for reciprocity inversion
struct CandidateBox {
  int eps = 2;
  int delta_extra = 2;  // delta range is n + delta_extra
};

namespace detail {

inline void box_walk(const AlgebraSpec& s, const Weight& base, const CandidateBox& box, int i, Weight cur,
                     std::vector<Weight>& out) {
  if (i == cur.size()) {
    if (is_dominant(s, cur)) out.push_back(cur);
    return;
  }
  int b = (s.has_delta() && i == s.eps_dim()) ? s.n + box.delta_extra : box.eps;
  for (int k = -b; k <= b; ++k) {
    Weight nx = cur;
    nx[i] = base[i] + Rational(k);
    box_walk(s, base, box, i + 1, nx, out);
  }
}

}  // namespace detail

inline std::vector<Weight> candidate_weights(const AlgebraSpec& s, const Weight& base, CandidateBox box = {}) {
  std::vector<Weight> out;
  detail::box_walk(s, base, box, 0, base, out);
  return out;
}

inline bool inside_box(const AlgebraSpec& s, const Weight& v, CandidateBox box = {}) {
  for (int i = 0; i < s.eps_dim(); ++i) if (Rational(box.eps) < abs(v.eps(i))) return false;
  return !s.has_delta() || !(Rational(s.n + box.delta_extra) < abs(v.delta()));
}

// [T(mu):Delta(lambda)] by Soergel reciprocity
inline std::int64_t tilting_multiplicity(const AlgebraSpec& s, const Weight& mu, const Weight& lambda) {
  Weight kac, simple;
  if (s.family == Family::W) {
    kac = minus_w0(s, lambda) + Rational(2) * xi(s);
    simple = minus_w0(s, mu) + xi(s);
  } else if (s.family == Family::S) {
    kac = minus_w0(s, lambda) + xi(s);
    simple = minus_w0(s, mu);
  } else {
    kac = reciprocity_dual(s, lambda) + costandard_shift(s);
    simple = reciprocity_dual(s, mu);
  }
  return kac_factors(s, kac).get(simple);
}

// [P(lambda):Delta(mu)] by the degenerate BGG reciprocity
inline std::int64_t projective_multiplicity(const AlgebraSpec& s, const Weight& lambda, const Weight& mu) {
  return kac_factors(s, mu + costandard_shift(s)).get(lambda);
}

inline FlagTable tilting_flag(const AlgebraSpec& s, const Weight& mu, CandidateBox box = {}) {
  detail::require_flag_family(s);
  detail::require_dominant(s, mu, "tilting_flag");
  std::map<Weight, std::int64_t> m;
  for (auto& lam : candidate_weights(s, mu, box))
    if (auto c = tilting_multiplicity(s, mu, lam)) m[lam] = c;
  return make_flag_table(s, mu, m);
}

inline FlagTable projective_flag(const AlgebraSpec& s, const Weight& lambda, CandidateBox box = {}) {
  detail::require_flag_family(s);
  detail::require_dominant(s, lambda, "projective_flag");
  std::map<Weight, std::int64_t> m;
  for (auto& mu : candidate_weights(s, lambda, box))
    if (auto c = projective_multiplicity(s, lambda, mu)) m[mu] = c;
  return make_flag_table(s, lambda, m);
}

// Closed case tables for tilting modules, indexed by the top weight.
inline FlagTable tilting_flag_closed(const AlgebraSpec& s, const Weight& mu) {
  detail::require_flag_family(s);
  detail::require_dominant(s, mu, "tilting_flag_closed");
  const int m = s.eps_dim();
  const Weight X = xi(s);
  std::vector<Weight> v{mu};
  if (s.family == Family::W) {
    Rational c;
    if (mu == X) {
      v.push_back(Rational(2) * X);
    } else if (detail::xi_plus_first(mu, c) && mu.eps(1) == Rational(2) && mu.eps(0) >= Rational(2)) {
      v.push_back(mu + detail::e(s, 0));
    } else if (detail::xi_plus_last(mu, c) && mu.eps(0) == Rational(1) && mu.eps(m - 1) <= Rational(0)) {
      v.push_back(mu + detail::e(s, m - 1));
    }
  } else if (s.family == Family::S) {
    Rational c;
    const Weight e1 = detail::e(s, 0), en = detail::e(s, m - 1);
    if (detail::xi_plus_last(mu, c) && c.is_zero()) {
      v = {mu, mu + X, mu + X - en, mu + e1};
    } else if (detail::xi_plus_last(mu, c) && c == Rational(-1)) {
      v = {mu + en, mu, mu + e1 + en};
    } else if (detail::xi_plus_last(mu, c) && c <= Rational(-2)) {
      v.push_back(mu + en);
    } else if (detail::xi_plus_first(mu, c) && c >= Rational(1)) {
      v.push_back(mu + e1);
    }
  } else {
    Rational a;
    const Weight e1 = detail::e(s, 0);
    if (detail::first_plus_delta(mu, a) && a.is_zero()) {
      v = {mu, mu + detail::dl(s, s.n), e1 + mu + detail::dl(s, s.n + 1), e1 + mu + detail::dl(s, 3)};
    } else if (detail::first_plus_delta(mu, a) && a >= Rational(1)) {
      v = {mu, mu + detail::dl(s, 2), mu + e1 + detail::dl(s, 3), mu - e1 - detail::dl(s, 1)};
    }
  }
  std::map<Weight, std::int64_t> t;
  for (auto& w : v) t[w] += 1;
  return make_flag_table(s, mu, t);
}

// Closed case tables for projective covers.
inline FlagTable projective_flag_closed(const AlgebraSpec& s, const Weight& lam) {
  detail::require_flag_family(s);
  detail::require_dominant(s, lam, "projective_flag_closed");
  const int m = s.eps_dim();
  const Weight X = xi(s);
  std::vector<Weight> v{lam};
  if (s.family == Family::W) {
    Rational c;
    const Weight e1 = detail::e(s, 0), en = detail::e(s, m - 1);
    if (lam.is_zero()) {
      v.push_back(-X);
    } else if (detail::xi_plus_first(lam, c) && lam.eps(1).is_zero() && c >= Rational(1)) {
      v.push_back(lam - e1);
    } else if (detail::xi_plus_last(lam, c) && lam.eps(0) == Rational(-1) && lam.eps(m - 1) <= Rational(-1)) {
      v.push_back(lam - en);
    }
  } else if (s.family == Family::S) {
    Rational c;
    const Weight e1 = detail::e(s, 0), en = detail::e(s, m - 1);
    if (detail::xi_plus_last(lam, c) && c.is_zero()) {
      v = {lam, lam - X, lam - X + e1, lam - en};
    } else if (detail::xi_plus_first(lam, c) && c == Rational(1)) {
      v = {lam, lam - e1, lam - e1 - en};
    } else if (detail::xi_plus_first(lam, c) && c >= Rational(2)) {
      v.push_back(lam - e1);
    } else if (detail::xi_plus_last(lam, c) && c <= Rational(-1)) {
      v.push_back(lam - en);
    }
  } else {
    Rational a;
    const Weight e1 = detail::e(s, 0);
    if (detail::first_plus_delta(lam, a) && a.is_zero()) {
      v = {lam, lam - detail::dl(s, s.n), lam + e1 + detail::dl(s, 1 - s.n), lam + e1 - detail::dl(s, 1)};
    } else if (detail::first_plus_delta(lam, a) && a >= Rational(1)) {
      v = {lam, lam - detail::dl(s, 2), lam + e1 - detail::dl(s, 1), lam - e1 - detail::dl(s, 1)};
    }
  }
  std::map<Weight, std::int64_t> t;
  for (auto& w : v) t[w] += 1;
  return make_flag_table(s, lam, t);
}

inline FormalCharacter flag_g0_character(const AlgebraSpec& s, const FlagTable& t) {
  FormalCharacter ch;
  for (auto& e : t.entries) ch.axpy(e.mult, irreducible_character(s, e.weight));
  return ch;
}

inline TruncatedSeries flag_character(const AlgebraSpec& s, const FlagTable& t, int cutoff) {
  std::optional<TruncatedSeries> acc;
  for (auto& e : t.entries) {
    TruncatedSeries term = ch_standard(s, e.weight, cutoff);
    for (std::int64_t k = 1; k < e.mult; ++k) term = term + ch_standard(s, e.weight, cutoff);
    acc = acc ? *acc + term : term;
  }
  return acc.value_or(TruncatedSeries(FormalCharacter(), 0, Rational(cutoff), s));
}

inline TruncatedSeries ch_tilting(const AlgebraSpec& s, const Weight& mu, int cutoff) {
  return flag_character(s, tilting_flag(s, mu), cutoff);
}
inline TruncatedSeries ch_projective(const AlgebraSpec& s, const Weight& lam, int cutoff) {
  return flag_character(s, projective_flag(s, lam), cutoff);
}

// Pi times the closed sum of g0-characters
inline TruncatedSeries ch_tilting_closed(const AlgebraSpec& s, const Weight& mu, int cutoff) {
  return pi_times(s, flag_g0_character(s, tilting_flag_closed(s, mu)), cutoff);
}
inline TruncatedSeries ch_projective_closed(const AlgebraSpec& s, const Weight& lam, int cutoff) {
  return pi_times(s, flag_g0_character(s, projective_flag_closed(s, lam)), cutoff);
}

}  // namespace cartan
