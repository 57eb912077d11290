#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "spec.hpp"
#include "weight.hpp"

namespace cartan {

// Grassmann monomials are bitmasks: bit i stands for xi_{i+1}.
using Mono = std::uint32_t;

inline int mono_degree(Mono m) { return std::popcount(m); }

inline std::vector<int> mono_indices(Mono m) {
  std::vector<int> out;
  for (int i = 0; m >> i; ++i) if ((m >> i) & 1u) out.push_back(i);
  return out;
}

// xi_a * xi_b: returns (sign, product); sign 0 when they share a generator
inline std::pair<int, Mono> mono_mul(Mono a, Mono b) {
  if (a & b) return {0, 0};
  int swaps = 0;
  for (Mono t = b; t; t &= t - 1) {
    int y = std::countr_zero(t);
    swaps += std::popcount(a >> (y + 1));
  }
  return {(swaps & 1) ? -1 : 1, a | b};
}

// left derivation D_i applied to a monomial
inline std::pair<int, Mono> mono_deriv(int i, Mono m) {
  if (!((m >> i) & 1u)) return {0, 0};
  int before = std::popcount(m & ((Mono(1) << i) - 1));
  return {(before & 1) ? -1 : 1, m ^ (Mono(1) << i)};
}

struct GrassmannElement {
  std::map<Mono, Rational> terms;

  void add(Mono m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  static GrassmannElement mono(Mono m, Rational c = 1) { GrassmannElement g; g.add(m, c); return g; }
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) { return a.terms == b.terms; }

  // parity if homogeneous, else nullopt
  std::optional<int> parity() const {
    std::optional<int> p;
    for (auto& [m, c] : terms) {
      int q = mono_degree(m) & 1;
      if (p && *p != q) return std::nullopt;
      p = q;
    }
    return p.value_or(0);
  }
};

// Linear combination of xi_I D_j.
class SuperElement {
 public:
  using Key = std::uint32_t;  // (mono << 4) | j

  SuperElement() = default;
  explicit SuperElement(int n) : n_(n) {}

  static Key key(Mono m, int j) { return (m << 4) | static_cast<Key>(j); }
  static Mono key_mono(Key k) { return k >> 4; }
  static int key_der(Key k) { return static_cast<int>(k & 15u); }

  static SuperElement basis(int n, Mono m, int j, Rational c = 1) {
    SuperElement e(n);
    e.add(m, j, c);
    return e;
  }

  int n() const { return n_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Mono m, int j, const Rational& c) { add_key(key(m, j), c); }
  void add_key(Key k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  Rational coeff(Mono m, int j) const {
    auto it = terms_.find(key(m, j));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  SuperElement& axpy(const Rational& a, const SuperElement& o) {
    check(o);
    if (a.is_zero()) return *this;
    for (auto& [k, c] : o.terms_) add_key(k, a * c);
    return *this;
  }
  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a.axpy(1, b); }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a.axpy(-1, b); }
  friend SuperElement operator*(const Rational& s, const SuperElement& a) {
    SuperElement r(a.n_);
    return r.axpy(s, a);
  }
  friend bool operator==(const SuperElement& a, const SuperElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  // Z-degree if homogeneous
  std::optional<int> degree() const {
    std::optional<int> d;
    for (auto& [k, c] : terms_) {
      int q = mono_degree(key_mono(k)) - 1;
      if (d && *d != q) return std::nullopt;
      d = q;
    }
    return d;
  }
  std::optional<int> parity() const {
    std::optional<int> p;
    for (auto& [k, c] : terms_) {
      int q = (mono_degree(key_mono(k)) + 1) & 1;
      if (p && *p != q) return std::nullopt;
      p = q;
    }
    return p;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      if (c != Rational(1)) s += "(" + c.str() + ")";
      for (int i : mono_indices(key_mono(k))) s += "x" + std::to_string(i + 1);
      s += "D" + std::to_string(key_der(k) + 1);
    }
    return s;
  }

 private:
  int n_ = 0;
  std::map<Key, Rational> terms_;

  void check(const SuperElement& o) const {
    if (o.n_ != n_) throw DimensionError("super elements over different n");
  }
};

// [f D_i, g D_j] = f D_i(g) D_j - (-1)^{p p'} g D_j(f) D_i on basis pairs
inline SuperElement bracket(const SuperElement& x, const SuperElement& y) {
  if (x.n() != y.n()) throw DimensionError("bracket over different n");
  SuperElement out(x.n());
  for (auto& [kx, cx] : x.terms()) {
    Mono f = SuperElement::key_mono(kx);
    int i = SuperElement::key_der(kx);
    int px = (mono_degree(f) + 1) & 1;
    for (auto& [ky, cy] : y.terms()) {
      Mono g = SuperElement::key_mono(ky);
      int j = SuperElement::key_der(ky);
      int py = (mono_degree(g) + 1) & 1;
      Rational c = cx * cy;
      auto [s1, dg] = mono_deriv(i, g);
      if (s1) {
        auto [s2, m] = mono_mul(f, dg);
        if (s2) out.add(m, j, c * Rational(s1 * s2));
      }
      auto [t1, df] = mono_deriv(j, f);
      if (t1) {
        auto [t2, m] = mono_mul(g, df);
        if (t2) {
          int sign = (px & py) ? 1 : -1;
          out.add(m, i, c * Rational(sign * t1 * t2));
        }
      }
    }
  }
  return out;
}

inline GrassmannElement divergence(const SuperElement& x) {
  GrassmannElement out;
  for (auto& [k, c] : x.terms()) {
    auto [s, m] = mono_deriv(SuperElement::key_der(k), SuperElement::key_mono(k));
    if (s) out.add(m, c * Rational(s));
  }
  return out;
}

// partner index under the pairing i <-> i+r, with 2r+1 fixed (0-indexed)
inline int hamiltonian_partner(int n, int i) {
  int r = n / 2;
  if (i < r) return i + r;
  if (i < 2 * r) return i - r;
  return i;
}

inline SuperElement hamiltonian(int n, const GrassmannElement& f) {
  auto p = f.parity();
  if (!p) throw ParityError("hamiltonian: input not parity-homogeneous");
  Rational sign = (*p & 1) ? Rational(-1) : Rational(1);
  SuperElement out(n);
  for (auto& [m, c] : f.terms)
    for (int i = 0; i < n; ++i) {
      auto [s, dm] = mono_deriv(i, m);
      if (s) out.add(dm, hamiltonian_partner(n, i), sign * c * Rational(s));
    }
  return out;
}

inline SuperElement degree_operator(int n) {
  SuperElement d(n);
  for (int i = 0; i < n; ++i) d.add(Mono(1) << i, i, 1);
  return d;
}

// h-bar weight of xi_I D_j in the family's coordinates
inline Weight term_weight(const AlgebraSpec& s, Mono m, int j) {
  Weight w(s);
  if (s.witt_like()) {
    for (int i : mono_indices(m)) w[i] += 1;
    w[j] -= 1;
    return w;
  }
  int r = s.r();
  auto add_tilde = [&](int i, int sgn) {
    if (i < r) w[i] += sgn;
    else if (i < 2 * r) w[i - r] -= sgn;
  };
  for (int i : mono_indices(m)) add_tilde(i, 1);
  add_tilde(j, -1);
  w.set_delta(mono_degree(m) - 1);
  return w;
}

// Incremental echelon form over rational sparse vectors, optionally tracking
// coefficients with respect to the inserted generators.
class SpanSolver {
 public:
  using Key = SuperElement::Key;
  using Vec = std::map<Key, Rational>;

  explicit SpanSolver(bool track = false) : track_(track) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t generators() const { return ngen_; }

  // returns true if the vector enlarged the span
  bool insert(const SuperElement& x) {
    Vec v = x.terms();
    std::vector<Rational> comb;
    if (track_) { comb.assign(ngen_ + 1, Rational(0)); comb[ngen_] = 1; }
    ++ngen_;
    reduce(v, comb, true);
    if (v.empty()) return false;
    Key p = v.begin()->first;
    rows_.emplace(p, Row{std::move(v), std::move(comb)});
    return true;
  }

  bool contains(const SuperElement& x) const {
    Vec v = x.terms();
    std::vector<Rational> comb;
    reduce(v, comb, false);
    return v.empty();
  }

  // coefficients with respect to the inserted generators, or nullopt if outside the span
  std::optional<std::vector<Rational>> coords(const SuperElement& x) const {
    if (!track_) throw Error("SpanSolver: coordinates need tracking");
    Vec v = x.terms();
    std::vector<Rational> acc(ngen_, Rational(0));
    for (auto& [p, row] : rows_) {
      auto it = v.find(p);
      if (it == v.end()) continue;
      Rational f = it->second / row.v.at(p);
      for (auto& [k, c] : row.v) sub(v, k, f * c);
      for (std::size_t g = 0; g < row.comb.size(); ++g)
        if (!row.comb[g].is_zero()) acc[g] += f * row.comb[g];
    }
    if (!v.empty()) return std::nullopt;
    return acc;
  }

 private:
  struct Row {
    Vec v;
    std::vector<Rational> comb;
  };
  bool track_;
  std::size_t ngen_ = 0;
  std::map<Key, Row> rows_;

  static void sub(Vec& v, Key k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.emplace(k, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second.is_zero()) v.erase(it);
    }
  }

  void reduce(Vec& v, std::vector<Rational>& comb, bool with_comb) const {
    for (auto& [p, row] : rows_) {
      if (v.empty()) break;
      if (p < v.begin()->first) continue;
      auto it = v.find(p);
      if (it == v.end()) continue;
      Rational f = it->second / row.v.at(p);
      for (auto& [k, c] : row.v) sub(v, k, f * c);
      if (with_comb && track_) {
        if (comb.size() < row.comb.size()) comb.resize(row.comb.size(), Rational(0));
        for (std::size_t g = 0; g < row.comb.size(); ++g)
          if (!row.comb[g].is_zero()) comb[g] -= f * row.comb[g];
      }
    }
  }
};

struct BasisElement {
  SuperElement x;
  int degree = 0;
  int parity = 0;
  Weight weight;
  std::string label;
};

struct Algebra {
  AlgebraSpec spec;
  std::vector<BasisElement> basis;

  std::vector<int> indices_of_degree(int k) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
      if (basis[i].degree == k) out.push_back(i);
    return out;
  }
  std::size_t dim() const { return basis.size(); }
  std::size_t dim_of_degree(int k) const { return indices_of_degree(k).size(); }
};

namespace detail {

inline std::string mono_label(Mono m) {
  std::string s;
  for (int i : mono_indices(m)) s += "x" + std::to_string(i + 1);
  return s;
}

// rational nullspace of a dense matrix (rows x cols); returns basis vectors of length cols
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> a, int cols) {
  int rows = static_cast<int>(a.size());
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) if (!a[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    Rational inv = Rational(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (int k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(cols, false);
  for (int c : pivcol) is_piv[c] = true;
  std::vector<std::vector<Rational>> out;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[fc] = 1;
    for (int i = 0; i < static_cast<int>(pivcol.size()); ++i) v[pivcol[i]] = -a[i][fc];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

inline Algebra build_algebra(const AlgebraSpec& spec) {
  spec.validate();
  const int n = spec.n;
  Algebra alg;
  alg.spec = spec;
  auto push = [&](SuperElement x, std::string label) {
    BasisElement b;
    b.degree = *x.degree();
    b.parity = *x.parity();
    auto k = x.terms().begin()->first;
    b.weight = term_weight(spec, SuperElement::key_mono(k), SuperElement::key_der(k));
    b.x = std::move(x);
    b.label = std::move(label);
    alg.basis.push_back(std::move(b));
  };
  std::vector<Mono> monos;
  for (Mono m = 0; m < (Mono(1) << n); ++m) monos.push_back(m);
  std::stable_sort(monos.begin(), monos.end(), [](Mono a, Mono b) {
    return mono_degree(a) != mono_degree(b) ? mono_degree(a) < mono_degree(b) : a < b;
  });

  if (spec.family == Family::W) {
    for (Mono m : monos)
      for (int j = 0; j < n; ++j) push(SuperElement::basis(n, m, j), detail::mono_label(m) + "D" + std::to_string(j + 1));
    return alg;
  }

  if (spec.family == Family::S) {
    for (int deg = -1; deg <= n - 2; ++deg) {
      // group W_deg by weight; divergence-free part of each weight space
      std::map<Weight, std::vector<std::pair<Mono, int>>> groups;
      for (Mono m : monos) {
        if (mono_degree(m) != deg + 1) continue;
        for (int j = 0; j < n; ++j) groups[term_weight(spec, m, j)].push_back({m, j});
      }
      for (auto& [w, terms] : groups) {
        std::map<Mono, int> rowid;
        std::vector<GrassmannElement> divs;
        for (auto& [m, j] : terms) {
          GrassmannElement d = divergence(SuperElement::basis(n, m, j));
          for (auto& [dm, c] : d.terms) rowid.emplace(dm, static_cast<int>(rowid.size()));
          divs.push_back(d);
        }
        int cols = static_cast<int>(terms.size());
        std::vector<std::vector<Rational>> mat(rowid.size(), std::vector<Rational>(cols, Rational(0)));
        for (int c = 0; c < cols; ++c)
          for (auto& [dm, v] : divs[c].terms) mat[rowid[dm]][c] = v;
        for (auto& v : detail::nullspace(mat, cols)) {
          SuperElement x(n);
          for (int c = 0; c < cols; ++c) x.add(terms[c].first, terms[c].second, v[c]);
          push(x, "S[" + x.str() + "]");
        }
      }
      if (deg == 0) push(degree_operator(n), "d");
    }
    return alg;
  }

  // Hamiltonian families
  for (Mono m : monos) {
    int k = mono_degree(m);
    if (k == 0) continue;
    if (k == n && spec.family != Family::CH) continue;
    push(hamiltonian(n, GrassmannElement::mono(m)), "DH(" + detail::mono_label(m) + ")");
    if (k == 2 && m == (Mono(1) << (n - 1)) + (Mono(1) << (n - 2))) push(degree_operator(n), "d");
  }
  return alg;
}

// Linear functional on g_0 given by diagonal weights on xi_i D_i.
struct SemiInfiniteCharacter {
  std::vector<Rational> diag;

  static SemiInfiniteCharacter standard(const AlgebraSpec& s) {
    SemiInfiniteCharacter e;
    e.diag.assign(s.n, s.family == Family::W ? Rational(-1) : Rational(0));
    return e;
  }
  Rational operator()(const SuperElement& z) const {
    Rational v = 0;
    for (int i = 0; i < static_cast<int>(diag.size()); ++i) v += diag[i] * z.coeff(Mono(1) << i, i);
    return v;
  }
};

inline Rational supertrace_ad_pair(const Algebra& alg, const SpanSolver& g0_coords, const std::vector<int>& g0,
                                   const SuperElement& x, const SuperElement& y) {
  if (x.degree() != std::optional<int>(1)) throw DimensionError("supertrace_ad_pair: x must have degree 1");
  if (y.degree() != std::optional<int>(-1)) throw DimensionError("supertrace_ad_pair: y must have degree -1");
  Rational tr = 0;
  for (std::size_t k = 0; k < g0.size(); ++k) {
    const BasisElement& z = alg.basis[g0[k]];
    SuperElement v = bracket(x, bracket(y, z.x));
    auto c = g0_coords.coords(v);
    if (!c) throw Error("supertrace_ad_pair: image left g_0");
    // g_0 is purely even, so the supertrace is the trace
    tr += (*c)[k];
  }
  return tr;
}

inline SpanSolver coordinate_solver(const Algebra& alg, const std::vector<int>& idx) {
  SpanSolver s(true);
  for (int i : idx) s.insert(alg.basis[i].x);
  return s;
}

inline Rational supertrace_ad_pair(const Algebra& alg, const SuperElement& x, const SuperElement& y) {
  auto g0 = alg.indices_of_degree(0);
  return supertrace_ad_pair(alg, coordinate_solver(alg, g0), g0, x, y);
}

struct SemiInfiniteReport {
  bool generation = false;   // g_-1 + g_0 + g_1 generates
  bool trace_identity = false;
  int rounds = 0;            // productive bracketing rounds
  int round_bound = 0;
  std::vector<std::size_t> generated_dims, algebra_dims;  // per degree -1..top
  std::size_t pairs_checked = 0;
  std::optional<std::pair<std::string, std::string>> witness;
  Rational witness_character = 0, witness_trace = 0;
  bool pass() const { return generation && trace_identity && rounds <= round_bound; }
};

// Subalgebra generated by g_-1, g_0, g_1: closure under brackets of newly added vectors.
inline std::vector<std::size_t> generated_dimensions(const Algebra& alg, int* rounds_out) {
  const int lo = -1, top = alg.spec.top_degree();
  const int nd = top - lo + 1;
  std::vector<SpanSolver> span(nd);
  std::vector<std::vector<SuperElement>> all(nd), fresh(nd);
  for (int k = -1; k <= std::min(1, top); ++k)
    for (int i : alg.indices_of_degree(k))
      if (span[k - lo].insert(alg.basis[i].x)) { all[k - lo].push_back(alg.basis[i].x); fresh[k - lo].push_back(alg.basis[i].x); }
  int rounds = 0;
  for (;;) {
    std::vector<std::vector<SuperElement>> next(nd);
    bool grew = false;
    for (int a = lo; a <= top; ++a)
      for (int b = lo; b <= top; ++b) {
        int c = a + b;
        if (c < 2 || c > top) continue;
        for (auto& u : fresh[a - lo])
          for (auto& v : all[b - lo]) {
            SuperElement w = bracket(u, v);
            if (w.is_zero()) continue;
            if (span[c - lo].insert(w)) { next[c - lo].push_back(w); grew = true; }
          }
      }
    if (!grew) break;
    ++rounds;
    for (int k = 0; k < nd; ++k) {
      for (auto& w : next[k]) all[k].push_back(w);
      fresh[k] = std::move(next[k]);
    }
  }
  if (rounds_out) *rounds_out = rounds;
  std::vector<std::size_t> dims;
  for (int k = 0; k < nd; ++k) dims.push_back(span[k].rank());
  return dims;
}

inline SemiInfiniteReport verify_semi_infinite(const Algebra& alg, const SemiInfiniteCharacter& e) {
  SemiInfiniteReport rep;
  const int top = alg.spec.top_degree();
  rep.round_bound = alg.spec.n - 2;
  rep.generated_dims = generated_dimensions(alg, &rep.rounds);
  for (int k = -1; k <= top; ++k) rep.algebra_dims.push_back(alg.dim_of_degree(k));
  rep.generation = rep.generated_dims == rep.algebra_dims;

  auto g0 = alg.indices_of_degree(0);
  SpanSolver coords = coordinate_solver(alg, g0);
  rep.trace_identity = true;
  for (int xi : alg.indices_of_degree(1))
    for (int yi : alg.indices_of_degree(-1)) {
      const auto& x = alg.basis[xi].x;
      const auto& y = alg.basis[yi].x;
      Rational tr = supertrace_ad_pair(alg, coords, g0, x, y);
      Rational ev = e(bracket(x, y));
      ++rep.pairs_checked;
      if (tr != ev && rep.trace_identity) {
        rep.trace_identity = false;
        rep.witness = std::make_pair(alg.basis[xi].label, alg.basis[yi].label);
        rep.witness_character = ev;
        rep.witness_trace = tr;
      }
    }
  return rep;
}

inline SemiInfiniteReport verify_semi_infinite(const AlgebraSpec& spec) {
  Algebra alg = build_algebra(spec);
  return verify_semi_infinite(alg, SemiInfiniteCharacter::standard(spec));
}

}  // namespace cartan
