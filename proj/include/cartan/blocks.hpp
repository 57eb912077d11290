#pragma once

#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "g0reps.hpp"
#include "weights.hpp"

namespace cartan {

inline bool serganova_atypical(const AlgebraSpec& s, const Weight& w) {
  const int m = s.eps_dim();
  switch (s.family) {
    case Family::W:
      // a eps_i + eps_{i+1} + ... + eps_n
      for (int i = 0; i < m; ++i) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) ok = w.eps(j).is_zero();
        for (int j = i + 1; j < m && ok; ++j) ok = w.eps(j) == Rational(1);
        if (ok) return true;
      }
      return false;
    case Family::S:
      // a..a, b, a+1..a+1
      for (int i = 0; i < m; ++i) {
        std::optional<Rational> a;
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
          if (j == i) continue;
          Rational cand = j < i ? w.eps(j) : w.eps(j) - Rational(1);
          if (!a) a = cand;
          else ok = *a == cand;
        }
        if (ok) return true;
      }
      return false;
    case Family::H:
    case Family::CH:
      // -eps_1 - ... - eps_{i-1} + b eps_i + a delta
      for (int i = 0; i < m; ++i) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) ok = w.eps(j) == Rational(-1);
        for (int j = i + 1; j < m && ok; ++j) ok = w.eps(j).is_zero();
        if (ok) return true;
      }
      return false;
  }
  return false;
}

inline bool is_typical(const AlgebraSpec& s, const Weight& w) {
  return !serganova_atypical(s, w + costandard_shift(s));
}

inline bool bar_atypical(const AlgebraSpec& s, const Weight& w) {
  const int m = s.eps_dim();
  auto integral = [](const Rational& q) { return q.is_integer(); };
  if (s.hamiltonian()) {
    for (int i = 1; i < m; ++i) if (!w.eps(i).is_zero()) return false;
    return integral(w.eps(0)) && w.eps(0) >= Rational(0);
  }
  if (s.family == Family::W) {
    // +-Xi + b eps_n, b <= 0
    for (int sign : {1, -1}) {
      bool ok = true;
      for (int i = 0; i + 1 < m && ok; ++i) ok = w.eps(i) == Rational(sign);
      Rational b = w.eps(m - 1) - Rational(sign);
      if (ok && integral(b) && b <= Rational(0)) return true;
    }
    // d Xi + a eps_1, d in {0, 2}, a >= 0
    for (int d : {0, 2}) {
      bool ok = true;
      for (int i = 1; i < m && ok; ++i) ok = w.eps(i) == Rational(d);
      Rational a = w.eps(0) - Rational(d);
      if (ok && integral(a) && a >= Rational(0)) return true;
    }
    return false;
  }
  // S: a eps_1 + k Xi (a >= 1) or k Xi + c eps_n (c <= 0)
  {
    bool ok = true;
    for (int i = 2; i < m && ok; ++i) ok = w.eps(i) == w.eps(1);
    Rational a = w.eps(0) - w.eps(1);
    if (ok && integral(a) && a >= Rational(1)) return true;
  }
  {
    bool ok = true;
    for (int i = 1; i + 1 < m && ok; ++i) ok = w.eps(i) == w.eps(0);
    Rational c = w.eps(m - 1) - w.eps(0);
    if (ok && integral(c) && c <= Rational(0)) return true;
  }
  return false;
}

inline bool bar_typical(const AlgebraSpec& s, const Weight& w) { return !bar_atypical(s, w); }

inline void require_block_family(const AlgebraSpec& s) {
  if (s.family == Family::CH) throw UnsupportedShapeError("block classification is not available for CH-bar");
}

// difference lies in ZXi + Q, Zdelta + ZTheta_B + Q, or 2Zdelta + ZTheta_D + Q
inline bool in_block_subgroup(const AlgebraSpec& s, const Weight& v) {
  for (int i = 0; i < v.size(); ++i) if (!v[i].is_integer()) return false;
  if (s.witt_like() || s.odd()) return true;
  return ((v.delta() - ht(v)).num() % 2) == 0;
}

inline bool same_block(const AlgebraSpec& s, const SimpleParam& a, const SimpleParam& b) {
  require_block_family(s);
  if (!is_dominant(s, a.weight) || !is_dominant(s, b.weight)) throw DominanceError("same_block: non-dominant weight");
  Weight diff = b.weight - a.weight;
  if (!in_block_subgroup(s, diff)) return false;
  Rational l = ell(s, diff);
  if (!l.is_integer()) return false;
  return b.depth - a.depth == l.num() && mod2(b.parity - a.parity) == mod2(l.num());
}

struct BlockKey {
  Rational c;                  // coset of delta (H) or of the Xi-multiple (W, S)
  std::optional<Rational> d;   // coset of the Theta-multiple (H)
  int parity_anchor = 0;
  std::int64_t depth_anchor = 0;
  Weight anchor;

  friend bool operator==(const BlockKey& x, const BlockKey& y) {
    return x.c == y.c && x.d == y.d && x.parity_anchor == y.parity_anchor && x.depth_anchor == y.depth_anchor;
  }
  std::string str() const {
    std::ostringstream os;
    os << "c=" << c.str();
    if (d) os << ",d=" << d->str();
    os << ",iota=" << parity_anchor << ",i=" << depth_anchor;
    return os.str();
  }
};

inline BlockKey block_key(const AlgebraSpec& s, const SimpleParam& p) {
  require_block_family(s);
  const Weight& w = p.weight;
  if (!is_dominant(s, w)) throw DominanceError("block_key: non-dominant weight " + w.str());
  BlockKey k;
  if (s.witt_like()) {
    k.c = w.eps(s.eps_dim() - 1).frac();
    k.anchor = k.c * xi(s);
  } else {
    Rational d0 = w.eps(0).frac();
    k.d = d0;
    Weight th = theta(s);
    if (s.odd()) {
      k.c = w.delta().frac();
    } else {
      Weight rest = w - d0 * th;
      k.c = (w.delta() - d0 * Rational(aleph(s)) - ht(rest)).mod(2);
    }
    k.anchor = d0 * th + k.c * Weight::delta_unit(s);
  }
  Rational l = ell(s, w - k.anchor);
  if (!l.is_integer()) throw Error("block_key: non-integral length offset");
  k.depth_anchor = p.depth - l.num();
  k.parity_anchor = mod2(p.parity - l.num());
  return k;
}

struct FdBlockKey {
  Rational c;
  std::optional<Rational> d;
  int parity_anchor = 0;
  friend bool operator==(const FdBlockKey& x, const FdBlockKey& y) {
    return x.c == y.c && x.d == y.d && x.parity_anchor == y.parity_anchor;
  }
};

inline FdBlockKey fd_block_key(const AlgebraSpec& s, const SimpleParam& p) {
  BlockKey k = block_key(s, p);
  return {k.c, k.d, k.parity_anchor};
}

struct LinkageWindow {
  int coord_bound = 3;  // |eps_i - shift_i| bound
  int ell_bound = 6;    // |l(mu - seed)| bound
};

struct LinkageComponent {
  SimpleParam seed;
  std::vector<SimpleParam> members;
  std::vector<std::pair<int, int>> edges;

  std::string dot() const {
    std::ostringstream os;
    os << "graph linkage {\n";
    for (std::size_t i = 0; i < members.size(); ++i)
      os << "  n" << i << " [label=\"" << members[i].weight.str() << " d" << members[i].depth << " p"
         << members[i].parity << "\"];\n";
    for (auto& [a, b] : edges) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
  }
};

namespace detail {

inline void window_weights(const AlgebraSpec& s, const Weight& seed, const LinkageWindow& win, int i, Weight cur,
                           std::vector<Weight>& out) {
  if (i == cur.size()) {
    if (is_dominant(s, cur)) out.push_back(cur);
    return;
  }
  int bound = (s.has_delta() && i == s.eps_dim()) ? win.ell_bound : win.coord_bound;
  for (int k = -bound; k <= bound; ++k) {
    Weight nx = cur;
    nx[i] = seed[i] + Rational(k);
    window_weights(s, seed, win, i + 1, nx, out);
  }
}

}  // namespace detail

// Undirected closure of "mu occurs in the Delta-flag of I(lambda)" inside a finite window.
inline LinkageComponent linkage_oracle(const AlgebraSpec& s, const SimpleParam& seed, LinkageWindow win = {},
                                       int rounds = 1 << 20) {
  require_block_family(s);
  std::vector<Weight> pool;
  detail::window_weights(s, seed.weight, win, 0, seed.weight, pool);
  std::set<Weight> in_window;
  for (auto& w : pool)
    if (abs(ell(s, w - seed.weight)) <= Rational(win.ell_bound)) in_window.insert(w);
  std::map<Weight, std::set<Weight>> adj;
  for (auto& w : in_window)
    for (auto& e : upsilon(s, w).entries)
      if (in_window.count(e.weight) && e.weight != w) {
        adj[w].insert(e.weight);
        adj[e.weight].insert(w);
      }
  LinkageComponent comp;
  comp.seed = seed;
  std::map<Weight, int> index{{seed.weight, 0}};
  comp.members.push_back(seed);
  std::deque<int> queue{0};
  for (int round = 0; !queue.empty() && round < rounds; ++round) {
    int cur = queue.front();
    queue.pop_front();
    SimpleParam p = comp.members[cur];
    for (auto& nb : adj[p.weight]) {
      auto it = index.find(nb);
      if (it == index.end()) {
        std::int64_t off = integral_offset(s, p.weight, nb);
        it = index.emplace(nb, static_cast<int>(comp.members.size())).first;
        comp.members.push_back({nb, p.depth + off, mod2(p.parity + off)});
        queue.push_back(it->second);
      }
      if (cur < it->second) comp.edges.push_back({cur, it->second});
    }
  }
  return comp;
}

}  // namespace cartan
