#pragma once

// Independent brute-force references used by the verification suites.

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "g0reps.hpp"
#include "superalgebra.hpp"
#include "weights.hpp"

namespace cartan::oracle {

// Natural representation of g_0' with lowering operators for the simple roots.
struct NaturalRep {
  int dim = 0;
  std::vector<std::vector<int>> wt;
  std::vector<std::vector<std::tuple<int, int, int>>> lower;  // (from, to, coeff)
  std::vector<int> pos, neg;                                  // basis index of +eps_i, -eps_i
};

inline NaturalRep natural_rep(LieType t, int m) {
  NaturalRep v;
  auto unit = [&](int i, int s) { std::vector<int> w(m, 0); if (i >= 0) w[i] = s; return w; };
  if (t == LieType::A) {
    v.dim = m;
    for (int i = 0; i < m; ++i) { v.wt.push_back(unit(i, 1)); v.pos.push_back(i); }
    for (int i = 0; i + 1 < m; ++i) v.lower.push_back({{i, i + 1, 1}});
    return v;
  }
  const bool b = t == LieType::B;
  v.dim = 2 * m + (b ? 1 : 0);
  v.wt.assign(v.dim, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    v.pos.push_back(i);
    v.neg.push_back(v.dim - 1 - i);
    v.wt[i] = unit(i, 1);
    v.wt[v.dim - 1 - i] = unit(i, -1);
  }
  for (int i = 0; i + 1 < m; ++i) v.lower.push_back({{v.pos[i], v.pos[i + 1], 1}, {v.neg[i + 1], v.neg[i], -1}});
  if (b) {
    int z = m;
    v.lower.push_back({{v.pos[m - 1], z, 1}, {z, v.neg[m - 1], -1}});
  } else {
    v.lower.push_back({{v.pos[m - 2], v.neg[m - 1], 1}, {v.pos[m - 1], v.neg[m - 2], -1}});
  }
  return v;
}

using TensorVec = std::map<std::uint64_t, Rational>;

namespace detail {

constexpr int kBits = 4;

inline int digit(std::uint64_t key, int p) { return static_cast<int>((key >> (kBits * p)) & 15u); }
inline std::uint64_t with_digit(std::uint64_t key, int p, int d) {
  key &= ~(std::uint64_t(15) << (kBits * p));
  return key | (std::uint64_t(d) << (kBits * p));
}

inline void axpy(TensorVec& a, const Rational& c, const TensorVec& b) {
  for (auto& [k, v] : b) {
    auto [it, fresh] = a.emplace(k, c * v);
    if (!fresh) {
      it->second += c * v;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

// e_{i1} ^ ... ^ e_{ik} placed at tensor positions [off, off+k)
inline TensorVec wedge(const std::vector<int>& idx, int off) {
  std::vector<int> perm(idx.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  TensorVec out;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) key = with_digit(key, off + static_cast<int>(i), idx[perm[i]]);
    out[key] = Rational(inv % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline TensorVec tensor(const TensorVec& a, const TensorVec& b) {
  TensorVec out;
  for (auto& [ka, va] : a)
    for (auto& [kb, vb] : b) out[ka | kb] = va * vb;
  return out;
}

}  // namespace detail

// Weight multiplicities of L0(lambda) on the semisimple eps part, as the cyclic span of a
// highest-weight vector inside a tensor power of the natural representation. Integral lambda only.
inline std::map<std::vector<int>, std::int64_t> matrix_model_multiplicities(LieType t, const std::vector<int>& lambda) {
  const int m = static_cast<int>(lambda.size());
  NaturalRep v = natural_rep(t, m);
  std::vector<std::vector<int>> columns;
  int shift = 0;
  std::vector<int> lam = lambda;
  if (t == LieType::A) {
    shift = lam[m - 1];
    for (auto& x : lam) x -= shift;
  }
  auto first = [&](int k) { std::vector<int> c; for (int i = 0; i < k; ++i) c.push_back(v.pos[i]); return c; };
  int top = t == LieType::D ? m - 1 : m;
  for (int k = 1; k <= top; ++k) {
    int ck = k < m ? lam[k - 1] - lam[k] : lam[m - 1];
    if (t == LieType::D && k == m - 1) ck = lam[m - 2] - std::abs(lam[m - 1]);
    if (t == LieType::A && k == m) ck = 0;
    for (int j = 0; j < ck; ++j) columns.push_back(first(k));
  }
  if (t == LieType::D) {
    std::vector<int> c = first(m - 1);
    c.push_back(lam[m - 1] >= 0 ? v.pos[m - 1] : v.neg[m - 1]);
    for (int j = 0; j < std::abs(lam[m - 1]); ++j) columns.push_back(c);
  }
  int total = 0;
  TensorVec hw{{0, Rational(1)}};
  for (auto& c : columns) {
    hw = detail::tensor(hw, detail::wedge(c, total));
    total += static_cast<int>(c.size());
  }
  if (total > 16 || v.dim > 15) throw ResourceError("matrix model too large");

  auto weight_of = [&](std::uint64_t key) {
    std::vector<int> w(m, 0);
    for (int p = 0; p < total; ++p)
      for (int i = 0; i < m; ++i) w[i] += v.wt[detail::digit(key, p)][i];
    return w;
  };
  std::map<std::vector<int>, std::map<std::uint64_t, TensorVec>> echelon;
  auto insert = [&](TensorVec x) -> std::optional<TensorVec> {
    if (x.empty()) return std::nullopt;
    auto& rows = echelon[weight_of(x.begin()->first)];
    for (auto it = rows.begin(); it != rows.end() && !x.empty(); ++it) {
      auto f = x.find(it->first);
      if (f == x.end()) continue;
      Rational c = f->second / it->second.at(it->first);
      detail::axpy(x, -c, it->second);
    }
    if (x.empty()) return std::nullopt;
    // keep rows fully reduced against the new pivot
    std::uint64_t piv = x.begin()->first;
    for (auto& [p, row] : rows) {
      auto f = row.find(piv);
      if (f != row.end()) detail::axpy(row, -(f->second / x.at(piv)), x);
    }
    rows.emplace(piv, x);
    return x;
  };
  std::deque<TensorVec> queue;
  if (auto x = insert(hw)) queue.push_back(*x);
  while (!queue.empty()) {
    TensorVec x = queue.front();
    queue.pop_front();
    for (auto& op : v.lower) {
      TensorVec y;
      for (auto& [key, c] : x)
        for (int p = 0; p < total; ++p)
          for (auto& [from, to, coef] : op)
            if (detail::digit(key, p) == from) {
              TensorVec one{{detail::with_digit(key, p, to), c * Rational(coef)}};
              detail::axpy(y, 1, one);
            }
      if (auto z = insert(y)) queue.push_back(*z);
    }
  }
  std::map<std::vector<int>, std::int64_t> out;
  for (auto& [w, rows] : echelon) {
    if (rows.empty()) continue;
    std::vector<int> ws = w;
    for (auto& x : ws) x += shift;
    out[ws] = static_cast<std::int64_t>(rows.size());
  }
  return out;
}

// Integer row echelon form of the root lattice.
class IntegerLattice {
 public:
  explicit IntegerLattice(const std::vector<std::vector<std::int64_t>>& gens) {
    if (gens.empty()) return;
    cols_ = static_cast<int>(gens[0].size());
    std::vector<std::vector<std::int64_t>> a = gens;
    int row = 0;
    for (int c = 0; c < cols_ && row < static_cast<int>(a.size()); ++c) {
      for (;;) {
        int best = -1;
        for (int r = row; r < static_cast<int>(a.size()); ++r)
          if (a[r][c] != 0 && (best < 0 || std::llabs(a[r][c]) < std::llabs(a[best][c]))) best = r;
        if (best < 0) break;
        std::swap(a[row], a[best]);
        bool clean = true;
        for (int r = row + 1; r < static_cast<int>(a.size()); ++r) {
          if (a[r][c] == 0) continue;
          std::int64_t q = a[r][c] / a[row][c];
          for (int k = 0; k < cols_; ++k) a[r][k] -= q * a[row][k];
          if (a[r][c] != 0) clean = false;
        }
        if (clean) break;
      }
      if (row < static_cast<int>(a.size()) && a[row][c] != 0) {
        pivots_.push_back({c, a[row]});
        ++row;
      }
    }
  }

  bool contains(const Weight& w) const {
    std::vector<std::int64_t> v(cols_);
    for (int i = 0; i < cols_; ++i) {
      if (!w[i].is_integer()) return false;
      v[i] = w[i].num();
    }
    for (auto& [c, r] : pivots_) {
      if (v[c] % r[c] != 0) return false;
      std::int64_t q = v[c] / r[c];
      for (int k = 0; k < cols_; ++k) v[k] -= q * r[k];
    }
    for (auto x : v) if (x != 0) return false;
    return true;
  }

 private:
  int cols_ = 0;
  std::vector<std::pair<int, std::vector<std::int64_t>>> pivots_;
};

inline IntegerLattice root_lattice(const AlgebraSpec& s) {
  std::vector<std::vector<std::int64_t>> gens;
  for (auto& w : root_system(s).all_roots) {
    std::vector<std::int64_t> g;
    for (auto& c : w.coords()) g.push_back(c.num());
    gens.push_back(g);
  }
  return IntegerLattice(gens);
}

// -w0 via the Weyl orbit of -lambda under simple reflections (delta untouched)
inline Weight minus_w0_by_orbit(const AlgebraSpec& s, const Weight& w) {
  LieType t = g0_type(s);
  const int m = s.eps_dim();
  std::vector<std::vector<int>> simple;
  for (int i = 0; i + 1 < m; ++i) {
    std::vector<int> a(m, 0);
    a[i] = 1;
    a[i + 1] = -1;
    simple.push_back(a);
  }
  if (t == LieType::B) { std::vector<int> a(m, 0); a[m - 1] = 1; simple.push_back(a); }
  if (t == LieType::D) { std::vector<int> a(m, 0); a[m - 2] = 1; a[m - 1] = 1; simple.push_back(a); }
  Weight start = w;
  for (int i = 0; i < m; ++i) start[i] = -w.eps(i);
  std::set<Weight> seen{start};
  std::deque<Weight> q{start};
  while (!q.empty()) {
    Weight x = q.front();
    q.pop_front();
    if (::cartan::detail::shape_dominant(t, x)) return x;
    for (auto& a : simple) {
      Rational ip = 0, aa = 0;
      for (int i = 0; i < m; ++i) { ip += x.eps(i) * Rational(a[i]); aa += Rational(a[i] * a[i]); }
      Weight y = x;
      Rational k = Rational(2) * ip / aa;
      for (int i = 0; i < m; ++i) y[i] -= k * Rational(a[i]);
      if (seen.insert(y).second) q.push_back(y);
    }
  }
  throw Error("minus_w0_by_orbit: no dominant element in orbit");
}

// Direct count of U(g_{>=1}) PBW monomials by degree, as a character truncated at cutoff.
inline FormalCharacter pbw_character(const AlgebraSpec& s, int cutoff) {
  std::vector<std::pair<Weight, int>> gens;
  for (auto& b : build_algebra(s).basis)
    if (b.degree >= 1 && b.degree <= cutoff) gens.push_back({b.weight, b.degree});
  FormalCharacter out;
  // depth-first over generators, choosing exponent 0/1 (odd) or 0.. (even)
  std::function<void(std::size_t, Weight, int)> rec = [&](std::size_t i, Weight w, int deg) {
    if (i == gens.size()) { out.add(w, 1); return; }
    auto& [g, d] = gens[i];
    int maxe = d % 2 ? 1 : cutoff / d;
    Weight cur = w;
    for (int e = 0; e <= maxe && deg + e * d <= cutoff; ++e) {
      rec(i + 1, cur, deg + e * d);
      cur = cur + g;
    }
  };
  rec(0, Weight(s), 0);
  return out;
}

}  // namespace cartan::oracle
