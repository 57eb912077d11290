#pragma once

// Verification suites shared by the CLI `verify` command and the acceptance runner.

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "charring.hpp"
#include "flags.hpp"
#include "g0reps.hpp"
#include "oracles.hpp"
#include "superalgebra.hpp"
#include "weights.hpp"

namespace cartan::checks {

struct Result {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

inline std::vector<Rational> default_shifts(const AlgebraSpec& s) {
  if (s.witt_like()) return {Rational(0), Rational(1, 3), Rational(-1, 2)};
  return {Rational(0), Rational(1, 2)};
}

// dominant weights near base: each eps coordinate offset in [-e, e], delta offset in [-d, d]
inline std::vector<Weight> dominant_grid(const AlgebraSpec& s, int e, int d, Rational eps_shift = 0,
                                         Rational delta_shift = 0) {
  Weight base(s);
  for (int i = 0; i < s.eps_dim(); ++i) base[i] = eps_shift;
  if (s.has_delta()) base.set_delta(delta_shift);
  return candidate_weights(s, base, {e, d - s.n});
}

inline std::string join(const std::vector<Weight>& ws) {
  std::string out;
  for (auto& w : ws) out += (out.empty() ? "" : " ") + w.str();
  return out;
}

// ---- semi-infinite character

inline Result semi_infinite(const AlgebraSpec& s) {
  Result r{"semi-infinite " + s.name()};
  auto rep = verify_semi_infinite(s);
  std::ostringstream os;
  os << "pairs=" << rep.pairs_checked << " rounds=" << rep.rounds << "/" << rep.round_bound << " generated=";
  for (std::size_t i = 0; i < rep.generated_dims.size(); ++i)
    os << (i ? "," : "") << rep.generated_dims[i] << "/" << rep.algebra_dims[i];
  r.detail = os.str();
  if (!rep.trace_identity)
    r.fail("trace identity fails at (" + rep.witness->first + ", " + rep.witness->second + "): " +
           rep.witness_trace.str() + " vs " + rep.witness_character.str());
  else if (!rep.generation)
    r.fail("g_-1 + g_0 + g_1 does not generate; " + os.str());
  else if (rep.rounds > rep.round_bound)
    r.fail("closure needed more than n-2 rounds; " + os.str());
  return r;
}

inline Result semi_infinite_mutation(const AlgebraSpec& s) {
  Result r{"semi-infinite mutation " + s.name()};
  Algebra alg = build_algebra(s);
  auto e = SemiInfiniteCharacter::standard(s);
  e.diag[0] += Rational(1);
  auto rep = verify_semi_infinite(alg, e);
  if (rep.trace_identity || !rep.witness) r.fail("perturbed character was not rejected");
  else r.detail = "rejected with witness (" + rep.witness->first + ", " + rep.witness->second + ")";
  return r;
}

// ---- costandard modules

inline std::vector<Weight> sample_dominant(const AlgebraSpec& s, std::size_t count) {
  std::vector<Weight> out;
  for (auto sh : default_shifts(s))
    for (auto& w : dominant_grid(s, 1, s.n + 1, sh, s.has_delta() ? Rational(1, 3) : Rational(0))) {
      if (out.size() >= count) return out;
      out.push_back(w);
    }
  return out;
}

inline Result costandard(const AlgebraSpec& s, std::size_t count = 24) {
  Result r{"costandard Kac realisation " + s.name()};
  std::size_t n = 0;
  for (auto& lam : sample_dominant(s, count)) {
    ++n;
    FormalCharacter a = ch_costandard_direct(s, lam), b = ch_costandard_kac(s, lam);
    if (!(a == b)) { r.fail("Hom and Kac descriptions differ at " + lam.str()); continue; }
    Rational dim = weyl_dimension(s, lam);
    if (Rational(a.mass()) != Rational(std::int64_t(1) << s.n) * dim)
      r.fail("mass of costandard " + lam.str() + " is " + std::to_string(a.mass()));
  }
  if (r.pass) r.detail = std::to_string(n) + " weights";
  if (n < 20) r.fail("too few sample weights");
  return r;
}

// ---- Delta-flag of injective hulls

inline Result upsilon_suite(const AlgebraSpec& s, std::size_t count = 12) {
  Result r{"injective hull flags " + s.name()};
  std::size_t n = 0;
  for (auto& lam : sample_dominant(s, count)) {
    ++n;
    FlagTable t = upsilon(s, lam);
    auto need = [&](const Weight& mu, bool exact_one) {
      std::int64_t m = t.get(mu);
      if (exact_one ? m != 1 : m < 1) r.fail("n(" + lam.str() + ", " + mu.str() + ") = " + std::to_string(m));
    };
    need(lam, true);
    if (s.witt_like()) {
      need(lam - xi(s), false);
    } else {
      need(lam - Rational(s.n) * Weight::delta_unit(s), false);
      Weight acc = lam;
      for (int k = 1; k <= s.r(); ++k) {
        acc = acc + Weight::eps_unit(s, k - 1);
        need(acc - Rational(s.n - k) * Weight::delta_unit(s), false);
      }
    }
    FormalCharacter lhs;
    for (auto& e : t.entries) {
      lhs.axpy(e.mult, irreducible_character(s, e.weight));
      if (!in_root_lattice(s, e.weight - lam)) r.fail("constituent outside lambda + Q: " + e.weight.str());
      if (e.depth_offset != ell(s, e.weight - lam).num()) r.fail("bad depth offset at " + e.weight.str());
    }
    if (!(lhs == wedge_g_minus1_character(s) * irreducible_character(s, lam))) r.fail("sum rule fails at " + lam.str());
  }
  if (r.pass) r.detail = std::to_string(n) + " weights";
  return r;
}

// ---- blocks

inline std::vector<SimpleParam> block_pool(const AlgebraSpec& s) {
  std::vector<SimpleParam> pool;
  std::vector<Rational> dsh = s.has_delta() ? std::vector<Rational>{0, Rational(1, 2), Rational(1)} : std::vector<Rational>{0};
  for (auto sh : default_shifts(s))
    for (auto ds : dsh)
      for (auto& w : dominant_grid(s, 1, s.has_delta() ? 2 : 0, sh, ds))
        for (int d = -2; d <= 2; ++d)
          for (int p = 0; p < 2; ++p) pool.push_back({w, d, p});
  return pool;
}

inline Result block_equivalence(const AlgebraSpec& s, std::size_t pairs, std::uint64_t seed) {
  Result r{"block equivalence " + s.name()};
  auto pool = block_pool(s);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t linked = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto& a = pool[pick(rng)];
    // bias half the pairs towards related weights so both outcomes occur
    SimpleParam b = pool[pick(rng)];
    if (i % 2) {
      Rational l = ell(s, b.weight - a.weight);
      if (l.is_integer()) {
        b.depth = a.depth + l.num();
        b.parity = mod2(a.parity + l.num());
      }
    }
    const auto& c = pool[pick(rng)];
    bool ab = same_block(s, a, b), ba = same_block(s, b, a);
    linked += ab;
    if (!same_block(s, a, a)) r.fail("not reflexive at " + a.weight.str());
    if (ab != ba) r.fail("not symmetric");
    if ((block_key(s, a) == block_key(s, b)) != ab) r.fail("key equality disagrees with same_block");
    if (ab && same_block(s, b, c) && !same_block(s, a, c)) r.fail("not transitive");
    if ((fd_block_key(s, a) == fd_block_key(s, b)) < ab) r.fail("finite-dimensional key finer than graded key");
  }
  if (r.pass) r.detail = std::to_string(pairs) + " pairs, " + std::to_string(linked) + " linked, seed " + std::to_string(seed);
  return r;
}

inline Result block_oracle(const AlgebraSpec& s, const std::vector<Weight>& seeds) {
  Result r{"linkage oracle soundness " + s.name()};
  std::size_t members = 0, violations = 0;
  for (auto& w : seeds) {
    SimpleParam seed{w, 0, 0};
    auto comp = linkage_oracle(s, seed);
    for (auto& m : comp.members) {
      ++members;
      if (!same_block(s, seed, m)) {
        ++violations;
        r.fail("linked but not same block: " + m.weight.str());
      }
      if (!s.odd() && s.hamiltonian()) {
        SimpleParam up{m.weight + Weight::delta_unit(s), m.depth, m.parity};
        for (int d = -1; d <= 1; ++d)
          for (int p = 0; p < 2; ++p) {
            up.depth = m.depth + d;
            up.parity = p;
            if (is_dominant(s, up.weight) && same_block(s, m, up)) r.fail("delta shift in the same block at " + m.weight.str());
          }
      }
    }
  }
  if (r.pass) r.detail = std::to_string(seeds.size()) + " seeds, " + std::to_string(members) + " linked simples, 0 violations";
  return r;
}

// statistical: same-block simples near the seed should be reached by the oracle in a wider window
inline Result block_completeness(const AlgebraSpec& s, double threshold = 0.9) {
  Result r{"linkage oracle completeness " + s.name()};
  SimpleParam seed{Weight(s), 0, 0};
  auto comp = linkage_oracle(s, seed, {3, 6 + 2 * s.n});
  std::set<Weight> reached;
  for (auto& m : comp.members) reached.insert(m.weight);
  std::size_t total = 0, hit = 0;
  for (auto& w : candidate_weights(s, Weight(s), {1, 2 - s.n})) {
    if (!is_dominant(s, w) || !ell(s, w).is_integer()) continue;
    std::int64_t l = ell(s, w).num();
    if (!same_block(s, seed, {w, l, mod2(l)})) continue;
    ++total;
    hit += reached.count(w);
  }
  r.detail = std::to_string(hit) + "/" + std::to_string(total) + " same-block simples reached";
  if (total == 0 || double(hit) < threshold * double(total)) r.fail(r.detail);
  return r;
}

inline Result delta_exclusion(const AlgebraSpec& s) {
  Result r{"delta exclusion " + s.name()};
  std::size_t n = 0;
  for (auto& p : block_pool(s)) {
    Weight up = p.weight + Weight::delta_unit(s);
    for (int d = -3; d <= 3; ++d)
      for (int q = 0; q < 2; ++q) {
        ++n;
        if (same_block(s, p, {up, p.depth + d, q})) r.fail("L(lambda) and L(lambda+delta) linked at " + p.weight.str());
      }
  }
  if (r.pass) r.detail = std::to_string(n) + " comparisons";
  return r;
}

inline Result lattice(const AlgebraSpec& s) {
  Result r{"root lattice congruences " + s.name()};
  auto L = oracle::root_lattice(s);
  std::size_t n = 0;
  std::function<void(int, Weight)> rec = [&](int i, Weight w) {
    if (i == w.size()) {
      ++n;
      if (L.contains(w) != in_root_lattice(s, w)) r.fail("disagreement at " + w.str());
      Weight h = w;
      h[0] += Rational(1, 2);
      if (L.contains(h) != in_root_lattice(s, h)) r.fail("disagreement at " + h.str());
      return;
    }
    for (int k = -3; k <= 3; ++k) { w[i] = k; rec(i + 1, w); }
  };
  rec(0, Weight(s));
  if (r.pass) r.detail = std::to_string(n) + " box points";
  return r;
}

// ---- reciprocity sweeps

inline std::vector<Weight> atypical_sweep(const AlgebraSpec& s) {
  const std::vector<int> as{-3, -2, -1, 0, 1, 2, 3}, bs{1, 2, 3, 4}, ms{-2, -1, 0, 1, 2, 3};
  const std::vector<Rational> ks{-2, Rational(-1, 2), 0, Rational(1, 3), 1};
  std::set<Weight> out;
  auto keep = [&](const Weight& w) { if (is_dominant(s, w)) out.insert(w); };
  const int m = s.eps_dim();
  if (s.witt_like()) {
    const Weight X = xi(s), e1 = Weight::eps_unit(s, 0), en = Weight::eps_unit(s, m - 1);
    for (auto k : ks) {
      for (int a : as) { keep(k * X + Rational(a) * e1); keep(k * X + Rational(a) * en); }
      for (int b : bs) { keep(k * X + Rational(b) * e1); keep(k * X - Rational(b) * en); }
    }
    for (int a : as) {
      keep(Rational(2) * X + Rational(-a) * e1);
      keep(Rational(a) * e1);
      keep(Rational(a) * en);
      keep(Rational(a) * e1 + X - e1);
    }
    for (int b : bs) { keep(X - Rational(b) * en); keep(-X + Rational(1 - b) * en); keep(X - en + Rational(1 - b) * en); }
    return {out.begin(), out.end()};
  }
  const Weight e1 = Weight::eps_unit(s, 0), d = Weight::delta_unit(s);
  for (auto k : ks)
    for (int mm : ms) {
      Weight base = (k + Rational(mm)) * d;
      keep(base);
      for (int a : as) keep(base + Rational(a) * e1);
      for (int b : bs) keep(base + Rational(b) * e1);
    }
  return {out.begin(), out.end()};
}

inline Result reciprocity(const AlgebraSpec& s) {
  Result r{"reciprocity vs closed tables " + s.name()};
  auto sweep = atypical_sweep(s);
  // include typical neighbours
  for (auto& w : dominant_grid(s, 1, s.has_delta() ? 2 : 0, Rational(0), Rational(0))) sweep.push_back(w);
  std::size_t nontrivial = 0;
  for (auto& w : sweep) {
    FlagTable t = tilting_flag(s, w), tc = tilting_flag_closed(s, w);
    FlagTable p = projective_flag(s, w), pc = projective_flag_closed(s, w);
    if (t.as_map() != tc.as_map()) r.fail("tilting " + w.str() + " differs from the closed table");
    if (p.as_map() != pc.as_map()) r.fail("projective " + w.str() + " differs from the closed table");
    for (auto* tab : {&t, &p})
      for (auto& e : tab->entries) {
        if (e.mult != 1) r.fail("multiplicity " + std::to_string(e.mult) + " at " + e.weight.str());
        if (!inside_box(s, e.weight - w)) r.fail("candidate-box assumption violated at " + w.str());
        if (!same_block(s, {w, 0, 0}, {e.weight, e.depth_offset, e.parity_offset}))
          r.fail("flag constituent outside the block of " + w.str());
      }
    if (t.get(w) != 1 || p.get(w) != 1) r.fail("[T:Delta] or [P:Delta] at the top is not 1 for " + w.str());
    nontrivial += t.entries.size() > 1 || p.entries.size() > 1;
  }
  if (r.pass) r.detail = std::to_string(sweep.size()) + " weights, " + std::to_string(nontrivial) + " nontrivial";
  return r;
}

// Kac composition factors scanned against the candidate box
inline Result kac_box(const AlgebraSpec& s) {
  Result r{"Kac factor offsets " + s.name()};
  std::size_t n = 0;
  for (auto& k : atypical_sweep(s)) {
    FlagTable f = kac_factors(s, k);
    ++n;
    for (auto& e : f.entries) {
      if (!inside_box(s, k - costandard_shift(s) - e.weight)) r.fail("factor " + e.weight.str() + " of K" + k.str() + " outside the box");
      if (e.mult != 1) r.fail("Kac multiplicity above one at " + k.str());
    }
  }
  if (r.pass) r.detail = std::to_string(n) + " Kac modules";
  return r;
}

// ---- character formulas

inline std::vector<Weight> branch_representatives(const AlgebraSpec& s) {
  const int m = s.eps_dim();
  if (s.witt_like()) {
    const Weight X = xi(s), e1 = Weight::eps_unit(s, 0), en = Weight::eps_unit(s, m - 1);
    if (s.family == Family::W)
      return {X, Rational(2) * X, Rational(2) * X + e1, X - en, X - Rational(2) * en, Weight(s), Rational(2) * e1,
              -X - en, Rational(3) * e1, Rational(2) * e1 + X};
    const Rational k(1, 3);
    return {k * X, k * X - en, k * X - Rational(2) * en, k * X + e1, k * X + Rational(2) * e1, Weight(s), X + e1,
            Rational(2) * e1 + X, X + Rational(2) * e1 - en};
  }
  const Weight e1 = Weight::eps_unit(s, 0), d = Weight::delta_unit(s);
  Weight both = e1 + Weight::eps_unit(s, 1);
  return {Rational(2) * d, e1 + d, Rational(2) * e1 - d, both + Rational(3) * d, Rational(1, 3) * d, Weight(s)};
}

inline Result character_formulas(const AlgebraSpec& s, int cutoff) {
  Result r{"character formulas " + s.name()};
  std::size_t n = 0;
  for (auto& w : branch_representatives(s)) {
    if (!is_dominant(s, w)) continue;
    ++n;
    auto t = ch_tilting(s, w, cutoff), tc = ch_tilting_closed(s, w, cutoff);
    auto p = ch_projective(s, w, cutoff), pc = ch_projective_closed(s, w, cutoff);
    if (!(t == tc)) r.fail("tilting character differs at " + w.str());
    if (!(p == pc)) r.fail("projective character differs at " + w.str());
    for (int l = 0; l <= cutoff; ++l) {
      Rational lv = t.lo() + Rational(l);
      if (!(t.layer(lv) == tc.layer(lv))) r.fail("tilting layer " + std::to_string(l) + " differs at " + w.str());
    }
    FlagTable tf = tilting_flag(s, w), pf = projective_flag(s, w);
    bool trivial = tf.entries.size() == 1 && pf.entries.size() == 1;
    if (bar_typical(s, w) != trivial) r.fail("bar-typicality disagrees with the flags at " + w.str());
    if (bar_typical(s, w)) {
      auto delta = ch_standard(s, w, cutoff);
      if (!(t == delta) || !(p == delta)) r.fail("bar-typical collapse fails at " + w.str());
    } else if (tf.as_map() == pf.as_map() || tf.get(w) != 1 || pf.get(w) != 1) {
      r.fail("bar-atypical flags not distinct at " + w.str());
    }
  }
  if (r.pass) r.detail = std::to_string(n) + " branch representatives, cutoff " + std::to_string(cutoff);
  return r;
}

inline Result bar_typical_grid(const AlgebraSpec& s) {
  Result r{"bar-typical collapse grid " + s.name()};
  std::size_t n = 0, atyp = 0;
  auto grid = atypical_sweep(s);
  for (auto& w : dominant_grid(s, 1, s.has_delta() ? 2 : 0, Rational(0), Rational(0))) grid.push_back(w);
  for (auto& w : grid) {
    ++n;
    FlagTable tf = tilting_flag(s, w), pf = projective_flag(s, w);
    bool trivial = tf.entries.size() == 1 && pf.entries.size() == 1;
    if (bar_typical(s, w) != trivial) r.fail("bar-typicality disagrees with the flags at " + w.str());
    if (!bar_typical(s, w)) {
      ++atyp;
      if (tf.as_map() == pf.as_map()) r.fail("P and T agree at bar-atypical " + w.str());
    }
  }
  if (r.pass) r.detail = std::to_string(n) + " weights, " + std::to_string(atyp) + " bar-atypical";
  return r;
}

// ---- structural suites

inline Result structure(const AlgebraSpec& s, std::size_t triples, std::uint64_t seed) {
  Result r{"bracket structure " + s.name()};
  Algebra alg = build_algebra(s);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alg.dim() - 1);
  SpanSolver span;
  for (auto& b : alg.basis) span.insert(b.x);
  SuperElement dop = degree_operator(s.n);
  for (auto& b : alg.basis) {
    SuperElement e = bracket(dop, b.x);
    SuperElement want = Rational(b.degree) * b.x;
    if (!(e - want).is_zero()) r.fail("degree operator eigenvalue fails on " + b.label);
  }
  for (std::size_t t = 0; t < triples; ++t) {
    const auto& x = alg.basis[pick(rng)];
    const auto& y = alg.basis[pick(rng)];
    const auto& z = alg.basis[pick(rng)];
    SuperElement xy = bracket(x.x, y.x);
    if (!span.contains(xy)) r.fail("bracket leaves the algebra: [" + x.label + ", " + y.label + "]");
    if (!xy.is_zero()) {
      if (xy.degree() != std::optional<int>(x.degree + y.degree)) r.fail("degree not additive");
      if (xy.parity() != std::optional<int>((x.parity + y.parity) % 2)) r.fail("parity not additive");
    }
    // super-Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
    Rational sg = (x.parity * y.parity) % 2 ? Rational(-1) : Rational(1);
    SuperElement lhs = bracket(x.x, bracket(y.x, z.x));
    SuperElement rhs = bracket(xy, z.x) + sg * bracket(y.x, bracket(x.x, z.x));
    if (!(lhs - rhs).is_zero()) r.fail("super-Jacobi fails on " + x.label + ", " + y.label + ", " + z.label);
  }
  if (r.pass) r.detail = std::to_string(triples) + " triples, seed " + std::to_string(seed);
  return r;
}

inline Result roots_vs_basis(const AlgebraSpec& s) {
  Result r{"roots vs basis weights " + s.name()};
  std::set<Weight> bw, odd, even;
  for (auto& b : build_algebra(s).basis) {
    if (b.weight.is_zero()) continue;
    bw.insert(b.weight);
    if (b.degree >= 1) (b.degree % 2 ? odd : even).insert(b.weight);
  }
  auto rd = root_system(s);
  if (bw != rd.all_roots) r.fail("root list differs from the nonzero basis weights");
  if (odd != rd.odd_ge1 || even != rd.even_ge1) r.fail("parity split of positive-degree roots differs");
  if (r.pass) r.detail = std::to_string(bw.size()) + " roots";
  return r;
}

inline Result freudenthal_vs_matrix(const AlgebraSpec& s, const std::vector<std::vector<int>>& lambdas) {
  Result r{"Freudenthal vs matrix model " + s.name()};
  for (auto& lam : lambdas) {
    std::vector<Rational> e(lam.begin(), lam.end());
    Weight w = Weight::from(s, e, 0);
    auto ch = irreducible_character(s, w);
    auto mm = oracle::matrix_model_multiplicities(g0_type(s), lam);
    std::int64_t total = 0;
    for (auto& [k, v] : mm) {
      total += v;
      std::vector<Rational> ke(k.begin(), k.end());
      if (ch.get(Weight::from(s, ke, 0)) != v) r.fail("multiplicity differs in L0" + w.str());
    }
    if (total != ch.mass()) r.fail("dimension differs for L0" + w.str());
    if (Rational(ch.mass()) != weyl_dimension(s, w)) r.fail("Weyl dimension differs for L0" + w.str());
  }
  if (r.pass) r.detail = std::to_string(lambdas.size()) + " highest weights";
  return r;
}

inline Result longest_element(const AlgebraSpec& s) {
  Result r{"longest Weyl element " + s.name()};
  std::size_t n = 0;
  for (auto sh : default_shifts(s))
    for (auto& w : dominant_grid(s, 2, s.has_delta() ? 1 : 0, sh, 0)) {
      ++n;
      Weight m = minus_w0(s, w);
      if (!(minus_w0(s, m) == w)) r.fail("not an involution at " + w.str());
      if (!(m == oracle::minus_w0_by_orbit(s, w))) r.fail("orbit enumeration disagrees at " + w.str());
      if (s.hamiltonian() && !(reciprocity_dual(s, reciprocity_dual(s, w)) == w)) r.fail("reciprocity duality not an involution");
    }
  if (r.pass) r.detail = std::to_string(n) + " weights";
  return r;
}

inline Result pbw_count(const AlgebraSpec& s, int cutoff) {
  Result r{"Pi vs PBW count " + s.name()};
  if (!(oracle::pbw_character(s, cutoff) == pi_factor(s, cutoff).character())) r.fail("Pi differs from the PBW count");
  else r.detail = "cutoff " + std::to_string(cutoff);
  return r;
}

inline std::vector<std::vector<int>> small_highest_weights(const AlgebraSpec& s) {
  const int m = s.eps_dim();
  std::vector<std::vector<int>> out;
  std::vector<int> v(m, 0);
  v[0] = 1;
  out.push_back(v);
  if (m >= 2) { v[0] = 2; v[1] = 1; out.push_back(v); }
  out.push_back(std::vector<int>(m, 1));
  if (g0_type(s) == LieType::A) {
    std::vector<int> w(m, 0);
    w[0] = 1;
    w[m - 1] = -2;
    out.push_back(w);
  }
  if (g0_type(s) == LieType::D && m >= 2) {
    std::vector<int> w(m, 1);
    w[m - 1] = -1;
    out.push_back(w);
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"semiinf", "costandard", "upsilon", "blocks",
                                              "reciprocity", "characters", "structural"};
  return names;
}

struct SuiteConfig {
  std::uint64_t seed = 1;
  int cutoff = 6;
  std::size_t block_pairs = 10000;
  std::size_t jacobi_triples = 300;
};

inline std::vector<Result> run_suite(const AlgebraSpec& s, const std::string& name, const SuiteConfig& cfg = {}) {
  std::vector<Result> out;
  auto guarded = [&](const std::string& label, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const UnsupportedShapeError& e) {
      Result r{label + " " + s.name()};
      r.skipped = true;
      r.detail = e.what();
      out.push_back(r);
    } catch (const std::exception& e) {
      Result r{label + " " + s.name()};
      r.fail(e.what());
      out.push_back(r);
    }
  };
  if (name == "semiinf") {
    guarded("semi-infinite", [&] { return semi_infinite(s); });
    guarded("semi-infinite mutation", [&] { return semi_infinite_mutation(s); });
  } else if (name == "costandard") {
    guarded("costandard", [&] { return costandard(s); });
  } else if (name == "upsilon") {
    guarded("injective hull flags", [&] { return upsilon_suite(s); });
  } else if (name == "blocks") {
    guarded("block equivalence", [&] { return block_equivalence(s, cfg.block_pairs, cfg.seed); });
    guarded("root lattice congruences", [&] { return lattice(s); });
    guarded("linkage oracle soundness", [&] {
      Weight shifted(s);
      for (int i = 0; i < s.eps_dim(); ++i) shifted[i] = s.witt_like() ? Rational(1, 3) : Rational(i == 0 ? 1 : 0);
      if (s.has_delta()) shifted.set_delta(Rational(1, 2));
      return block_oracle(s, {Weight(s), shifted});
    });
    guarded("linkage oracle completeness", [&] { return block_completeness(s); });
    if (s.hamiltonian() && !s.odd()) guarded("delta exclusion", [&] { return delta_exclusion(s); });
  } else if (name == "reciprocity") {
    guarded("reciprocity vs closed tables", [&] { return reciprocity(s); });
    guarded("Kac factor offsets", [&] { return kac_box(s); });
    guarded("bar-typical collapse grid", [&] { return bar_typical_grid(s); });
  } else if (name == "characters") {
    guarded("character formulas", [&] { return character_formulas(s, cfg.cutoff); });
    guarded("Pi vs PBW count", [&] { return pbw_count(s, std::min(cfg.cutoff, 4)); });
  } else if (name == "structural") {
    guarded("bracket structure", [&] { return structure(s, cfg.jacobi_triples, cfg.seed); });
    guarded("roots vs basis weights", [&] { return roots_vs_basis(s); });
    guarded("longest Weyl element", [&] { return longest_element(s); });
    guarded("Freudenthal vs matrix model", [&] { return freudenthal_vs_matrix(s, small_highest_weights(s)); });
  } else {
    throw ParseError("unknown check '" + name + "'");
  }
  return out;
}

}  // namespace cartan::checks
