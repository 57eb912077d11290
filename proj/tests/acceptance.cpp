// One PASS/FAIL line per acceptance criterion, with the individual checks indented below.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cartan/checks.hpp"

using namespace cartan;
using checks::Result;

namespace {

AlgebraSpec W(int n) { return {Family::W, n}; }
AlgebraSpec S(int n) { return {Family::S, n}; }
AlgebraSpec H(int n) { return {Family::H, n}; }
AlgebraSpec CH(int n) { return {Family::CH, n}; }

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<Result>()> run;
};

std::vector<Result> over(const std::vector<AlgebraSpec>& specs, const std::function<Result(const AlgebraSpec&)>& f) {
  std::vector<Result> out;
  for (auto& s : specs) {
    try {
      out.push_back(f(s));
    } catch (const std::exception& e) {
      Result r{s.name()};
      r.fail(e.what());
      out.push_back(r);
    }
  }
  return out;
}

std::vector<Result> concat(std::vector<std::vector<Result>> parts) {
  std::vector<Result> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

int main() {
  const std::vector<AlgebraSpec> desk{W(3), W(4), S(3), S(4), H(5), H(6)};
  const std::uint64_t seed = 20240601;

  std::vector<Criterion> criteria{
      {1, "semi-infinite character",
       [] {
         return concat({over({W(3), W(4), S(3), S(4), H(5), H(6), H(7), CH(5), CH(6)}, checks::semi_infinite),
                        over({W(3), W(4)}, checks::semi_infinite_mutation)});
       }},
      {2, "Kac realisation of costandard modules", [&] { return over(desk, [](auto& s) { return checks::costandard(s, 24); }); }},
      {3, "Delta-flag of injective hulls", [&] { return over(desk, [](auto& s) { return checks::upsilon_suite(s, 20); }); }},
      {4, "block theorems",
       [&] {
         return concat({
             over(desk, [&](auto& s) { return checks::block_equivalence(s, 10000, seed); }),
             over({W(3), S(3), H(5), H(6)},
                  [](auto& s) {
                    Weight shifted(s);
                    for (int i = 0; i < s.eps_dim(); ++i) shifted[i] = s.witt_like() ? Rational(1, 3) : Rational(i == 0 ? 1 : 0);
                    if (s.has_delta()) shifted.set_delta(Rational(1, 2));
                    return checks::block_oracle(s, {Weight(s), shifted});
                  }),
             over({W(3), S(3), H(5), H(6)}, [](auto& s) { return checks::block_completeness(s); }),
             over({H(6)}, checks::delta_exclusion),
             over({W(3), W(4), S(3), S(4), H(5), H(6), H(7)}, checks::lattice),
         });
       }},
      {5, "reciprocity against closed tables",
       [] {
         std::vector<AlgebraSpec> specs{W(3), W(4), S(3), S(4), H(5), H(6), H(7)};
         return concat({over(specs, checks::reciprocity), over(specs, checks::kac_box)});
       }},
      {6, "character formulas",
       [] {
         std::vector<AlgebraSpec> specs{W(3), W(4), S(3), S(4), H(5), H(6)};
         return concat({over(specs, [](auto& s) { return checks::character_formulas(s, 6); }),
                        over(specs, checks::bar_typical_grid)});
       }},
      {7, "structural suites",
       [&] {
         std::vector<AlgebraSpec> all{W(3), W(4), S(3), S(4), H(5), H(6), H(7), CH(5), CH(6)};
         return concat({over(all, [&](auto& s) { return checks::structure(s, 400, seed); }),
                        over(all, checks::roots_vs_basis),
                        over(all, checks::longest_element),
                        over({W(3), S(3), H(5), H(6), H(7)},
                             [](auto& s) { return checks::freudenthal_vs_matrix(s, checks::small_highest_weights(s)); }),
                        over({W(3), S(3), H(5)}, [](auto& s) { return checks::pbw_count(s, 6); })});
       }},
  };

  int failed = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    auto results = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = true;
    for (auto& r : results) ok = ok && r.pass;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << results.size()
              << " checks, " << secs << " s)" << std::endl;
    for (auto& r : results) std::cout << "    " << (r.pass ? "ok   " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
