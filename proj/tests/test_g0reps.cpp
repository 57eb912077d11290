#include <gtest/gtest.h>

#include "cartan/g0reps.hpp"
#include "cartan/oracles.hpp"

using namespace cartan;

namespace {

Weight wt(const AlgebraSpec& s, std::vector<Rational> eps, Rational d = 0) { return Weight::from(s, eps, d); }

void expect_matches_matrix_model(const AlgebraSpec& s, const std::vector<int>& lam) {
  std::vector<Rational> eps(lam.begin(), lam.end());
  FormalCharacter ch = irreducible_character(s, Weight::from(s, eps, 0));
  auto mm = oracle::matrix_model_multiplicities(g0_type(s), lam);
  FormalCharacter ref;
  for (auto& [k, v] : mm) ref.add(Weight::from(s, std::vector<Rational>(k.begin(), k.end()), 0), v);
  EXPECT_EQ(ch, ref) << s.name();
}

}  // namespace

TEST(Irreducible, NaturalRepresentation) {
  AlgebraSpec w3{Family::W, 3};
  FormalCharacter ch = irreducible_character(w3, wt(w3, {1, 0, 0}));
  FormalCharacter want;
  for (int i = 0; i < 3; ++i) want.add(Weight::eps_unit(w3, i), 1);
  EXPECT_EQ(ch, want);
}

TEST(Irreducible, ExteriorSquare) {
  AlgebraSpec w3{Family::W, 3};
  EXPECT_EQ(irreducible_character(w3, wt(w3, {1, 1, 0})).mass(), 3);
}

TEST(Irreducible, DeltaIsCentral) {
  AlgebraSpec h5{Family::H, 5};
  FormalCharacter a = irreducible_character(h5, wt(h5, {1, 0}, 0));
  FormalCharacter b = irreducible_character(h5, wt(h5, {1, 0}, Rational(5, 2)));
  EXPECT_EQ(a.shifted(Rational(5, 2) * Weight::delta_unit(h5)), b);
  EXPECT_EQ(a.mass(), 5);
}

TEST(Irreducible, WeylDimensions) {
  AlgebraSpec h7{Family::H, 7}, h6{Family::H, 6}, w4{Family::W, 4};
  EXPECT_EQ(weyl_dimension(h7, wt(h7, {1, 0, 0})), Rational(7));
  EXPECT_EQ(weyl_dimension(h7, wt(h7, {Rational(1, 2), Rational(1, 2), Rational(1, 2)})), Rational(8));
  EXPECT_EQ(weyl_dimension(h7, wt(h7, {1, 1, 0})), Rational(21));
  EXPECT_EQ(weyl_dimension(h6, wt(h6, {Rational(1, 2), Rational(1, 2), Rational(-1, 2)})), Rational(4));
  EXPECT_EQ(weyl_dimension(h6, wt(h6, {1, 1, 0})), Rational(15));
  EXPECT_EQ(weyl_dimension(w4, wt(w4, {2, 0, 0, 0})), Rational(10));
  EXPECT_EQ(weyl_dimension(w4, wt(w4, {Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(1, 3)})), Rational(1));
}

TEST(Irreducible, FreudenthalAgreesWithMatrixModel) {
  expect_matches_matrix_model({Family::W, 3}, {2, 1, 0});
  expect_matches_matrix_model({Family::W, 3}, {1, 0, -2});
  expect_matches_matrix_model({Family::W, 4}, {2, 1, 1, 0});
  expect_matches_matrix_model({Family::H, 5}, {2, 1});
  expect_matches_matrix_model({Family::H, 5}, {3, 0});
  expect_matches_matrix_model({Family::H, 6}, {1, 1, -1});
  expect_matches_matrix_model({Family::H, 6}, {2, 1, 0});
  expect_matches_matrix_model({Family::H, 7}, {1, 1, 1});
}

TEST(Irreducible, MassEqualsWeylDimension) {
  for (AlgebraSpec s : {AlgebraSpec{Family::W, 4}, AlgebraSpec{Family::S, 3}, AlgebraSpec{Family::H, 6}, AlgebraSpec{Family::H, 7}}) {
    Weight lam(s);
    lam[0] = 3;
    lam[1] = 1;
    ASSERT_TRUE(is_dominant(s, lam));
    EXPECT_EQ(Rational(irreducible_character(s, lam).mass()), weyl_dimension(s, lam)) << s.name();
  }
}

TEST(Irreducible, RejectsNonDominant) {
  AlgebraSpec w3{Family::W, 3};
  EXPECT_THROW(irreducible_character(w3, wt(w3, {0, 1, 0})), DominanceError);
}

TEST(Irreducible, DimensionCap) {
  AlgebraSpec w4{Family::W, 4};
  EXPECT_THROW(irreducible_character(w4, wt(w4, {40, 20, 10, 0}), G0Limits{1000}), ResourceError);
}

TEST(Exterior, WeightSupportW3) {
  AlgebraSpec w3{Family::W, 3};
  FormalCharacter ch = wedge_g_minus1_character(w3);
  EXPECT_EQ(ch.mass(), 8);
  EXPECT_EQ(ch.get(Weight(w3)), 1);
  EXPECT_EQ(ch.get(-xi(w3)), 1);
  EXPECT_EQ(ch.get(wt(w3, {-1, -1, 0})), 1);
}

TEST(Exterior, DecomposesIntoFundamentals) {
  AlgebraSpec w3{Family::W, 3};
  auto m = decompose(w3, wedge_g_minus1_character(w3));
  std::map<Weight, std::int64_t> want{
      {Weight(w3), 1}, {wt(w3, {0, 0, -1}), 1}, {wt(w3, {0, -1, -1}), 1}, {wt(w3, {-1, -1, -1}), 1}};
  EXPECT_EQ(m, want);
}

TEST(Exterior, HamiltonianMass) {
  for (int n : {5, 6, 7}) {
    AlgebraSpec s{Family::H, n};
    FormalCharacter ch = wedge_g_minus1_character(s);
    EXPECT_EQ(ch.mass(), std::int64_t(1) << n);
    for (auto& [w, c] : ch.terms()) EXPECT_LE(w.delta(), Rational(0));
  }
}

TEST(Decompose, RejectsVirtualCharacter) {
  AlgebraSpec w3{Family::W, 3};
  FormalCharacter bad = FormalCharacter::monomial(wt(w3, {1, 0, 0}));
  EXPECT_THROW(decompose(w3, bad), NotACharacterError);
}

TEST(Upsilon, TopAndSumRule) {
  for (AlgebraSpec s : {AlgebraSpec{Family::W, 3}, AlgebraSpec{Family::S, 4}, AlgebraSpec{Family::H, 5}, AlgebraSpec{Family::H, 6}}) {
    Weight lam(s);
    lam[0] = 2;
    if (s.has_delta()) lam.set_delta(Rational(1, 3));
    FlagTable t = upsilon(s, lam);
    EXPECT_EQ(t.get(lam), 1);
    FormalCharacter lhs;
    for (auto& e : t.entries) lhs.axpy(e.mult, irreducible_character(s, e.weight));
    EXPECT_EQ(lhs, wedge_g_minus1_character(s) * irreducible_character(s, lam)) << s.name();
  }
}

TEST(Upsilon, ZeroWeightTotals) {
  std::vector<std::pair<AlgebraSpec, std::int64_t>> cases{
      {{Family::W, 3}, 4}, {{Family::W, 4}, 5}, {{Family::H, 5}, 6}, {{Family::H, 6}, 8}};
  for (auto& [s, total] : cases) EXPECT_EQ(upsilon(s, Weight(s)).total(), total) << s.name();
}

TEST(Upsilon, HamiltonianShifts) {
  AlgebraSpec h6{Family::H, 6};
  Weight lam = Weight::from(h6, {1, 0, 0}, 0);
  FlagTable t = upsilon(h6, lam);
  Weight d = Weight::delta_unit(h6);
  EXPECT_GE(t.get(lam - Rational(6) * d), 1);
  Weight acc = lam;
  for (int k = 1; k <= 3; ++k) {
    acc = acc + Weight::eps_unit(h6, k - 1);
    EXPECT_GE(t.get(acc - Rational(6 - k) * d), 1) << k;
  }
}
