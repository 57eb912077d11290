#include <gtest/gtest.h>

#include "cartan/charring.hpp"
#include "cartan/oracles.hpp"

using namespace cartan;

namespace {

Weight wt(const AlgebraSpec& s, std::vector<Rational> eps, Rational d = 0) { return Weight::from(s, eps, d); }

FormalCharacter g1_weights(const AlgebraSpec& s) {
  FormalCharacter f;
  for (auto& b : build_algebra(s).basis)
    if (b.degree == 1) f.add(b.weight, 1);
  return f;
}

}  // namespace

TEST(Series, ProductWindow) {
  AlgebraSpec w3{Family::W, 3};
  Weight e1 = Weight::eps_unit(w3, 0);
  FormalCharacter f = FormalCharacter::monomial(Weight(w3)) + FormalCharacter::monomial(e1);
  TruncatedSeries a(f, 0, Rational(3), w3);
  TruncatedSeries b = TruncatedSeries::exact(w3, FormalCharacter::monomial(Rational(-2) * e1));
  TruncatedSeries p = a * b;
  EXPECT_EQ(p.lo(), Rational(-2));
  EXPECT_EQ(*p.hi(), Rational(1));
  EXPECT_EQ(p.get(-e1), 1);
  EXPECT_EQ((a + b).hi(), std::optional<Rational>(Rational(3)));
}

TEST(Series, TruncationDropsHighLayers) {
  AlgebraSpec w3{Family::W, 3};
  Weight e1 = Weight::eps_unit(w3, 0);
  FormalCharacter f = FormalCharacter::monomial(e1) + FormalCharacter::monomial(Rational(5) * e1);
  TruncatedSeries t(f, 0, Rational(2), w3);
  EXPECT_EQ(t.character().size(), 1u);
}

TEST(Pi, FirstLayerIsG1) {
  for (AlgebraSpec s : {AlgebraSpec{Family::W, 3}, AlgebraSpec{Family::S, 4}, AlgebraSpec{Family::H, 6}}) {
    TruncatedSeries pi = pi_factor(s, 1);
    EXPECT_EQ(pi.layer(Rational(1)), g1_weights(s)) << s.name();
    EXPECT_EQ(pi.layer(Rational(0)), FormalCharacter::monomial(Weight(s)));
  }
}

TEST(Pi, MatchesPbwCount) {
  for (AlgebraSpec s : {AlgebraSpec{Family::W, 3}, AlgebraSpec{Family::S, 3}, AlgebraSpec{Family::H, 5}})
    EXPECT_EQ(pi_factor(s, 5).character(), oracle::pbw_character(s, 5)) << s.name();
}

TEST(Standard, FirstLayerOfTrivial) {
  AlgebraSpec w3{Family::W, 3};
  TruncatedSeries d = ch_standard(w3, Weight(w3), 1);
  EXPECT_EQ(d.layer(Rational(1)), g1_weights(w3));
}

TEST(Standard, WindowFollowsTop) {
  AlgebraSpec h5{Family::H, 5};
  TruncatedSeries d = ch_standard(h5, wt(h5, {1, 0}, Rational(-3)), 4);
  EXPECT_EQ(d.lo(), Rational(-3));
  EXPECT_EQ(*d.hi(), Rational(1));
  EXPECT_EQ(d.layer(Rational(-3)), irreducible_character(h5, wt(h5, {1, 0}, Rational(-3))));
}

TEST(Kac, TrivialW3) {
  AlgebraSpec w3{Family::W, 3};
  FormalCharacter want;
  for (auto& w : {Weight(w3), wt(w3, {0, 0, -1}), wt(w3, {0, -1, -1}), wt(w3, {-1, -1, -1})})
    want = want + irreducible_character(w3, w);
  EXPECT_EQ(ch_kac(w3, Weight(w3)), want);
}

TEST(Costandard, TrivialW3) {
  AlgebraSpec w3{Family::W, 3};
  FormalCharacter nab = ch_costandard(w3, Weight(w3));
  EXPECT_EQ(nab, ch_kac(w3, xi(w3)));
  EXPECT_EQ(nab.mass(), 8);
}

TEST(Costandard, RoutesAgreeWithMass) {
  for (AlgebraSpec s : {AlgebraSpec{Family::W, 4}, AlgebraSpec{Family::S, 3}, AlgebraSpec{Family::H, 5}, AlgebraSpec{Family::H, 6}}) {
    Weight lam(s);
    lam[0] = 2;
    lam[1] = 1;
    if (s.has_delta()) lam.set_delta(Rational(-7, 2));
    FormalCharacter a = ch_costandard_direct(s, lam), b = ch_costandard_kac(s, lam);
    EXPECT_EQ(a, b) << s.name();
    EXPECT_EQ(Rational(a.mass()), Rational(std::int64_t(1) << s.n) * weyl_dimension(s, lam)) << s.name();
  }
}

TEST(Costandard, ShiftedKacIsDifferent) {
  AlgebraSpec h5{Family::H, 5};
  EXPECT_FALSE(ch_costandard_direct(h5, Weight(h5)) == ch_kac(h5, Weight(h5)));
}
