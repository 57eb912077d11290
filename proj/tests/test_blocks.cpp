#include <random>

#include <gtest/gtest.h>

#include "cartan/blocks.hpp"

using namespace cartan;

namespace {

Weight wt(const AlgebraSpec& s, std::vector<Rational> eps, Rational d = 0) { return Weight::from(s, eps, d); }

const AlgebraSpec kW3{Family::W, 3}, kS3{Family::S, 3}, kH5{Family::H, 5}, kH6{Family::H, 6};

}  // namespace

TEST(Typicality, SerganovaSetW) {
  EXPECT_TRUE(serganova_atypical(kW3, wt(kW3, {5, 1, 1})));
  EXPECT_FALSE(serganova_atypical(kW3, wt(kW3, {2, 0, 0})));
  EXPECT_TRUE(serganova_atypical(kW3, wt(kW3, {0, 0, Rational(-7, 2)})));
}

TEST(Typicality, ShiftedByXi) {
  // (a-1) eps_1 + Xi lies in the Serganova set, so (a-1) eps_1 is atypical
  for (int a = 1; a <= 4; ++a) EXPECT_FALSE(is_typical(kW3, wt(kW3, {a - 1, 0, 0})));
  EXPECT_TRUE(is_typical(kW3, wt(kW3, {2, 1, 0})));
}

TEST(Typicality, SerganovaSetH) {
  EXPECT_TRUE(serganova_atypical(kH6, wt(kH6, {3, 0, 0}, Rational(1, 3))));
  EXPECT_TRUE(serganova_atypical(kH6, wt(kH6, {-1, -1, 2})));
  EXPECT_FALSE(serganova_atypical(kH6, wt(kH6, {1, 1, 0})));
}

TEST(Typicality, BarAtypical) {
  EXPECT_TRUE(bar_atypical(kW3, xi(kW3)));
  EXPECT_TRUE(bar_atypical(kW3, wt(kW3, {1, 1, -2})));
  EXPECT_TRUE(bar_atypical(kW3, wt(kW3, {3, 0, 0})));
  EXPECT_FALSE(bar_atypical(kW3, wt(kW3, {2, 1, 0})));
  EXPECT_TRUE(bar_atypical(kH5, wt(kH5, {2, 0}, Rational(1, 2))));
  EXPECT_FALSE(bar_atypical(kH5, wt(kH5, {1, 1})));
}

TEST(SameBlock, XiStep) {
  Weight lam = wt(kW3, {2, 1, 0});
  for (int d = -1; d <= 1; ++d)
    for (int p = 0; p < 2; ++p) {
      EXPECT_TRUE(same_block(kW3, {lam, d, p}, {lam - xi(kW3), d - 3, 1 - p}));
      EXPECT_FALSE(same_block(kW3, {lam, d, p}, {lam - xi(kW3), d - 3, p}));
      EXPECT_FALSE(same_block(kW3, {lam, d, p}, {lam - xi(kW3), d - 2, 1 - p}));
    }
}

TEST(SameBlock, NonIntegralDifference) {
  EXPECT_FALSE(same_block(kW3, {Weight(kW3), 0, 0}, {Rational(1, 2) * xi(kW3), 0, 0}));
}

TEST(SameBlock, NoDeltaNeighbour) {
  Weight z(kH6);
  EXPECT_FALSE(same_block(kH6, {z, 0, 0}, {Weight::delta_unit(kH6), 1, 1}));
  for (int d = -3; d <= 3; ++d)
    for (int p = 0; p < 2; ++p) EXPECT_FALSE(same_block(kH6, {z, 0, 0}, {Weight::delta_unit(kH6), d, p}));
  // odd rank has no such obstruction
  EXPECT_TRUE(same_block(kH5, {Weight(kH5), 0, 0}, {Weight::delta_unit(kH5), 1, 1}));
}

TEST(SameBlock, RejectsCH) {
  AlgebraSpec ch{Family::CH, 5};
  EXPECT_THROW(same_block(ch, {Weight(ch), 0, 0}, {Weight(ch), 0, 0}), UnsupportedShapeError);
  EXPECT_THROW(block_key(ch, {Weight(ch), 0, 0}), UnsupportedShapeError);
}

TEST(BlockKey, CosetOfXi) {
  Weight lam = Rational(7, 2) * xi(kW3) + Weight::eps_unit(kW3, 0);
  BlockKey k = block_key(kW3, {lam, 0, 0});
  EXPECT_EQ(k.c, Rational(1, 2));
  EXPECT_FALSE(k.d.has_value());
}

TEST(BlockKey, HamiltonianCosets) {
  BlockKey k5 = block_key(kH5, {wt(kH5, {Rational(3, 2), Rational(1, 2)}, Rational(7, 3)), 0, 0});
  EXPECT_EQ(*k5.d, Rational(1, 2));
  EXPECT_EQ(k5.c, Rational(1, 3));
  BlockKey k6 = block_key(kH6, {wt(kH6, {1, 0, 0}, 4), 0, 0});
  EXPECT_EQ(*k6.d, Rational(0));
  EXPECT_EQ(k6.c, Rational(1));
}

TEST(BlockKey, AgreesWithSameBlock) {
  for (const AlgebraSpec& s : {kW3, kS3, kH5, kH6}) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-2, 2), dd(-3, 3), pp(0, 1);
    std::vector<SimpleParam> pool;
    while (pool.size() < 150) {
      Weight w(s);
      for (int i = 0; i < w.size(); ++i) w[i] = Rational(c(rng)) + (i == w.size() - 1 ? Rational(1, 2) * Rational(pp(rng)) : 0);
      if (is_dominant(s, w)) pool.push_back({w, dd(rng), pp(rng)});
    }
    for (auto& a : pool)
      for (auto& b : pool) ASSERT_EQ(block_key(s, a) == block_key(s, b), same_block(s, a, b)) << s.name();
  }
}

TEST(FdBlockKey, DropsDepth) {
  Weight lam = wt(kW3, {1, 0, 0});
  EXPECT_TRUE(fd_block_key(kW3, {lam, 0, 0}) == fd_block_key(kW3, {lam - xi(kW3), 7, 1}));
  EXPECT_FALSE(block_key(kW3, {lam, 0, 0}) == block_key(kW3, {lam - xi(kW3), 7, 1}));
}

TEST(Linkage, ReachesXiShift) {
  Weight lam(kW3);
  auto comp = linkage_oracle(kW3, {lam, 0, 0});
  bool found = false;
  for (auto& m : comp.members)
    if (m.weight == lam - xi(kW3)) {
      found = true;
      EXPECT_EQ(m.depth, -3);
      EXPECT_EQ(m.parity, 1);
    }
  EXPECT_TRUE(found);
  EXPECT_NE(comp.dot().find("graph linkage"), std::string::npos);
}

TEST(Linkage, SoundAndNoDelta) {
  for (const AlgebraSpec& s : {kS3, kH5, kH6}) {
    SimpleParam seed{Weight(s), 0, 0};
    auto comp = linkage_oracle(s, seed, {2, 5});
    for (auto& m : comp.members) EXPECT_TRUE(same_block(s, seed, m)) << s.name() << " " << m.weight.str();
    if (s == kH6)
      for (auto& m : comp.members) EXPECT_NE(m.weight, Weight::delta_unit(s));
  }
}
