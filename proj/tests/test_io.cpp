#include <gtest/gtest.h>

#include "cartan/flags.hpp"
#include "cartan/io.hpp"

using namespace cartan;

TEST(Parse, WeightGrammar) {
  AlgebraSpec h6{Family::H, 6};
  Weight w = parse_weight(h6, "1/2, -1/2 ,1/2;delta=7/3");
  EXPECT_EQ(w, Weight::from(h6, {Rational(1, 2), Rational(-1, 2), Rational(1, 2)}, Rational(7, 3)));
  AlgebraSpec w3{Family::W, 3};
  EXPECT_EQ(parse_weight(w3, "1,1,1"), xi(w3));
}

TEST(Parse, Errors) {
  AlgebraSpec w3{Family::W, 3}, h5{Family::H, 5};
  EXPECT_THROW(parse_weight(w3, "1,1"), ParseError);
  EXPECT_THROW(parse_weight(w3, "1,x,0"), ParseError);
  EXPECT_THROW(parse_weight(w3, "1,1,1;delta=2"), ParseError);
  EXPECT_THROW(parse_weight(h5, "1,0;d=2"), ParseError);
  EXPECT_THROW(parse_weight(w3, "1/0,0,0"), ParseError);
  EXPECT_THROW(parse_simple(w3, "1,0,0@q3"), ParseError);
}

TEST(Parse, SimpleSuffix) {
  AlgebraSpec h6{Family::H, 6};
  SimpleParam p = parse_simple(h6, "0,0,0;delta=1@d-2,p3");
  EXPECT_EQ(p.weight, Weight::delta_unit(h6));
  EXPECT_EQ(p.depth, -2);
  EXPECT_EQ(p.parity, 1);
  SimpleParam q = parse_simple(h6, "0,0,0");
  EXPECT_EQ(q.depth, 0);
  EXPECT_EQ(q.parity, 0);
}

TEST(Json, WeightRoundTrip) {
  for (AlgebraSpec s : {AlgebraSpec{Family::W, 4}, AlgebraSpec{Family::H, 7}}) {
    Weight w(s);
    for (int i = 0; i < w.size(); ++i) w[i] = Rational(2 * i - 3, i + 2);
    EXPECT_EQ(weight_from_json(s, json::parse(to_json(w).dump())), w);
    EXPECT_EQ(parse_weight(s, format_weight(w)), w);
  }
}

TEST(Json, FlagEmissionIsSorted) {
  AlgebraSpec w3{Family::W, 3};
  json j = to_json(tilting_flag(w3, xi(w3)));
  ASSERT_EQ(j.size(), 2u);
  for (auto& e : j) {
    Weight w = weight_from_json(w3, e["weight"]);
    EXPECT_EQ(e["mult"].get<int>(), 1);
    EXPECT_TRUE(w == xi(w3) || w == Rational(2) * xi(w3));
  }
  EXPECT_TRUE(weight_from_json(w3, j[0]["weight"]) < weight_from_json(w3, j[1]["weight"]));
}

TEST(Json, Roots) {
  json j = roots_json({Family::W, 3});
  EXPECT_EQ(j["dimension"].get<int>(), 24);
  EXPECT_EQ(j["basis"].size(), 24u);
  json c = roots_json({Family::CH, 5});
  bool found = false;
  for (auto& r : c["roots"]) found = found || r["weight"] == json::array({"0", "0", "3"});
  EXPECT_TRUE(found);
}
