#include <random>

#include <gtest/gtest.h>

#include "epilab/fraction.hpp"

using namespace epilab;

namespace {

Elem z(std::int64_t v) { return Elem{v}; }

Frac random_frac(const RingPtr& r, std::mt19937_64& rng) {
  const auto& e = r->elements();
  for (;;) {
    Poly n(r, {"x"}), d(r, {"x"});
    for (std::uint32_t k = 0; k <= 2; ++k) {
      n = n + Poly::monomial(r, {"x"}, {k}, e[rng() % e.size()]);
      d = d + Poly::monomial(r, {"x"}, {k}, e[rng() % e.size()]);
    }
    if (is_regular_poly(d)) return Frac(n, d);
  }
}

}  // namespace

TEST(Embed, Examples) {
  const auto r6 = zmod(6);
  EXPECT_TRUE(embed(Poly(r6, {"x"})).is_zero());
  const Frac f = embed(parse_poly("2*x + 4", r6));
  EXPECT_TRUE((embed(parse_poly("3", r6)) * f).is_zero());
  EXPECT_FALSE(f.is_zero());
  const Poly a = parse_poly("x^2 + 5", r6), b = parse_poly("3*x", r6);
  EXPECT_EQ(embed(a + b), embed(a) + embed(b));
  EXPECT_EQ(embed(a * b), embed(a) * embed(b));
}

TEST(Invert, Examples) {
  const auto r6 = zmod(6);
  const Frac one = embed(parse_poly("1", r6, {"x"}));
  const Frac x = embed(parse_poly("x", r6));
  EXPECT_EQ(x * invert(x), one);
  const Frac g = embed(parse_poly("3 + 2*x^2", r6));
  EXPECT_EQ(invert(g) * g, one);
  try {
    invert(embed(parse_poly("2*x", r6)));
    FAIL();
  } catch (const NotInvertible& e) {
    EXPECT_EQ(e.witness(), z(3));
  }
  EXPECT_THROW(Frac(x.num(), parse_poly("2*x", r6)), ZeroDivisorDenominator);
  EXPECT_EQ(parse_frac("x / (3 + 2*x^2)", r6) * g, x);
}

TEST(FractionLaws, RandomProperty) {
  std::mt19937_64 rng(23);
  for (const auto& r : {zmod(6), zmod(4), product({zmod(2), zmod(3)})}) {
    for (int it = 0; it < 60; ++it) {
      const Frac a = random_frac(r, rng), b = random_frac(r, rng), c = random_frac(r, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, embed(Poly(r, {"x"})));
      // equals is transitive through a rescaled representative
      const Frac a2(a.num() * b.den(), a.den() * b.den());
      const Frac a3(a2.num() * c.den(), a2.den() * c.den());
      EXPECT_TRUE(a == a2 && a2 == a3 && a == a3);
    }
  }
}

TEST(ConstructDenominator, Examples) {
  const auto r6 = zmod(6);
  const auto d = construct_denominator({parse_poly("3", r6), parse_poly("2*x", r6)});
  EXPECT_EQ(d.element, parse_poly("3 + 2*x^2", r6));
  EXPECT_EQ(d.inverse() * d.as_fraction(), embed(parse_poly("1", r6, {"x"})));
  EXPECT_EQ(construct_denominator({parse_poly("1", r6, {"x"})}).element, parse_poly("1", r6, {"x"}));
  try {
    construct_denominator({parse_poly("2*x", r6), parse_poly("4", r6)});
    FAIL();
  } catch (const NotFaithful& e) {
    EXPECT_EQ(e.witness(), z(3));
  }
}
