#include <random>

#include <gtest/gtest.h>

#include "epilab/ring.hpp"

using namespace epilab;

namespace {

Elem z(std::int64_t v) { return Elem{v}; }

// Brute-force isomorphism check between two small rings: some bijective
// ring map exists. Test-only oracle, independent of the gabriel search.
bool isomorphic_brute(const RingPtr& a, const RingPtr& b) {
  if (a->order() != b->order()) return false;
  const auto& targets = b->elements();
  std::vector<Elem> images(a->rank());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == a->rank()) {
      try {
        return RingMap::make(a, b, images).is_bijective();
      } catch (const MapError&) {
        return false;
      }
    }
    for (const auto& t : targets) {
      images[i] = t;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST(MakeRing, Examples) {
  EXPECT_EQ(zmod(6)->order(), 6);
  const auto r = poly_quotient(zmod(2), {z(0), z(0), z(1)});
  EXPECT_EQ(r->order(), 4);
  EXPECT_EQ(r->natural_moduli().size(), 2u);
  const auto t = r->from_natural({0, 1});
  EXPECT_TRUE(r->is_zero(r->mul(t, t)));
  const auto p = product({zmod(2), zmod(3)});
  EXPECT_EQ(p->order(), 6);
  EXPECT_TRUE(isomorphic_brute(p, zmod(6)));
  EXPECT_FALSE(isomorphic_brute(product({zmod(2), zmod(2)}), zmod(4)));
}

TEST(MakeRing, ZeroRingIsValid) {
  const auto zero = zmod(1);
  EXPECT_TRUE(zero->is_zero_ring());
  EXPECT_EQ(zero->order(), 1);
  const auto phi = RingMap::make(zmod(5), zero, {Elem{}});
  EXPECT_TRUE(phi.is_surjective());
}

TEST(MakeRing, NonRegularLeadingCoefficientRejected) {
  try {
    poly_quotient(zmod(4), {z(1), z(1), z(2)});
    FAIL() << "expected rejection";
  } catch (const AlgebraError& e) {
    EXPECT_NE(std::string(e.what()).find("not regular"), std::string::npos);
  }
}

TEST(MakeRing, UnitLeadingCoefficientIsNormalized) {
  // 3t^2 + 1 over Z/4 has a unit leading coefficient
  const auto r = poly_quotient(zmod(4), {z(1), z(0), z(3)});
  EXPECT_EQ(r->order(), 16);
}

TEST(MakeRing, JsonRoundTrip) {
  const json spec = json::parse(R"({"type":"quotient","base":{"type":"product","factors":[{"type":"zmod","n":4},
      {"type":"poly_quotient","base":{"type":"zmod","n":3},"var":"t","modulus":[[1],[0],[1]]}]},"ideal":[[2,0,0]]})");
  const auto r = ring_from_json(spec);
  EXPECT_EQ(r->order(), 18);
  EXPECT_EQ(*r->description(), spec);
  EXPECT_EQ(ring_from_json(*r->description())->additive(), r->additive());
}

TEST(MakeRing, AxiomsHoldOnAllBasisTriples) {
  std::vector<RingPtr> rings{zmod(12), product({zmod(4), zmod(6)}), poly_quotient(zmod(4), {z(2), z(1), z(1)}),
                             poly_quotient(product({zmod(2), zmod(3)}), {z(1), z(0), z(0), z(1)})};
  for (const auto& r : rings) {
    const auto& e = r->elements();
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
      const auto& a = e[rng() % e.size()];
      const auto& b = e[rng() % e.size()];
      const auto& c = e[rng() % e.size()];
      EXPECT_EQ(r->mul(r->mul(a, b), c), r->mul(a, r->mul(b, c)));
      EXPECT_EQ(r->mul(a, r->add(b, c)), r->add(r->mul(a, b), r->mul(a, c)));
      EXPECT_EQ(r->mul(a, b), r->mul(b, a));
    }
  }
}

TEST(MakeMap, Examples) {
  const auto z4 = zmod(4), z2 = zmod(2);
  EXPECT_TRUE(RingMap::identity(z4).is_bijective());
  const auto red = RingMap::make(z4, z2, {z(1)});
  EXPECT_TRUE(red.is_surjective());
  EXPECT_FALSE(red.is_injective());
  try {
    RingMap::make(z2, z4, {z(1)});
    FAIL();
  } catch (const MapError& e) {
    EXPECT_EQ(e.axiom(), "not additive");
  }
  try {
    RingMap::make(z4, z4, {z(2)});
    FAIL();
  } catch (const MapError& e) {
    EXPECT_EQ(e.axiom(), "not unital");
  }
  // t -> 1 on F2[t]/(t^2) is unital and additive but not multiplicative
  const auto d = poly_quotient(z2, {z(0), z(0), z(1)});
  std::vector<Elem> imgs;
  for (std::size_t i = 0; i < d->rank(); ++i) imgs.push_back(d->to_natural(d->basis(i)));
  try {
    map_from_json({{"source", *d->description()}, {"target", *z2->description()}, {"images", {{1}, {1}}}});
    FAIL();
  } catch (const MapError& e) {
    EXPECT_EQ(e.axiom(), "not multiplicative");
  }
}

TEST(MakeMap, HomomorphismOnAllElements) {
  const auto s = product({zmod(4), zmod(2)});
  const auto q = quotient(s, {s->from_natural({2, 1})});
  const auto& phi = q.projection;
  for (const auto& x : s->elements())
    for (const auto& y : s->elements()) {
      EXPECT_EQ(phi(s->add(x, y)), q.ring->add(phi(x), phi(y)));
      EXPECT_EQ(phi(s->mul(x, y)), q.ring->mul(phi(x), phi(y)));
    }
  const json round = map_to_json(phi);
  EXPECT_TRUE(map_from_json(round).same_as(phi));
}

TEST(Ideals, Examples) {
  const auto r = zmod(12);
  const Ideal i = ideal_from(r, {z(4)});
  EXPECT_EQ(i.elements(), (std::vector<Elem>{z(0), z(4), z(8)}));
  EXPECT_EQ(ideal_product(i, Ideal::unit(r)), i);
  EXPECT_EQ(ideal_product(ideal_from(r, {z(2)}), ideal_from(r, {z(3)})), ideal_from(r, {z(6)}));
  EXPECT_EQ(ideal_intersect(ideal_from(r, {z(2)}), ideal_from(r, {z(3)})), ideal_from(r, {z(6)}));
  EXPECT_EQ(ideal_sum(ideal_from(r, {z(4)}), ideal_from(r, {z(6)})), ideal_from(r, {z(2)}));
}

TEST(Ideals, Colon) {
  const auto r = zmod(12);
  EXPECT_EQ(colon_ideal(ideal_from(r, {z(4)}), ideal_from(r, {z(2)})), ideal_from(r, {z(2)}));
  const Ideal i = ideal_from(r, {z(3)});
  EXPECT_EQ(colon_ideal(i, Ideal::unit(r)), i);
  const Ideal j = ideal_from(r, {z(8)});
  EXPECT_EQ(colon_ideal(Ideal::zero(r), j), annihilator(r, j.elements()));
}

TEST(Ideals, AnnihilatorAndRegularity) {
  const auto r = zmod(6);
  EXPECT_EQ(annihilator(r, {z(2)}), ideal_from(r, {z(3)}));
  EXPECT_TRUE(annihilator(r, {z(1)}).is_zero());
  EXPECT_TRUE(is_regular(r, z(5)));
  EXPECT_FALSE(is_regular(r, z(2)));
  EXPECT_TRUE(is_faithful(ideal_from(r, {z(2), z(3)})));
  EXPECT_FALSE(is_faithful(ideal_from(r, {z(2)})));
}

TEST(Ideals, ProductDistributesOverSum) {
  for (const auto& r : {zmod(12), product({zmod(2), zmod(4)}), poly_quotient(zmod(2), {z(0), z(0), z(0), z(1)})}) {
    const auto ideals = all_ideals(r);
    for (const auto& i : ideals)
      for (const auto& j : ideals)
        for (const auto& k : ideals)
          EXPECT_EQ(ideal_product(i, ideal_sum(j, k)), ideal_sum(ideal_product(i, j), ideal_product(i, k)));
  }
}

TEST(Ideals, EnumerationMatchesDivisors) {
  EXPECT_EQ(all_ideals(zmod(12)).size(), 6u);
  EXPECT_EQ(all_ideals(zmod(1)).size(), 1u);
  // F2[t]/(t^3) is a chain ring with 4 ideals; F2 x F2 has 4 ideals
  EXPECT_EQ(all_ideals(poly_quotient(zmod(2), {z(0), z(0), z(0), z(1)})).size(), 4u);
  EXPECT_EQ(all_ideals(product({zmod(2), zmod(2)})).size(), 4u);
  EXPECT_THROW(all_ideals(zmod(300)), AlgebraError);
}

TEST(Ideals, FaithfulIdealsAreUnitInSmallRings) {
  for (const auto& r : {zmod(8), zmod(12), product({zmod(2), zmod(4)}), poly_quotient(zmod(2), {z(0), z(0), z(1)}),
                        poly_quotient(zmod(4), {z(2), z(0), z(1)})})
    for (const auto& i : all_ideals(r))
      if (is_faithful(i)) EXPECT_TRUE(i.is_unit()) << r->name();
}

TEST(ModuleColon, Examples) {
  const auto z4 = zmod(4);
  const auto m = quotient_module(ideal_from(z4, {z(2)}));  // Z/2 over Z/4
  auto cmp = module_colon(m, Ideal::zero(z4), ideal_from(z4, {z(2)}));
  EXPECT_TRUE(cmp.left.is_trivial());
  EXPECT_TRUE(cmp.right.is_whole());
  EXPECT_FALSE(cmp.equal());

  const auto z6 = zmod(6);
  const auto m2 = quotient_module(ideal_from(z6, {z(2)}));  // the order-2 factor
  EXPECT_EQ(m2.order(), 2);
  EXPECT_TRUE(module_colon(m2, ideal_from(z6, {z(3)}), ideal_from(z6, {z(2)})).equal());

  const auto r = product({zmod(2), zmod(4)});
  const auto self = ring_as_module(r);
  for (const auto& i : all_ideals(r))
    for (const auto& j : all_ideals(r)) {
      const auto c = module_colon(self, i, j);
      EXPECT_TRUE(c.equal());
      EXPECT_EQ(c.left, colon_ideal(i, j).group());
    }
}

TEST(Modules, RestrictionAndQuotient) {
  const auto s = poly_quotient(zmod(2), {z(0), z(0), z(1)});
  const auto phi = structure_map(zmod(2), s);
  const auto m = restrict_scalars(phi, ring_as_module(s));
  EXPECT_EQ(m.order(), 4);
  EXPECT_THROW(structure_map(zmod(3), s), MapError);
}
