#include <gtest/gtest.h>

#include "epilab/harness.hpp"

using namespace epilab;

TEST(Zoo, Contents) {
  const auto rings = zoo_rings(64);
  EXPECT_FALSE(rings.empty());
  for (const auto& r : rings) EXPECT_LE(r->order(), 64);
  for (const auto& k : zoo_fields()) {
    for (const auto& x : k->elements())
      if (!k->is_zero(x)) EXPECT_TRUE(k->is_unit(x));
  }
  // zmod(2..4), zmod(2)xzmod(2), and the quotients of order <= 4: 6 over Z/2, 3 over Z/3, 4 over Z/4
  EXPECT_EQ(zoo_rings(4).size(), 17u);
}

TEST(Generator, Deterministic) {
  InstanceGenerator a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 30; ++i) {
    const auto x = a.next(), y = b.next(), z = c.next();
    EXPECT_EQ(map_to_json(x.map).dump(), map_to_json(y.map).dump());
    EXPECT_EQ(x.family, y.family);
    differs = differs || map_to_json(x.map).dump() != map_to_json(z.map).dump();
  }
  EXPECT_TRUE(differs);
}

TEST(Generator, SurjectionExample) {
  const auto r12 = zmod(12);
  const auto q = quotient(r12, {Elem{4}});
  EXPECT_EQ(q.ring->order(), 4);
  EXPECT_TRUE(q.projection.is_surjective());
  InstanceGenerator gen(1);
  auto rng = gen.stream(0);
  for (int i = 0; i < 20; ++i) {
    const auto m = gen.map_from(r12, MapFamily::Surjection, rng);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(m->is_surjective());
    EXPECT_EQ(m->source(), r12);
  }
}

TEST(Generator, FactorProjectionsOfZ6) {
  const auto r6 = zmod(6);
  const auto maps = factor_projections(r6);
  ASSERT_EQ(maps.size(), 4u);
  std::vector<long> orders;
  for (const auto& m : maps) orders.push_back(m.target()->order().get_si());
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<long>{1, 2, 3, 6}));
  for (const auto& m : maps) {
    EXPECT_TRUE(is_epimorphism(m));
    EXPECT_TRUE(is_flat_map(m));
  }
}

TEST(Generator, FamiliesProduceValidMaps) {
  InstanceGenerator gen(5);
  auto rng = gen.stream(3);
  for (const auto& r : zoo_rings(16))
    for (MapFamily f : all_families())
      if (auto m = gen.map_from(r, f, rng)) {
        EXPECT_EQ(m->source(), r);
        EXPECT_LE(m->target()->order(), 64);
      }
}

TEST(TupleMap, Diagonal) {
  const auto f2 = zmod(2);
  const auto d = tuple_map({RingMap::identity(f2), RingMap::identity(f2)});
  EXPECT_EQ(d.target()->order(), 4);
  EXPECT_TRUE(d.is_injective());
  EXPECT_FALSE(is_epimorphism(d));
}

TEST(Oracle, AgreesWithExamples) {
  const auto r6 = zmod(6);
  EXPECT_TRUE(has_polynomial_annihilator(parse_poly("2*x + 4", r6), 4));
  EXPECT_FALSE(has_polynomial_annihilator(parse_poly("x", r6), 4));
  EXPECT_TRUE(has_polynomial_annihilator(Poly(r6, {"x"}), 4));
  // large search space goes through the image-order route
  const auto r16 = zmod(16);
  EXPECT_TRUE(has_polynomial_annihilator(parse_poly("2*x^3 + 6", r16), 4));
  EXPECT_FALSE(has_polynomial_annihilator(parse_poly("2*x^3 + 3", r16), 4));
}

TEST(Suites, UnknownName) { EXPECT_THROW(run_suite("no-such-suite", {}), UnknownSuite); }

TEST(Suites, ReportIsDeterministic) {
  const SuiteOptions opts{7, 40};
  const auto a = run_suite("th1-agreement", opts);
  const auto b = run_suite("th1-agreement", opts);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.instances, 40u);
  EXPECT_EQ(a.tallies, b.tallies);
  auto ja = a.to_json(), jb = b.to_json();
  ja.erase("wall_seconds");
  jb.erase("wall_seconds");
  EXPECT_EQ(ja, jb);
}

TEST(Suites, SmallRunsPass) {
  for (const auto& name : suite_names()) {
    if (name == "coro8-classify" || name == "lemma7-flatness" || name == "prop1-local-iso") continue;
    const auto rep = run_suite(name, SuiteOptions{3, 20});
    EXPECT_TRUE(rep.ok()) << rep.to_text();
  }
}
