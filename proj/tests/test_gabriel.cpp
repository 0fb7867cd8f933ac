#include <gtest/gtest.h>

#include "epilab/gabriel.hpp"

using namespace epilab;

namespace {

Elem z(std::int64_t v) { return Elem{v}; }

}  // namespace

TEST(FilterOf, Examples) {
  const auto r6 = zmod(6);
  const auto id = filter_of(RingMap::identity(r6));
  EXPECT_EQ(id.members, (std::vector<Ideal>{Ideal::unit(r6)}));

  const auto to3 = quotient(r6, {z(3)}).projection;  // order-3 factor
  const auto f3 = filter_of(to3);
  EXPECT_EQ(f3.members.size(), 2u);
  EXPECT_TRUE(f3.contains(ideal_from(r6, {z(2)})));
  EXPECT_TRUE(f3.contains(Ideal::unit(r6)));

  const auto r4 = zmod(4);
  EXPECT_EQ(filter_of(RingMap::make(r4, zmod(2), {z(1)})).members, (std::vector<Ideal>{Ideal::unit(r4)}));
}

TEST(VerifyAxioms, Examples) {
  const auto r6 = zmod(6);
  EXPECT_TRUE(verify_axioms(filter_of(quotient(r6, {z(2)}).projection)).ok());
  const auto r4 = zmod(4);
  EXPECT_TRUE(verify_axioms(make_filter(r4, {Ideal::unit(r4)})).ok());
  EXPECT_TRUE(verify_axioms(make_filter(r4, all_ideals(r4))).ok());
  const auto bad = verify_axioms(make_filter(r4, {Ideal::unit(r4), ideal_from(r4, {z(2)})}));
  EXPECT_FALSE(bad.t3);
  EXPECT_FALSE(bad.ok());
  const auto no_unit = verify_axioms(make_filter(r4, {}));
  EXPECT_FALSE(no_unit.t1);
}

TEST(VerifyAxioms, DualNumbers) {
  // (t)(t) = 0 is missing from {(t), (1)}
  const auto d = poly_quotient(zmod(2), {z(0), z(0), z(1)});
  const Ideal t = ideal_from(d, {d->from_natural({0, 1})});
  EXPECT_FALSE(verify_axioms(make_filter(d, {Ideal::unit(d), t})).t3);
  EXPECT_TRUE(verify_axioms(make_filter(d, all_ideals(d))).ok());
}

TEST(Classify, Examples) {
  const auto r6 = zmod(6);
  const auto to3 = quotient(r6, {z(3)}).projection;
  const auto to2 = quotient(r6, {z(2)}).projection;
  EXPECT_EQ(classify_flat_epis(to3, to3).verdict, FlatEpiClass::SameClass);
  EXPECT_EQ(classify_flat_epis(to2, to3).verdict, FlatEpiClass::Different);

  // the same factor reached through a differently presented copy of Z/3
  const auto f3 = poly_quotient(zmod(3), {z(2), z(1)});  // Z/3[t]/(t - 1)
  const auto iso = RingMap::make(to3.target(), f3, {f3->one()});
  const auto psi = to3.then(iso);
  const auto c = classify_flat_epis(to3, psi);
  ASSERT_EQ(c.verdict, FlatEpiClass::SameClass);
  EXPECT_TRUE(to3.then(*c.theta).same_as(psi));
}

TEST(Classify, RejectsNonFlat) {
  const auto r4 = zmod(4);
  const auto red = RingMap::make(r4, zmod(2), {z(1)});
  EXPECT_THROW(classify_flat_epis(red, red), AlgebraError);
}

TEST(IsoSearch, NoIsoForDifferentFactors) {
  const auto r = product({zmod(2), zmod(2)});
  const auto e1 = quotient(r, {r->from_natural({1, 0})}).projection;
  const auto e2 = quotient(r, {r->from_natural({0, 1})}).projection;
  const auto s = find_compatible_iso(e1, e2);
  EXPECT_TRUE(s.exhausted);
  EXPECT_FALSE(s.theta.has_value());
  EXPECT_EQ(classify_flat_epis(e1, e2).verdict, FlatEpiClass::Different);
}
