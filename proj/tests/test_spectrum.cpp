#include <gtest/gtest.h>

#include "epilab/spectrum.hpp"

using namespace epilab;

namespace {

Elem z(std::int64_t v) { return Elem{v}; }

bool flat_by_colons(const FiniteModule& m) {
  const auto ideals = all_ideals(m.ring());
  for (const auto& i : ideals)
    for (const auto& j : ideals)
      if (!module_colon(m, i, j).equal()) return false;
  return true;
}

}  // namespace

TEST(Decompose, Examples) {
  const auto d = decompose(zmod(12));
  EXPECT_EQ(d.idempotents, (std::vector<Elem>{z(4), z(9)}));
  ASSERT_EQ(d.factors.size(), 2u);
  // 4 cuts out the Z/3 factor, 9 the Z/4 factor
  EXPECT_EQ(d.factors[0]->order(), 3);
  EXPECT_EQ(d.factors[1]->order(), 4);
  const auto f4 = poly_quotient(zmod(2), {z(1), z(1), z(1)});
  EXPECT_EQ(decompose(f4).size(), 1u);
  EXPECT_EQ(decompose(product({zmod(2), zmod(2)})).size(), 2u);
  EXPECT_EQ(decompose(zmod(1)).size(), 0u);
  EXPECT_THROW(decompose(zmod(5000)), AlgebraError);
}

TEST(Decompose, LiftIsSection) {
  const auto r = product({zmod(4), poly_quotient(zmod(3), {z(1), z(0), z(1)}), zmod(5)});
  const auto d = decompose(r);
  ASSERT_EQ(d.size(), 3u);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& x : d.factors[i]->elements()) EXPECT_EQ(d.projections[i](d.lift(i, x)), x);
}

TEST(Primes, Examples) {
  const auto r = zmod(12);
  const auto ps = primes(r);
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0].ideal, ideal_from(r, {z(3)}));
  EXPECT_EQ(ps[1].ideal, ideal_from(r, {z(2)}));
  EXPECT_EQ(ps[0].residue_field->order(), 3);
  EXPECT_EQ(ps[1].residue_field->order(), 2);
  const auto f4 = poly_quotient(zmod(2), {z(1), z(1), z(1)});
  const auto pf = primes(f4);
  ASSERT_EQ(pf.size(), 1u);
  EXPECT_TRUE(pf[0].ideal.is_zero());
  EXPECT_EQ(spec_map(RingMap::make(zmod(4), zmod(2), {z(1)})), (std::vector<std::size_t>{0}));
}

TEST(SpectralCriterion, Examples) {
  const auto epi = RingMap::make(zmod(4), zmod(2), {z(1)});
  EXPECT_TRUE(check_prop2(epi).all);
  const auto diag = RingMap::make(zmod(2), product({zmod(2), zmod(2)}), {Elem{1, 1}});
  EXPECT_FALSE(check_prop2(diag).a);
  const auto dual = structure_map(zmod(2), poly_quotient(zmod(2), {z(0), z(0), z(1)}));
  const auto rep = check_prop2(dual);
  EXPECT_TRUE(rep.a);
  EXPECT_FALSE(rep.d);
  EXPECT_FALSE(rep.all);
  const auto f4 = structure_map(zmod(2), poly_quotient(zmod(2), {z(1), z(1), z(1)}));
  EXPECT_FALSE(check_prop2(f4).b);
}

TEST(GeoV, Examples) {
  EXPECT_TRUE(check_geo_v(RingMap::make(zmod(4), zmod(2), {z(1)})));
  EXPECT_FALSE(check_geo_v(structure_map(zmod(2), poly_quotient(zmod(2), {z(0), z(1), z(1)}))));
  EXPECT_TRUE(check_geo_v(RingMap::identity(zmod(4))));
}

TEST(Flatness, Examples) {
  const auto r6 = zmod(6);
  EXPECT_TRUE(is_flat_module(ring_as_module(r6)));
  EXPECT_TRUE(is_flat_module(quotient_module(ideal_from(r6, {z(3)}))));
  const auto r4 = zmod(4);
  EXPECT_FALSE(is_flat_module(quotient_module(ideal_from(r4, {z(2)}))));
}

TEST(Flatness, AgreesWithColonCriterion) {
  const std::vector<RingPtr> rings{zmod(4), zmod(12), product({zmod(2), zmod(4)}),
                                   poly_quotient(zmod(2), {z(0), z(0), z(1)})};
  for (const auto& r : rings)
    for (const auto& i : all_ideals(r)) {
      const auto m = quotient_module(i);
      EXPECT_EQ(is_flat_module(m), flat_by_colons(m)) << r->name();
    }
}

TEST(LocalIso, Examples) {
  EXPECT_EQ(check_local_iso(RingMap::identity(zmod(6))), Verdict::Confirmed);
  const auto r6 = zmod(6);
  const auto proj3 = quotient(r6, {z(3)}).projection;  // onto the Z/3 factor
  EXPECT_EQ(proj3.target()->order(), 3);
  EXPECT_EQ(check_local_iso(proj3), Verdict::Confirmed);
  EXPECT_EQ(check_local_iso(RingMap::make(zmod(4), zmod(2), {z(1)})), Verdict::NotApplicable);
}
