#include <gtest/gtest.h>

#include "epilab/epi.hpp"

using namespace epilab;

namespace {

Elem z(std::int64_t v) { return Elem{v}; }

RingMap diagonal2() { return RingMap::make(zmod(2), product({zmod(2), zmod(2)}), {Elem{1, 1}}); }
RingMap reduction42() { return RingMap::make(zmod(4), zmod(2), {z(1)}); }
RingPtr dual_numbers() { return poly_quotient(zmod(2), {z(0), z(0), z(1)}); }
RingPtr split_f2() { return poly_quotient(zmod(2), {z(0), z(1), z(1)}); }

}  // namespace

TEST(TensorSquare, Orders) {
  for (std::int64_t n : {1, 2, 6, 12}) {
    const auto t = tensor_square(RingMap::identity(zmod(n)));
    EXPECT_EQ(t.ring->order(), n);
    EXPECT_TRUE(t.p_map.is_bijective());
  }
  EXPECT_EQ(tensor_square(reduction42()).ring->order(), 2);
  EXPECT_EQ(tensor_square(diagonal2()).ring->order(), 16);
}

TEST(TensorSquare, RetractionAndInjectivity) {
  for (const auto& phi : {diagonal2(), reduction42(), structure_map(zmod(2), dual_numbers()),
                          structure_map(zmod(4), poly_quotient(zmod(4), {z(1), z(1), z(1)}))}) {
    const auto t = tensor_square(phi);
    EXPECT_TRUE(t.i_map.then(t.p_map).same_as(RingMap::identity(phi.target())));
    EXPECT_TRUE(t.i_map.is_injective());
    EXPECT_TRUE(t.j_map.is_injective());
  }
}

TEST(EpiConditions, Examples) {
  const auto id = RingMap::identity(zmod(6));
  for (const auto& [phi, expect] : std::vector<std::pair<RingMap, bool>>{{id, true}, {reduction42(), true},
                                                                        {diagonal2(), false}}) {
    const auto c = epi_conditions(phi);
    EXPECT_EQ(c.tensor, expect);
    EXPECT_EQ(c.mult, expect);
    EXPECT_EQ(c.coker, expect);
    EXPECT_EQ(c.symmetric, expect);
    EXPECT_EQ(is_epimorphism(phi, true), expect);
  }
}

TEST(EpiConditions, SurjectionsAreEpimorphisms) {
  const auto s = product({zmod(4), zmod(3)});
  const auto q = quotient(s, {s->from_natural({2, 0})});
  EXPECT_TRUE(is_epimorphism(q.projection, true));
  const auto d = dual_numbers();
  EXPECT_TRUE(is_epimorphism(quotient(d, {d->from_natural({0, 1})}).projection, true));
}

TEST(ModuleCondition, Examples) {
  const auto red = reduction42();
  EXPECT_TRUE(check_module_condition(red, ring_as_module(red.target())));
  const auto d = diagonal2();
  EXPECT_FALSE(check_module_condition(d, ring_as_module(d.target())));
  EXPECT_THROW(check_module_condition(RingMap::identity(zmod(12)), quotient_module(ideal_from(zmod(12), {z(4)}))),
               AlgebraError);
  const auto r12 = zmod(12);
  EXPECT_TRUE(check_module_condition(RingMap::identity(r12), quotient_module(ideal_from(r12, {z(4)}))));
}

TEST(ModuleCondition, MatchesMultOnSelf) {
  for (const auto& phi : {diagonal2(), reduction42(), structure_map(zmod(2), dual_numbers()),
                          structure_map(zmod(2), split_f2())})
    EXPECT_EQ(check_module_condition(phi, ring_as_module(phi.target())), is_epi_mult(phi));
}

TEST(Kaehler, Examples) {
  EXPECT_EQ(kaehler(RingMap::identity(zmod(6))).order(), 1);
  EXPECT_EQ(kaehler(reduction42()).order(), 1);
  const auto dual = kaehler(structure_map(zmod(2), dual_numbers()));
  EXPECT_EQ(dual.order(), 4);
  EXPECT_TRUE(dual.module.submodule(dual.generators).is_whole());
  const auto etale = structure_map(zmod(2), split_f2());
  EXPECT_EQ(kaehler(etale).order(), 1);
  EXPECT_FALSE(is_epimorphism(etale, true));
}

TEST(Kaehler, DiagonalHasNoDifferentials) {
  // a product of copies of the base is etale
  EXPECT_EQ(kaehler(diagonal2()).order(), 1);
}

TEST(Verdicts, FaithfullyFlatEpi) {
  EXPECT_EQ(verify_faithfully_flat_epi_iso(RingMap::identity(zmod(6))), Verdict::Confirmed);
  EXPECT_EQ(verify_faithfully_flat_epi_iso(reduction42()), Verdict::NotApplicable);
  EXPECT_EQ(to_string(Verdict::Counterexample), "COUNTEREXAMPLE");
}
