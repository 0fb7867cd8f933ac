#include <random>
#include <set>

#include <gtest/gtest.h>

#include "epilab/abelian.hpp"

using namespace epilab;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

void expect_valid_smith(const IntMatrix& m, const SmithForm& s) {
  EXPECT_EQ(s.U * m * s.V, s.D);
  EXPECT_TRUE(s.D.is_diagonal());
  EXPECT_EQ(abs(s.U.determinant()), 1);
  EXPECT_EQ(abs(s.V.determinant()), 1);
  EXPECT_EQ(s.V * s.V_inverse, IntMatrix::identity(m.cols()));
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_GE(s.D(i, i), 0);
    if (i + 1 < n && s.D(i, i) != 0) EXPECT_TRUE(mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t()));
    if (s.D(i, i) == 0 && i + 1 < n) EXPECT_EQ(s.D(i + 1, i + 1), 0);
  }
}

}  // namespace

TEST(SmithNormalForm, DiagTwoThree) {
  const IntMatrix m = from_rows({{2, 0}, {0, 3}});
  const SmithForm s = smith_normal_form(m);
  expect_valid_smith(m, s);
  EXPECT_EQ(s.D, from_rows({{1, 0}, {0, 6}}));
}

TEST(SmithNormalForm, IdentityAndZero) {
  const IntMatrix id = IntMatrix::identity(3);
  EXPECT_EQ(smith_normal_form(id).D, id);
  const IntMatrix z(2, 2);
  const SmithForm s = smith_normal_form(z);
  EXPECT_EQ(s.D, z);
  expect_valid_smith(z, s);
}

TEST(SmithNormalForm, RandomMatricesProperty) {
  std::mt19937_64 rng(20241015);
  std::uniform_int_distribution<int> entry(-9, 9), dim(1, 6);
  for (int iter = 0; iter < 300; ++iter) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    expect_valid_smith(m, smith_normal_form(m));
  }
}

TEST(FpGroup, RejectsUnnormalized) {
  EXPECT_THROW(FpGroup({3, 2}), AlgebraError);
  EXPECT_THROW(FpGroup({1, 2}), AlgebraError);
  EXPECT_THROW(FpGroup({0}), AlgebraError);
  EXPECT_NO_THROW(FpGroup({2, 4, 12}));
}

TEST(FpGroup, LexicographicEnumeration) {
  const FpGroup g({2, 4});
  const auto e = g.elements();
  ASSERT_EQ(e.size(), 8u);
  EXPECT_EQ(e[0], (Elem{0, 0}));
  EXPECT_EQ(e[1], (Elem{0, 1}));
  EXPECT_EQ(e[4], (Elem{1, 0}));
  for (std::uint64_t i = 0; i < e.size(); ++i) EXPECT_EQ(g.index_of(e[i]), i);
}

TEST(QuotientPresentation, Examples) {
  auto q = quotient_presentation(FpGroup({4}), {{2}});
  EXPECT_EQ(q.group, FpGroup({2}));
  q = quotient_presentation(FpGroup({6}), {});
  EXPECT_EQ(q.group, FpGroup({6}));
  q = quotient_presentation(FpGroup({2, 2}), {{1, 1}});
  EXPECT_EQ(q.group, FpGroup({2}));
  EXPECT_TRUE(q.group.is_zero(q.project({1, 1})));
  EXPECT_FALSE(q.group.is_zero(q.project({1, 0})));
}

TEST(QuotientPresentation, MalformedElement) {
  EXPECT_THROW(quotient_presentation(FpGroup({4}), {{1, 2}}), AlgebraError);
  EXPECT_THROW(quotient_presentation(FpGroup({4}), {{7}}), AlgebraError);
}

TEST(QuotientPresentation, OrderMatchesEnumerationProperty) {
  std::mt19937_64 rng(7);
  const std::vector<FpGroup> groups{FpGroup({2, 2, 4}), FpGroup({3, 6}), FpGroup({12}), FpGroup({2, 4, 8}),
                                    FpGroup({5, 10})};
  for (int iter = 0; iter < 200; ++iter) {
    const FpGroup& g = groups[rng() % groups.size()];
    std::vector<Elem> rels;
    const int n = static_cast<int>(rng() % 3);
    for (int r = 0; r < n; ++r) rels.push_back(g.element_at(rng() % g.small_order()));
    const auto q = quotient_presentation(g, rels);
    const auto sub = subgroup_closure(g, rels);
    EXPECT_EQ(q.group.order() * static_cast<long>(sub.elements.size()), g.order());
    for (const auto& x : g.elements()) {
      // kernel of proj is exactly the relation subgroup
      EXPECT_EQ(q.group.is_zero(q.project(x)), sub.contains(x));
      // lift is a section
      const Elem y = q.project(x);
      EXPECT_EQ(q.project(q.section(y)), y);
      EXPECT_TRUE(sub.contains(g.sub(q.section(q.project(x)), x)));
    }
  }
}

TEST(TensorOverZ, Examples) {
  EXPECT_EQ(tensor_over_z(FpGroup({2}), FpGroup({3})).pres.group.order(), 1);
  EXPECT_EQ(tensor_over_z(FpGroup({2}), FpGroup({2})).pres.group, FpGroup({2}));
  EXPECT_EQ(tensor_over_z(FpGroup({2, 2}), FpGroup({2, 2})).pres.group.order(), 16);
}

TEST(TensorOverZ, OrderIsGcdProductAndBilinear) {
  const std::vector<FpGroup> gs{FpGroup({2, 4}), FpGroup({6}), FpGroup({3, 9}), FpGroup({2, 2, 2}), FpGroup()};
  for (const auto& a : gs)
    for (const auto& b : gs) {
      const auto t = tensor_over_z(a, b);
      BigInt expect = 1;
      for (auto d : a.invariants())
        for (auto e : b.invariants()) expect *= static_cast<long>(std::gcd(d, e));
      EXPECT_EQ(t.pres.group.order(), expect);
      if (a.small_order() > 16 || b.small_order() > 16) continue;
      const auto elems = a.elements();
      for (const auto& x : elems)
        for (const auto& y : b.elements()) {
          const Elem& x2 = elems.back();
          EXPECT_EQ(t.pure(a.add(x, x2), y), t.pres.group.add(t.pure(x, y), t.pure(x2, y)));
        }
    }
}

TEST(SubgroupClosure, Examples) {
  EXPECT_EQ(subgroup_closure(FpGroup({4}), {}).elements, (std::vector<Elem>{{0}}));
  EXPECT_EQ(subgroup_closure(FpGroup({12}), {{4}}).elements, (std::vector<Elem>{{0}, {4}, {8}}));
  EXPECT_EQ(subgroup_closure(FpGroup({2, 2}), {{1, 0}, {0, 1}}).elements.size(), 4u);
}

TEST(Subgroup, CanonicalFormIsUnique) {
  const FpGroup g({2, 4, 4});
  const Subgroup a(g, {{1, 2, 0}, {0, 1, 1}});
  const Subgroup b(g, {{1, 3, 1}, {0, 1, 1}, {0, 2, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.order(), static_cast<long>(a.elements().size()));
}

TEST(SubgroupPresentation, EmbeddingIsInjectiveOntoSubgroup) {
  const FpGroup g({2, 4, 8});
  const Subgroup h(g, {{1, 2, 4}, {0, 2, 2}});
  const auto sp = present_subgroup(h);
  EXPECT_EQ(sp.pres.group.order(), h.order());
  std::set<Elem> images;
  for (const auto& x : sp.pres.group.elements()) {
    const Elem y = sp.embed(x);
    EXPECT_TRUE(h.contains(y));
    images.insert(y);
  }
  EXPECT_EQ(static_cast<long>(images.size()), h.order());
}
