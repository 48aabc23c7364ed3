#include "fpnorm/finite_group.hpp"

#include <gtest/gtest.h>

using namespace fpnorm;

namespace {

void expect_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const std::size_t e = g.identity();
  for (std::size_t a = 0; a < n; ++a) {
    EXPECT_EQ(g.multiply(e, a), a);
    EXPECT_EQ(g.multiply(a, e), a);
    EXPECT_EQ(g.multiply(a, g.inverse(a)), e);
    EXPECT_EQ(g.multiply(g.inverse(a), a), e);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        ASSERT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
  }
}

}  // namespace

TEST(FiniteGroup, CorpusSatisfiesAxioms) {
  for (std::size_t n = 1; n <= 24; ++n) expect_group_axioms(FiniteGroup::cyclic(n));
  expect_group_axioms(FiniteGroup::symmetric(3));
  expect_group_axioms(FiniteGroup::symmetric(4));
  expect_group_axioms(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
}

TEST(FiniteGroup, CyclicIsStandardAndAbelian) {
  const FiniteGroup z = FiniteGroup::cyclic(6);
  EXPECT_TRUE(z.is_standard_cyclic());
  EXPECT_TRUE(z.is_abelian());
  EXPECT_EQ(z.multiply(4, 5), 3u);
  EXPECT_EQ(z.inverse(1), 5u);
}

TEST(FiniteGroup, SymmetricThreeIsNonAbelian) {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_FALSE(s3.is_standard_cyclic());
  EXPECT_THROW(FiniteGroup::symmetric(6), std::invalid_argument);
}

TEST(FiniteGroup, KleinFourIsNotCyclic) {
  const FiniteGroup v = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  EXPECT_EQ(v.order(), 4u);
  EXPECT_TRUE(v.is_abelian());
  EXPECT_FALSE(v.is_standard_cyclic());
  for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(v.inverse(a), a);
}

TEST(FiniteGroup, RejectsInvalidTables) {
  EXPECT_THROW(FiniteGroup(MultiplicationTable{}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup({{0, 1}, {1}}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup({{0, 2}, {1, 0}}), std::invalid_argument);
  // Latin square x * y = -x - y mod 3 has no identity.
  EXPECT_THROW(FiniteGroup({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), std::invalid_argument);
  // Identity and inverses exist but (1*1)*2 != 1*(1*2).
  EXPECT_THROW(FiniteGroup({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}), std::invalid_argument);
}

TEST(GroupHomomorphism, InclusionsAndReductions) {
  const GroupHomomorphism inc = cyclic_inclusion(2, 2);
  EXPECT_EQ(inc(1), 2u);
  EXPECT_TRUE(inc.is_injective());
  EXPECT_FALSE(inc.is_surjective());
  const GroupHomomorphism red = cyclic_reduction(6, 3);
  EXPECT_EQ(red(5), 2u);
  EXPECT_TRUE(red.is_surjective());
  EXPECT_FALSE(red.is_injective());
  EXPECT_THROW(cyclic_reduction(6, 4), std::invalid_argument);
  const GroupHomomorphism rot = rotations_in_s3();
  EXPECT_TRUE(rot.is_injective());
  EXPECT_EQ(rot.target().order(), 6u);
}

TEST(GroupHomomorphism, RejectsNonHomomorphism) {
  EXPECT_THROW(GroupHomomorphism(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4), {0, 1}), std::invalid_argument);
  EXPECT_THROW(GroupHomomorphism(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3), {0, 1}), std::invalid_argument);
  EXPECT_THROW(GroupHomomorphism(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2), {0, 5}), std::invalid_argument);
}
