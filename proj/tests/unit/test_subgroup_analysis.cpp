#include <gtest/gtest.h>

#include "twistnorm/catalog.hpp"
#include "twistnorm/subgroups.hpp"

using namespace twistnorm;

namespace {

// dihedral(4): a = 1, b = 4; quaternion(8): a = 1, b = 4
constexpr Elem kA = 1, kB = 4;

ElementSubset of(const Group& G, std::vector<Elem> m) { return ElementSubset::of(G, m); }

}  // namespace

TEST(Center, AbelianGroupIsItsOwnCenter) {
  const Group g = make_cyclic(6);
  EXPECT_TRUE(center(g) == ElementSubset::whole(g));
}

TEST(Center, D4CenterIsGeneratedByRotationSquared) {
  const Group d4 = make_dihedral(4);
  EXPECT_TRUE(center(d4) == of(d4, {0, d4.mul(kA, kA)}));
}

TEST(Centralizer, RotationInQ8) {
  const Group q8 = make_quaternion(8);
  const auto c = centralizer(q8, of(q8, {kA}));
  EXPECT_EQ(c.size(), 4u);
  EXPECT_TRUE(c == generated_subgroup(q8, std::vector<Elem>{kA}));
  EXPECT_TRUE(is_subgroup(c));
}

TEST(GeneratedSubgroup, EmptySetGivesTrivialSubgroup) {
  const Group d4 = make_dihedral(4);
  EXPECT_TRUE(generated_subgroup(d4, std::vector<Elem>{}) == ElementSubset::trivial(d4));
}

TEST(GeneratedSubgroup, Examples) {
  const Group d4 = make_dihedral(4);
  const Elem a2 = d4.mul(kA, kA);
  EXPECT_TRUE(generated_subgroup(d4, std::vector<Elem>{a2}) == of(d4, {0, a2}));
  EXPECT_TRUE(generated_subgroup(d4, std::vector<Elem>{kA, kB}) == ElementSubset::whole(d4));
}

TEST(DerivedSubgroup, Examples) {
  EXPECT_EQ(derived_subgroup(make_elementary_abelian(2, 3)).size(), 1u);
  const Group d4 = make_dihedral(4);
  EXPECT_TRUE(derived_subgroup(d4) == of(d4, {0, 2}));
  const Group s3 = make_dihedral(3);
  EXPECT_TRUE(derived_subgroup(s3) == of(s3, {0, 1, 2}));
}

TEST(LowerCentralSeries, Q8HasClassTwo) {
  const Group q8 = make_quaternion(8);
  const auto series = lower_central_series(q8);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_TRUE(series[0] == ElementSubset::whole(q8));
  EXPECT_TRUE(series[1] == of(q8, {0, 2}));
  EXPECT_EQ(series[2].size(), 1u);
  EXPECT_EQ(nilpotency_class(ElementSubset::whole(q8)), std::optional<std::size_t>(2));
}

TEST(LowerCentralSeries, S3IsNotNilpotent) {
  EXPECT_FALSE(nilpotency_class(ElementSubset::whole(make_dihedral(3))).has_value());
}

TEST(Frattini, Examples) {
  EXPECT_EQ(frattini_subgroup(make_elementary_abelian(2, 2)).size(), 1u);
  const Group d4 = make_dihedral(4);
  EXPECT_TRUE(frattini_subgroup(d4) == of(d4, {0, 2}));
  EXPECT_TRUE(frattini_subgroup(d4) == center(d4));
  const Group c4 = make_cyclic(4);
  EXPECT_TRUE(frattini_subgroup(c4) == of(c4, {0, 2}));
}

TEST(Frattini, OrderBound) {
  const Group big = make_cyclic(64);
  EXPECT_THROW(frattini_subgroup(big), CapabilityError);
}

TEST(Frattini, OfSubgroupInParentIndices) {
  const Group g = make_d4_y_d4();
  const auto& gens = g.generators();
  const auto H = generated_subgroup(g, std::vector<Elem>{gens[0], gens[1]});
  EXPECT_EQ(H.size(), 8u);
  EXPECT_TRUE(frattini_subgroup(H) == center(g));
}

TEST(Normality, CenterIsNormal) {
  for (const Group& g : {make_dihedral(5), make_quaternion(16), make_d4_y_c4()}) EXPECT_TRUE(is_normal(g, center(g)));
}

TEST(Normality, ReflectionSubgroupOfS3IsNotNormal) {
  const Group s3 = make_dihedral(3);
  EXPECT_FALSE(is_normal(s3, of(s3, {0, 3})));
}

TEST(Normality, NonSubgroupRejected) {
  const Group s3 = make_dihedral(3);
  EXPECT_THROW(is_normal(s3, of(s3, {0, 1})), InputError);
}

TEST(Exponent, Examples) {
  EXPECT_EQ(exponent(make_quaternion(8)), 4u);
  EXPECT_EQ(exponent(make_dihedral(3)), 6u);
  EXPECT_EQ(exponent(make_cyclic(1)), 1u);
}

TEST(ElementaryAbelian, D4ModCenter) {
  const Group d4 = make_dihedral(4);
  EXPECT_EQ(is_elementary_abelian_2(quotient(d4, center(d4)).group), std::make_pair(true, std::size_t{2}));
  EXPECT_FALSE(is_elementary_abelian_2(make_cyclic(4)).first);
}

TEST(IndexTwo, OddOrderHasNone) { EXPECT_TRUE(index_two_subgroups(make_cyclic(3)).empty()); }

TEST(IndexTwo, D4HasThree) {
  const Group d4 = make_dihedral(4);
  const auto subs = index_two_subgroups(d4);
  ASSERT_EQ(subs.size(), 3u);
  const Elem a2 = 2, ab = d4.mul(kA, kB);
  const std::vector<ElementSubset> expected{generated_subgroup(d4, std::vector<Elem>{kA}),
                                            generated_subgroup(d4, std::vector<Elem>{a2, kB}),
                                            generated_subgroup(d4, std::vector<Elem>{a2, ab})};
  for (const auto& e : expected) EXPECT_NE(std::find(subs.begin(), subs.end(), e), subs.end());
}

TEST(IndexTwo, S3HasOnlyRotations) {
  const Group s3 = make_dihedral(3);
  const auto subs = index_two_subgroups(s3);
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_TRUE(subs[0] == of(s3, {0, 1, 2}));
}

TEST(IndexTwo, ElementaryAbelianCount) {
  EXPECT_EQ(index_two_subgroups(make_elementary_abelian(2, 3)).size(), 7u);
}

TEST(Invariants, DerivedInsideEveryIndexTwoSubgroup) {
  for (const Group& g : {make_dihedral(4), make_dihedral(6), make_quaternion(16), make_d4_y_c4(), make_d4_y_d4()}) {
    const auto d = derived_subgroup(g);
    for (const auto& h : index_two_subgroups(g)) {
      EXPECT_TRUE(d.is_subset_of(h)) << g.name();
      EXPECT_TRUE(is_normal(g, h)) << g.name();
      EXPECT_EQ(h.size() * 2, g.order());
    }
  }
}

TEST(Invariants, FrattiniNormalAndInsideMaximals) {
  for (const Group& g : {make_dihedral(6), make_quaternion(16), make_d4_y_c4(), make_cyclic(12)}) {
    const auto phi = frattini_subgroup(g);
    EXPECT_TRUE(is_normal(g, phi));
    for (const auto& m : subgroup_lattice(g).maximal_subgroups()) EXPECT_TRUE(phi.is_subset_of(m));
  }
}

TEST(Invariants, QuotientExponentDividesExponent) {
  for (const Group& g : {make_dihedral(4), make_quaternion(16), make_d4_y_d4(), make_dihedral(6)}) {
    const auto q = quotient(g, center(g));
    EXPECT_EQ(exponent(g) % exponent(q.group), 0u) << g.name();
  }
}

TEST(Lattice, SubgroupCounts) {
  EXPECT_EQ(subgroup_lattice(make_dihedral(4)).subgroups.size(), 10u);
  EXPECT_EQ(subgroup_lattice(make_quaternion(8)).subgroups.size(), 6u);
  EXPECT_EQ(subgroup_lattice(make_dihedral(3)).subgroups.size(), 6u);
  EXPECT_EQ(subgroup_lattice(make_elementary_abelian(2, 3)).subgroups.size(), 16u);
}

TEST(InducedGroup, Reindexing) {
  const Group d4 = make_dihedral(4);
  const auto induced = induced_group(generated_subgroup(d4, std::vector<Elem>{kA}));
  EXPECT_EQ(induced.group.order(), 4u);
  EXPECT_TRUE(induced.group.is_abelian());
  EXPECT_EQ(induced.embedding.front(), 0u);
}

TEST(ProductSet, DihedralFromRotationsAndReflection) {
  const Group d4 = make_dihedral(4);
  const auto rot = generated_subgroup(d4, std::vector<Elem>{kA});
  EXPECT_TRUE(product_set(rot, of(d4, {0, kB})) == ElementSubset::whole(d4));
}
