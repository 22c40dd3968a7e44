#include <sstream>

#include <gtest/gtest.h>

#include "twistnorm/catalog.hpp"
#include "twistnorm/group.hpp"
#include "twistnorm/subgroups.hpp"

using namespace twistnorm;

namespace {

std::size_t count_of_order(const Group& G, std::size_t k) {
  std::size_t n = 0;
  for (Elem g = 0; g < G.order(); ++g) n += G.element_order(g) == k;
  return n;
}

bool is_cyclic(const Group& G) { return count_of_order(G, G.order()) > 0; }

}  // namespace

TEST(Multiply, OrderTwoElementSquaresToIdentity) {
  const Group c2 = make_cyclic(2);
  EXPECT_EQ(c2.multiply(1, 1), 0u);
}

TEST(Multiply, RotationSquaredInD4) {
  const Group d4 = make_dihedral(4);
  const Elem a = 1;
  EXPECT_EQ(d4.multiply(a, a), 2u);
  EXPECT_EQ(d4.element_order(d4.multiply(a, a)), 2u);
}

TEST(Multiply, IdentityLaw) {
  const Group q8 = make_quaternion(8);
  for (Elem g = 0; g < q8.order(); ++g) EXPECT_EQ(q8.multiply(q8.identity(), g), g);
}

TEST(Multiply, IndexOutOfRangeIsInputError) {
  const Group c3 = make_cyclic(3);
  EXPECT_THROW(c3.multiply(3, 0), InputError);
  EXPECT_THROW(c3.inverse(7), InputError);
}

TEST(Commutator, SelfCommutatorIsIdentity) {
  const Group d4 = make_dihedral(4);
  for (Elem g = 0; g < d4.order(); ++g) EXPECT_EQ(d4.commutator(g, g), d4.identity());
}

TEST(Commutator, AbelianGroupHasTrivialCommutators) {
  const Group g = make_elementary_abelian(3, 2);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) EXPECT_EQ(g.commutator(x, y), 0u);
}

TEST(Commutator, DihedralGeneratorsGiveRotationSquared) {
  const Group d4 = make_dihedral(4);
  const Elem a = 1, b = 4;
  EXPECT_EQ(d4.commutator(a, b), d4.mul(a, a));
}

TEST(Catalog, TrivialCyclicGroup) {
  const Group g = make_cyclic(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(Catalog, S3HasTrivialCenter) {
  const Group s3 = make_dihedral(3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(center(s3).size(), 1u);
}

TEST(Catalog, Q8HasOneInvolution) {
  const Group q8 = make_quaternion(8);
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_EQ(count_of_order(q8, 2), 1u);
}

TEST(Catalog, Q16Presentation) {
  const Group q16 = make_quaternion(16);
  const Elem a = 1, b = 8;
  EXPECT_EQ(q16.element_order(a), 8u);
  EXPECT_EQ(q16.power(b, 2), q16.power(a, 4));
  EXPECT_EQ(q16.conjugate(a, b), q16.inv(a));
  EXPECT_EQ(count_of_order(q16, 2), 1u);
}

TEST(Catalog, ElementaryAbelianExponent) {
  const Group g = make_elementary_abelian(2, 3);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(exponent(g), 2u);
}

TEST(Catalog, UnsupportedParametersAreInputErrors) {
  EXPECT_THROW(make_cyclic(0), InputError);
  EXPECT_THROW(make_quaternion(12), InputError);
  EXPECT_THROW(make_elementary_abelian(4, 2), InputError);
  EXPECT_THROW(make_elementary_abelian(2, 0), InputError);
}

TEST(DirectProduct, KleinFourGroup) {
  const Group v = direct_product(make_cyclic(2), make_cyclic(2));
  EXPECT_EQ(v.order(), 4u);
  EXPECT_EQ(exponent(v), 2u);
}

TEST(DirectProduct, C2TimesC3IsCyclic) {
  const Group g = direct_product(make_cyclic(2), make_cyclic(3));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(is_cyclic(g));
}

TEST(DirectProduct, TrivialFactor) {
  const Group d4 = make_dihedral(4);
  const Group g = direct_product(make_cyclic(1), d4);
  EXPECT_TRUE(g == d4);
}

TEST(DirectProduct, FactorsCommute) {
  const Group s3 = make_dihedral(3), c2 = make_cyclic(2);
  const Group g = direct_product(s3, c2);
  for (Elem a = 0; a < s3.order(); ++a) EXPECT_TRUE(g.commute(a, static_cast<Elem>(s3.order())));
}

TEST(CentralProduct, D4YC4HasOrder16) {
  const Group g = make_d4_y_c4();
  EXPECT_EQ(g.order(), 16u);
}

TEST(CentralProduct, D4YD4IsExtraspecial) {
  const Group g = make_d4_y_d4();
  EXPECT_EQ(g.order(), 32u);
  EXPECT_EQ(derived_subgroup(g).size(), 2u);
  EXPECT_EQ(center(g).size(), 2u);
  EXPECT_TRUE(derived_subgroup(g) == center(g));
}

TEST(CentralProduct, Q8YQ8IsExtraspecial) {
  const Group g = make_q8_y_q8();
  EXPECT_EQ(g.order(), 32u);
  EXPECT_TRUE(derived_subgroup(g) == center(g));
  EXPECT_EQ(frattini_subgroup(g).size(), 2u);
}

TEST(CentralProduct, ImagesCommuteElementwise) {
  const Group d4 = make_dihedral(4);
  const Group g = make_d4_y_d4();
  // the images of the two factors are the cosets of (x, e) and (e, y)
  const auto gens = g.generators();
  ASSERT_EQ(gens.size(), 4u);
  for (int i : {0, 1})
    for (int j : {2, 3}) EXPECT_TRUE(g.commute(gens[i], gens[j]));
  EXPECT_EQ(d4.order() * d4.order() / 2, g.order());
}

TEST(CentralProduct, TrivialAmalgamationIsDirectProduct) {
  const Group a = make_dihedral(3), b = make_cyclic(2);
  const Group g = central_product(a, b, ElementSubset::trivial(a), ElementSubset::trivial(b), {{0, 0}});
  EXPECT_TRUE(g == direct_product(a, b));
}

TEST(CentralProduct, NonCentralSubgroupRejected) {
  const Group d4 = make_dihedral(4), c2 = make_cyclic(2);
  EXPECT_THROW(central_product(d4, c2, ElementSubset::of(d4, {0, 4}), ElementSubset::of(c2, {0, 1}), {{0, 0}, {4, 1}}),
               InputError);
}

TEST(CentralProduct, NonHomomorphismRejected) {
  const Group c4 = make_cyclic(4);
  const auto Z = ElementSubset::whole(c4);
  EXPECT_THROW(central_product(c4, c4, Z, Z, {{0, 0}, {1, 2}, {2, 1}, {3, 3}}), InputError);
}

TEST(Quotient, ByWholeGroupIsTrivial) {
  const Group q8 = make_quaternion(8);
  EXPECT_EQ(quotient(q8, ElementSubset::whole(q8)).group.order(), 1u);
}

TEST(Quotient, Q8ModCenterIsKleinFour) {
  const Group q8 = make_quaternion(8);
  const auto q = quotient(q8, center(q8));
  EXPECT_EQ(q.group.order(), 4u);
  EXPECT_EQ(is_elementary_abelian_2(q.group), std::make_pair(true, std::size_t{2}));
  for (Elem g = 0; g < q8.order(); ++g)
    for (Elem h = 0; h < q8.order(); ++h)
      EXPECT_EQ(q.projection[q8.mul(g, h)], q.group.mul(q.projection[g], q.projection[h]));
}

TEST(Quotient, C4ModSquaresIsC2) {
  const Group c4 = make_cyclic(4);
  EXPECT_EQ(quotient(c4, ElementSubset::of(c4, {0, 2})).group.order(), 2u);
}

TEST(Quotient, NonNormalSubgroupRejected) {
  const Group s3 = make_dihedral(3);
  EXPECT_THROW(quotient(s3, ElementSubset::of(s3, {0, 3})), InputError);
}

TEST(CayleyTable, RoundTrip) {
  const Group d4 = make_dihedral(4);
  std::stringstream s;
  write_cayley_table(s, d4);
  const Group back = parse_cayley_table(s);
  EXPECT_TRUE(back == d4);
}

TEST(CayleyTable, CommentsAndBlankLinesIgnored) {
  std::istringstream in("# C2\n2\n\n0 1  # row e\n1 0\n");
  EXPECT_EQ(parse_cayley_table(in).order(), 2u);
}

TEST(CayleyTable, LatinSquareViolation) {
  std::istringstream in("2\n0 1\n1 1\n");
  EXPECT_THROW(parse_cayley_table(in), InputError);
}

TEST(CayleyTable, IdentityMustBeIndexZero) {
  std::istringstream in("2\n1 0\n0 1\n");
  EXPECT_THROW(parse_cayley_table(in), InputError);
}

TEST(CayleyTable, AssociativityViolation) {
  // a Latin square with identity 0 that is not associative (order 5 loop)
  std::istringstream in(
      "5\n"
      "0 1 2 3 4\n"
      "1 0 3 4 2\n"
      "2 4 0 1 3\n"
      "3 2 4 0 1\n"
      "4 3 1 2 0\n");
  EXPECT_THROW(parse_cayley_table(in), InputError);
}

TEST(CayleyTable, RowLengthAndTokens) {
  std::istringstream short_row("2\n0 1\n1\n");
  EXPECT_THROW(parse_cayley_table(short_row), InputError);
  std::istringstream junk("2\n0 1\n1 x\n");
  EXPECT_THROW(parse_cayley_table(junk), InputError);
  std::istringstream range("2\n0 1\n1 2\n");
  EXPECT_THROW(parse_cayley_table(range), InputError);
}

TEST(CayleyTable, OversizeIsCapabilityError) {
  std::istringstream in("65\n");
  EXPECT_THROW(parse_cayley_table(in), CapabilityError);
}

TEST(Invariants, CatalogGroupsAreAssociative) {
  for (const Group& g : {make_dihedral(8), make_quaternion(16), make_d4_y_c4(), make_d4_y_d4(), make_q8_y_q8()}) {
    const std::size_t n = g.order();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}
