#include <random>

#include <gtest/gtest.h>

#include "twistnorm/catalog.hpp"
#include "twistnorm/classifier.hpp"
#include "twistnorm/instances.hpp"
#include "twistnorm/normality.hpp"

using namespace twistnorm;

namespace {

InvolutionSpec classical_trivial(const Group& G, const CoefficientRing& K) {
  return make_involution_spec(classical_involution(G), UnitHomomorphism::trivial(G, K));
}

/// Every valid (sigma, f) on G over K.
std::vector<InvolutionSpec> all_specs(const Group& G, const CoefficientRing& K) {
  std::vector<InvolutionSpec> out;
  for (const auto& sigma : enumerate_antiautomorphisms_order2(G))
    for (const auto& f : enumerate_unit_homomorphisms(G, K)) {
      InvolutionSpec spec(sigma, f);
      if (spec.validate().valid) out.push_back(spec);
    }
  return out;
}

}  // namespace

TEST(Pairwise, CommutativeGroupsAreNormal) {
  const auto K = make_ring("Z3");
  for (const Group& g : {make_cyclic(6), make_elementary_abelian(2, 3), direct_product(make_cyclic(4), make_cyclic(2))})
    for (const auto& spec : all_specs(g, K)) EXPECT_TRUE(check_pairwise(spec).normal);
}

TEST(Pairwise, D4ClassicalOverZ3FailsOnGeneratorPair) {
  const Group d4 = make_dihedral(4);
  const auto K = make_ring("Z3");
  const auto v = check_pairwise(classical_trivial(d4, K));
  EXPECT_FALSE(v.normal);
  EXPECT_EQ(v.method, "pairwise");
  EXPECT_EQ(v.witness_kind, WitnessKind::kPair);
  EXPECT_EQ(v.witness_elements, (std::vector<Elem>{1, 4}));
}

TEST(Pairwise, D4ClassicalOverZ2IsNormal) {
  const Group d4 = make_dihedral(4);
  const auto K = make_ring("Z2");
  const auto spec = classical_trivial(d4, K);
  EXPECT_TRUE(check_pairwise(spec).normal);
  EXPECT_TRUE(check_exhaustive(spec).normal);
}

TEST(Pairwise, CrossTermOfGeneratorPair) {
  const Group d4 = make_dihedral(4);
  const auto K = make_ring("Z3");
  const auto t = cross_term(classical_trivial(d4, K), 1, 4);
  const Elem ab = d4.mul(1, 4), a3b = d4.mul(3, 4);
  EXPECT_EQ(t[ab], 2u);
  EXPECT_EQ(t[a3b], K.neg(2));
}

TEST(Pairwise, DiagonalWitnessPreferred) {
  // whenever some g sigma(g) != sigma(g) g the witness is that single element
  const Group s3 = make_dihedral(3);
  const auto K = make_ring("Z5");
  for (const auto& spec : all_specs(s3, K)) {
    const auto v = check_pairwise(spec);
    bool diagonal_ok = true;
    for (Elem g = 0; g < s3.order(); ++g) diagonal_ok = diagonal_ok && diagonal_term_vanishes(spec, g);
    if (!diagonal_ok) {
      EXPECT_EQ(v.witness_kind, WitnessKind::kElement);
    }
  }
}

TEST(Pairwise, WitnessReverifiesAgainstDefect) {
  for (const char* label : {"Z3", "Z4", "Z5", "F4"}) {
    const auto K = make_ring(label);
    for (const Group& g : {make_dihedral(3), make_dihedral(4), make_quaternion(8), make_dihedral(6)})
      for (const auto& spec : all_specs(g, K)) {
        const auto v = check_pairwise(spec);
        if (v.normal) continue;
        EXPECT_FALSE(normality_defect(spec, v.witness_element(g, K)).is_zero()) << g.name() << " " << label;
      }
  }
}

TEST(Pairwise, UnvalidatedSpecIsContractError) {
  const Group g = make_cyclic(2);
  const auto K = make_ring("Z2");
  const InvolutionSpec spec(classical_involution(g), UnitHomomorphism::trivial(g, K));
  EXPECT_THROW(check_pairwise(spec), ContractError);
  EXPECT_THROW(check_exhaustive(spec), ContractError);
}

TEST(Exhaustive, Z2C2) {
  const Group c2 = make_cyclic(2);
  const auto K = make_ring("Z2");
  const auto v = check_exhaustive(classical_trivial(c2, K));
  EXPECT_TRUE(v.normal);
  EXPECT_EQ(v.method, "exhaustive");
}

TEST(Exhaustive, S3ClassicalOverZ2MatchesPairwise) {
  const Group s3 = make_dihedral(3);
  const auto K = make_ring("Z2");
  const auto spec = classical_trivial(s3, K);
  EXPECT_EQ(check_exhaustive(spec).normal, check_pairwise(spec).normal);
}

TEST(Exhaustive, S3TheoremOneSpecOverZ3) {
  const Group s3 = make_dihedral(3);
  const auto K = make_ring("Z3");
  const auto spec = make_involution_spec(builtin_sigma("theorem-i", s3), builtin_f("sign", s3, K));
  ASSERT_EQ(group_ring_size(s3, K, kMaxEnumeratedGroupRing), 729u);
  EXPECT_TRUE(check_exhaustive(spec).normal);
  EXPECT_TRUE(check_pairwise(spec).normal);
}

TEST(Exhaustive, WitnessVectorIsNotNormal) {
  const Group d4 = make_dihedral(4);
  const auto K = make_ring("Z3");
  const auto spec = classical_trivial(d4, K);
  const auto v = check_exhaustive(spec);
  ASSERT_FALSE(v.normal);
  EXPECT_EQ(v.witness_kind, WitnessKind::kVector);
  EXPECT_FALSE(normality_defect(spec, v.witness_element(d4, K)).is_zero());
}

TEST(Exhaustive, BoundIsCapabilityError) {
  const Group g = make_cyclic(17);
  const auto K = make_ring("Z2");
  EXPECT_THROW(check_exhaustive(classical_trivial(g, K)), CapabilityError);
}

TEST(OracleEquivalence, SmallGroupsAndRings) {
  std::size_t runs = 0;
  for (const auto& label : catalog_labels(6)) {
    const Group g = parse_group_label(label);
    for (const char* ring : {"Z2", "Z3", "Z4", "F4"}) {
      const auto K = make_ring(ring);
      for (const auto& spec : all_specs(g, K)) {
        ++runs;
        EXPECT_EQ(check_pairwise(spec).normal, check_exhaustive(spec).normal) << label << " " << ring;
      }
    }
  }
  EXPECT_GT(runs, 50u);
}

TEST(OracleEquivalence, OrderEightOverZ2) {
  const auto K = make_ring("Z2");
  for (const Group& g : {make_dihedral(4), make_quaternion(8)})
    for (const auto& spec : all_specs(g, K)) EXPECT_EQ(check_pairwise(spec).normal, check_exhaustive(spec).normal);
}

TEST(ScalingInvariance, FrobeniusOnF4) {
  // F4 = {0, 1, x, x+1}; the Frobenius a -> a^2 swaps x and x+1
  const std::vector<Scalar> frobenius{0, 1, 3, 2};
  const auto K = make_ring("F4");
  for (const Group& g : {make_cyclic(3), make_cyclic(6), make_dihedral(3), make_dihedral(6), make_cyclic(12)})
    for (const auto& spec : all_specs(g, K)) {
      std::vector<Scalar> twisted;
      for (Scalar v : spec.f().values()) twisted.push_back(frobenius[v]);
      const auto other = make_involution_spec(spec.sigma(), UnitHomomorphism(g, K, twisted));
      EXPECT_EQ(check_pairwise(spec).normal, check_pairwise(other).normal) << g.name();
    }
}

TEST(KnownGap, ExtraspecialInstancesWithOddArfInvariant) {
  // On D4 Y D4 over Z2 with trivial f, the involutions of this list are
  // sigma-normal but admit no decomposition into commuting sigma-groups.
  const Group g = make_d4_y_d4();
  const auto K = make_ring("Z2");
  const auto sigmas = enumerate_antiautomorphisms_order2(g);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Scalar> bit(0, 1);
  for (std::size_t index : {5u, 17u, 45u, 46u, 47u, 50u}) {
    const auto spec = make_involution_spec(sigmas.at(index), UnitHomomorphism::trivial(g, K));
    EXPECT_TRUE(check_pairwise(spec).normal) << index;
    for (int i = 0; i < 200; ++i) {
      std::vector<Scalar> c(g.order());
      for (auto& v : c) v = bit(rng);
      ASSERT_TRUE(normality_defect(spec, GroupRingElement(g, K, c)).is_zero()) << index;
    }
    EXPECT_EQ(classify(spec).tag, TheoremCase::kNotNormal) << index;
  }
}
