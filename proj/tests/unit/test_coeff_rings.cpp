#include <numeric>

#include <gtest/gtest.h>

#include "twistnorm/ring.hpp"

using namespace twistnorm;

namespace {

std::size_t totient(std::size_t n) {
  std::size_t t = 0;
  for (std::size_t k = 1; k <= n; ++k) t += std::gcd(k, n) == 1;
  return t;
}

}  // namespace

TEST(MakeRing, Z2) {
  const auto K = make_ring("Z2");
  EXPECT_EQ(K.size(), 2u);
  EXPECT_EQ(K.characteristic(), 2u);
  EXPECT_EQ(K.units(), std::vector<Scalar>{1});
}

TEST(MakeRing, Z4) {
  const auto K = make_ring("Z4");
  EXPECT_EQ(K.characteristic(), 4u);
  EXPECT_EQ(K.units(), (std::vector<Scalar>{1, 3}));
}

TEST(MakeRing, F4UnitsHaveOrderDividingThree) {
  const auto K = make_ring("F4");
  EXPECT_EQ(K.characteristic(), 2u);
  EXPECT_EQ(K.units().size(), 3u);
  for (Scalar u : K.units()) EXPECT_EQ(3 % K.multiplicative_order(u), 0u);
}

TEST(MakeRing, UnknownLabel) {
  EXPECT_THROW(make_ring("Z10"), InputError);
  EXPECT_THROW(make_ring("F6"), InputError);
  EXPECT_THROW(make_ring(""), InputError);
}

TEST(MakeRing, PrimeFieldLabelsKeepTheirName) {
  const auto K = make_ring("F5");
  EXPECT_EQ(K.label(), "F5");
  EXPECT_EQ(K.size(), 5u);
  EXPECT_EQ(K.units().size(), 4u);
}

TEST(Negation, Z5) { EXPECT_EQ(make_ring("Z5").neg(2), 3u); }

TEST(Negation, MinusOneEqualsOneExactlyInCharacteristicTwo) {
  EXPECT_TRUE(make_ring("Z2").is_minus_one_equal_one());
  EXPECT_TRUE(make_ring("F8").is_minus_one_equal_one());
  EXPECT_FALSE(make_ring("F9").is_minus_one_equal_one());
  EXPECT_FALSE(make_ring("Z4").is_minus_one_equal_one());
}

TEST(Units, CountsMatchTotientAndFieldSize) {
  for (std::size_t n = 2; n <= 9; ++n) {
    EXPECT_EQ(make_ring("Z" + std::to_string(n)).units().size(), totient(n)) << n;
  }
  EXPECT_EQ(make_ring("F4").units().size(), 3u);
  EXPECT_EQ(make_ring("F8").units().size(), 7u);
  EXPECT_EQ(make_ring("F9").units().size(), 8u);
}

TEST(Units, InversesAreTwoSided) {
  for (const auto& label : ring_labels()) {
    const auto K = make_ring(label);
    for (Scalar u : K.units()) {
      EXPECT_EQ(K.mul(u, K.unit_inverse(u)), K.one()) << label;
    }
  }
}

TEST(Axioms, AllLabelsSatisfyRingLaws) {
  for (const auto& label : ring_labels()) {
    const auto K = make_ring(label);
    const Scalar n = static_cast<Scalar>(K.size());
    for (Scalar a = 0; a < n; ++a) {
      EXPECT_EQ(K.add(a, K.neg(a)), K.zero());
      EXPECT_EQ(K.mul(a, K.one()), a);
      for (Scalar b = 0; b < n; ++b) {
        EXPECT_EQ(K.add(a, b), K.add(b, a));
        EXPECT_EQ(K.mul(a, b), K.mul(b, a));
        for (Scalar c = 0; c < n; ++c) {
          EXPECT_EQ(K.mul(a, K.add(b, c)), K.add(K.mul(a, b), K.mul(a, c)));
          EXPECT_EQ(K.mul(K.mul(a, b), c), K.mul(a, K.mul(b, c)));
        }
      }
    }
  }
}

TEST(Characteristic, AdditiveOrderOfOne) {
  EXPECT_EQ(make_ring("Z6").characteristic(), 6u);
  EXPECT_EQ(make_ring("F9").characteristic(), 3u);
  EXPECT_EQ(make_ring("F8").characteristic(), 2u);
}

TEST(Fields, EveryNonzeroElementIsAUnit) {
  for (const char* label : {"F4", "F8", "F9", "F7"}) {
    const auto K = make_ring(label);
    EXPECT_EQ(K.units().size(), K.size() - 1) << label;
  }
}

TEST(Elements, OutOfRangeRejected) { EXPECT_THROW(make_ring("Z3").check_element(3), InputError); }
