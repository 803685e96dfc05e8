#include <gtest/gtest.h>

#include <random>

#include "sdn/gf2/bit_vector.hpp"
#include "test_support.hpp"

namespace sdn {
namespace {

TEST(BitVector, ParsesAndPrintsAsciiBits) {
  const auto v = BitVector::from_string("0110001");
  EXPECT_EQ(v.size(), 7U);
  EXPECT_FALSE(v[0]);
  EXPECT_TRUE(v[1]);
  EXPECT_TRUE(v[6]);
  EXPECT_EQ(v.weight(), 3U);
  EXPECT_EQ(v.to_string(), "0110001");
}

TEST(BitVector, RejectsBadCharactersAndLengths) {
  EXPECT_THROW(BitVector::from_string("01x0"), ParseError);
  EXPECT_THROW(BitVector(0), LengthError);
  EXPECT_THROW(BitVector(BitVector::kMaxLength + 1), LengthError);
  EXPECT_NO_THROW(BitVector(BitVector::kMaxLength));
}

TEST(BitVector, OnesKeepsPaddingClear) {
  for (std::size_t n : {1U, 63U, 64U, 65U, 68U, 128U, 1000U}) {
    const auto v = BitVector::ones(n);
    EXPECT_EQ(v.weight(), n);
    // Equality is word-wise, so padding must be canonical.
    BitVector w(n);
    for (std::size_t i = 0; i < n; ++i) w.set(i);
    EXPECT_EQ(v, w);
  }
}

TEST(BitVector, EmbeddedShiftsCoordinates) {
  const auto v = BitVector::from_string("11").embedded(6, 4);
  EXPECT_EQ(v.to_string(), "000011");
  EXPECT_THROW(BitVector::from_string("111").embedded(4, 2), DimensionError);
}

TEST(InnerProduct, SmallExamples) {
  EXPECT_TRUE(inner_product(BitVector::from_string("1100"), BitVector::from_string("1010")));
  EXPECT_FALSE(inner_product(BitVector::from_string("1011"), BitVector(4)));
}

TEST(InnerProduct, FirstChainVectorIsSelfOrthogonal) {
  const std::string x0 = "1100000101101111011001110100000100";
  ASSERT_EQ(testing::count_ones(x0), 16U);
  const auto v = BitVector::from_string(x0);
  EXPECT_FALSE(inner_product(v, v));
}

TEST(InnerProduct, LengthMismatchThrows) {
  EXPECT_THROW(inner_product(BitVector(3), BitVector(4)), DimensionError);
  BitVector a(3);
  EXPECT_THROW(a ^= BitVector(5), DimensionError);
}

TEST(InnerProduct, SymmetricAndBilinearOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    const auto x = testing::random_vector(rng, n);
    const auto y = testing::random_vector(rng, n);
    const auto z = testing::random_vector(rng, n);
    EXPECT_EQ(inner_product(x, y), inner_product(y, x));
    EXPECT_EQ(inner_product(x ^ y, z), inner_product(x, z) != inner_product(y, z));
    std::size_t common = 0;
    for (std::size_t i = 0; i < n; ++i) common += (x[i] && y[i]) ? 1 : 0;
    EXPECT_EQ(inner_product(x, y), common % 2 == 1);
  }
}

}  // namespace
}  // namespace sdn
