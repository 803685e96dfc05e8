#include <gtest/gtest.h>

#include <random>

#include "sdn/io/dataset.hpp"
#include "sdn/self_dual.hpp"
#include "test_support.hpp"

namespace sdn {
namespace {

TEST(MakeSelfDual, SmallestCode) {
  const auto c = make_self_dual(BitMatrix::from_strings({"11"}));
  EXPECT_EQ(c.length(), 2U);
  EXPECT_EQ(c.dimension(), 1U);
  EXPECT_TRUE(c.contains(BitVector::from_string("11")));
  EXPECT_TRUE(c.contains_all_ones());
  EXPECT_EQ(c.code_type(), CodeType::TypeI);  // the generator row has weight 2
}

TEST(MakeSelfDual, BaseCodeValidates) {
  const auto ds = io::Dataset::load(SDN_DEFAULT_DATA_DIR);
  const auto c = ds.base_code();
  EXPECT_EQ(c.length(), 68U);
  EXPECT_EQ(c.dimension(), 34U);
  EXPECT_TRUE(c.contains_all_ones());
}

TEST(MakeSelfDual, Rejections) {
  EXPECT_THROW(make_self_dual(BitMatrix::from_strings({"10"})), ValidationError);
  EXPECT_THROW(make_self_dual(BitMatrix::from_strings({"110"})), LengthError);
  EXPECT_THROW(make_self_dual(BitMatrix(4)), ValidationError);
  // Self-orthogonal but too small.
  EXPECT_THROW(make_self_dual(BitMatrix::from_strings({"1100", "1100"})), RankError);
  try {
    make_self_dual(BitMatrix::from_strings({"1100", "1010", "0000"}));
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("rows 1 and 2"), std::string::npos) << e.what();
  }
}

TEST(MakeSelfDual, StoresEchelonFormSoEqualityIsCodeEquality) {
  const auto a = make_self_dual(BitMatrix::from_strings({"1100", "0011"}));
  const auto b = make_self_dual(BitMatrix::from_strings({"1111", "0011"}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.fingerprint(), b.fingerprint());
  const auto c = make_self_dual(BitMatrix::from_strings({"1010", "0101"}));
  EXPECT_FALSE(a == c);
}

TEST(ClassifyType, Examples) {
  EXPECT_EQ(classify_type(WeightDistribution(8, {1, 0, 0, 0, 14, 0, 0, 0, 1})), CodeType::TypeII);
  EXPECT_EQ(classify_type(WeightDistribution(2, {1, 0, 1})), CodeType::TypeI);
  const auto c = make_self_dual(testing::extended_hamming_generator());
  EXPECT_EQ(c.code_type(), CodeType::Undetermined);
  EXPECT_THROW(classify_type(c, WeightDistribution(2, {1, 0, 1})), DimensionError);
}

TEST(ExtremalBound, Values) {
  EXPECT_EQ(extremal_bound(68, CodeType::TypeI), 12U);
  EXPECT_EQ(extremal_bound(24, CodeType::TypeII), 8U);
  EXPECT_EQ(extremal_bound(22, CodeType::TypeI), 6U);
  EXPECT_EQ(extremal_bound(46, CodeType::TypeI), 10U);
  EXPECT_EQ(extremal_bound(2, CodeType::TypeI), 4U);
  EXPECT_THROW(extremal_bound(68, CodeType::TypeII), DomainError);
  EXPECT_THROW(extremal_bound(7, CodeType::TypeI), DomainError);
  EXPECT_THROW(extremal_bound(8, CodeType::Undetermined), DomainError);
}

TEST(ExtremalBound, MonotoneInLength) {
  std::size_t prev_i = 0;
  std::size_t prev_ii = 0;
  for (std::size_t n = 2; n <= 100; n += 2) {
    const std::size_t bi = extremal_bound(n, CodeType::TypeI);
    EXPECT_GE(bi, prev_i) << n;
    prev_i = bi;
    if (n % 8 == 0) {
      const std::size_t bii = extremal_bound(n, CodeType::TypeII);
      EXPECT_GE(bii, prev_ii) << n;
      prev_ii = bii;
    }
  }
}

TEST(IsExtremal, SmallCodes) {
  const auto tiny = make_self_dual(BitMatrix::from_strings({"11"}));
  EXPECT_FALSE(is_extremal(tiny, WeightDistribution(2, {1, 0, 1})));

  const auto hamming = make_self_dual(testing::extended_hamming_generator());
  EXPECT_TRUE(is_extremal(hamming, WeightDistribution(8, {1, 0, 0, 0, 14, 0, 0, 0, 1})));

  const auto pairs = testing::pairs_code(68);
  std::vector<std::uint64_t> counts(69, 0);
  // Weight distribution of {00,11}^34: A_{2j} = C(34, j).
  std::uint64_t binom = 1;
  for (std::size_t j = 0; j <= 34; ++j) {
    counts[2 * j] = binom;
    binom = binom * (34 - j) / (j + 1);
  }
  EXPECT_FALSE(is_extremal(pairs, WeightDistribution(68, counts)));
}

TEST(SelfDualProperties, RandomCodesAreTheirOwnDuals) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 * (2 + rng() % 15);
    const auto c = testing::random_self_dual(rng, n, 1 + rng() % 6);
    EXPECT_TRUE(c.contains(BitVector::ones(n)));
    EXPECT_TRUE(same_row_space(nullspace(c.generator()), c.generator()));
  }
}

}  // namespace
}  // namespace sdn

namespace sdn {
namespace {

TEST(StandardForm, LeadingIdentityAndPermutedSpan) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 * (2 + rng() % 7);
    const auto c = testing::random_self_dual(rng, n, 1 + rng() % 5);
    const auto sf = standard_form(c);
    const std::size_t k = n / 2;
    // (I | A) on the first k columns.
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) ASSERT_EQ(sf.code.generator().row(i)[j], i == j);
    // Same words, coordinates relabeled.
    std::set<std::uint64_t> moved;
    for (auto w : testing::brute_span(c.generator())) {
      std::uint64_t m = 0;
      for (std::size_t j = 0; j < n; ++j)
        if ((w >> sf.order[j]) & 1U) m |= std::uint64_t{1} << j;
      moved.insert(m);
    }
    EXPECT_EQ(moved, testing::brute_span(sf.code.generator()));
  }
}

TEST(StandardForm, IdentityWhenAlreadyStandard) {
  const auto c = make_self_dual(BitMatrix::from_strings({"1100", "0011"}));
  const auto sf = standard_form(c);
  EXPECT_EQ(sf.order, (std::vector<std::size_t>{0, 2, 1, 3}));
  EXPECT_EQ(sf.code.generator(), BitMatrix::from_strings({"1010", "0101"}));
  const auto h = make_self_dual(BitMatrix::from_strings({"1010", "0101"}));
  EXPECT_EQ(standard_form(h).order, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Permute, RoundTrip) {
  const auto v = BitVector::from_string("110010");
  const std::vector<std::size_t> order{5, 0, 1, 4, 2, 3};
  EXPECT_EQ(permute(v, order).to_string(), "011100");
  EXPECT_EQ(unpermute(permute(v, order), order), v);
  EXPECT_THROW(permute(v, {0, 1}), DimensionError);
}

}  // namespace
}  // namespace sdn
