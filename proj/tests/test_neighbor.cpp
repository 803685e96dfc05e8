#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sdn/io/dataset.hpp"
#include "sdn/neighbor.hpp"
#include "test_support.hpp"

namespace sdn {
namespace {

using testing::brute_span;
using testing::to_int;

// Brute-force neighbor: enumerate C, keep the codewords orthogonal to x,
// then add the coset of x.
std::set<std::uint64_t> brute_neighbor(const BitMatrix& g, const BitVector& x) {
  const std::uint64_t xi = to_int(x);
  std::set<std::uint64_t> out;
  for (auto c : brute_span(g)) {
    if (std::popcount(c & xi) % 2 != 0) continue;
    out.insert(c);
    out.insert(c ^ xi);
  }
  return out;
}

TEST(Neighbor, LengthFourExample) {
  const auto c = make_self_dual(BitMatrix::from_strings({"1100", "0011"}));
  const auto x = BitVector::from_string("1010");
  const auto d = neighbor(c, x);
  const std::set<std::uint64_t> expected = brute_neighbor(c.generator(), x);
  EXPECT_EQ(brute_span(d.generator()), expected);
  // {0000, 1111, 1010, 0101}
  EXPECT_EQ(expected, (std::set<std::uint64_t>{0b0000, 0b1111, 0b0101, 0b1010}));
  EXPECT_EQ(neighbor_distance(c, d), 1U);
}

TEST(Neighbor, Rejections) {
  const auto c = make_self_dual(BitMatrix::from_strings({"1100", "0011"}));
  EXPECT_THROW(neighbor(c, BitVector::from_string("1111")), TrivialNeighborError);
  EXPECT_THROW(neighbor(c, BitVector::from_string("0000")), TrivialNeighborError);
  EXPECT_THROW(neighbor(c, BitVector::from_string("1000")), SelfOrthogonalityError);
  EXPECT_THROW(neighbor(c, BitVector::from_string("10100")), DimensionError);
}

TEST(Neighbor, MatchesBruteForceOnRandomCodes) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 * (2 + rng() % 7);
    const auto c = testing::random_self_dual(rng, n, rng() % 4);
    const auto x = testing::random_valid_x(rng, c);
    const auto d = neighbor(c, x);
    EXPECT_EQ(brute_span(d.generator()), brute_neighbor(c.generator(), x));
    EXPECT_TRUE(d.contains(x));
    EXPECT_EQ(neighbor_distance(c, d), 1U);
  }
}

TEST(Neighbor, AddingABackVectorStaysClose) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 * (3 + rng() % 6);
    const auto c = testing::random_self_dual(rng, n, 2);
    const auto x = testing::random_valid_x(rng, c);
    const auto d = neighbor(c, x);
    // Any codeword of C not orthogonal to x is outside D.
    for (const auto& g : c.generator()) {
      if (!inner_product(g, x)) continue;
      ASSERT_FALSE(d.contains(g));
      const auto back = neighbor(d, g);
      EXPECT_LE(neighbor_distance(c, back), 1U);
    }
  }
}

TEST(NeighborDistance, Examples) {
  const auto a = make_self_dual(BitMatrix::from_strings({"1100", "0011"}));
  const auto b = make_self_dual(BitMatrix::from_strings({"1010", "0101"}));
  EXPECT_EQ(neighbor_distance(a, a), 0U);
  EXPECT_EQ(neighbor_distance(a, b), 1U);
  EXPECT_EQ(testing::brute_intersection_dim(a.generator(), b.generator()), 1U);
  EXPECT_EQ(intersection_dimension(a, b), 1U);
  EXPECT_THROW(neighbor_distance(a, make_self_dual(BitMatrix::from_strings({"11"}))), DimensionError);
}

TEST(KRange, Examples) {
  const auto a = make_self_dual(BitMatrix::from_strings({"1100", "0011"}));
  const auto b = make_self_dual(BitMatrix::from_strings({"1010", "0101"}));
  EXPECT_TRUE(are_k_range_neighbors(a, a, 0));
  EXPECT_FALSE(are_k_range_neighbors(a, b, 0));
  EXPECT_TRUE(are_k_range_neighbors(a, b, 1));
}

TEST(Chain, ExtendIsPersistentAndKeepsKRange) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 * (4 + rng() % 5);
    NeighborChain chain(testing::random_self_dual(rng, n, 3));
    for (int step = 0; step < 6; ++step) {
      const NeighborChain before = chain;
      chain = chain.extend(testing::random_valid_x(rng, chain.last()));
      EXPECT_EQ(before.size() + 1, chain.size());
      EXPECT_EQ(chain.code(before.size()), before.last());
    }
    for (std::size_t i = 0; i < chain.size(); ++i) {
      EXPECT_LE(neighbor_distance(chain.origin(), chain.steps()[i].code), i + 1);
      EXPECT_EQ(testing::brute_intersection_dim(chain.origin().generator(), chain.steps()[i].code.generator()),
                n / 2 - neighbor_distance(chain.origin(), chain.steps()[i].code));
    }
  }
}

TEST(Chain, RejectedStepLeavesChainUnchanged) {
  NeighborChain chain(testing::pairs_code(8));
  const auto in_code = chain.last().generator().row(0);
  EXPECT_THROW((void)chain.extend(in_code), TrivialNeighborError);
  EXPECT_EQ(chain.size(), 0U);
}

TEST(Chain, ReferenceChainIsKRange) {
  const auto ds = io::Dataset::load(SDN_DEFAULT_DATA_DIR);
  const auto chain = ds.reference_chain();
  ASSERT_EQ(chain.size(), 4U);
  EXPECT_EQ(neighbor_distance(chain.code(0), chain.code(1)), 1U);
  for (std::size_t i = 1; i <= 4; ++i) {
    EXPECT_LE(neighbor_distance(chain.code(0), chain.code(i)), i);
    EXPECT_TRUE(are_k_range_neighbors(chain.code(0), chain.code(i), i));
  }
  EXPECT_FALSE(are_k_range_neighbors(chain.code(0), chain.code(1), 0));
}

}  // namespace
}  // namespace sdn
