#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdn/error.hpp"
#include "sdn/gf2/bit_matrix.hpp"
#include "sdn/gf2/bit_vector.hpp"
#include "sdn/self_dual.hpp"

namespace sdn {

/// The neighbor D = < <x>^perp ∩ C, x > of a self-dual code C.
///
/// Requires x of even weight and x not in C. The kernel of <x, .> on C is
/// built in one pass over the generator: one row g* with <x, g*> = 1 is
/// chosen, it is added to every other such row, then dropped.
inline SelfDualCode neighbor(const SelfDualCode& c, const BitVector& x) {
  if (x.size() != c.length())
    throw DimensionError("neighbor: vector length " + std::to_string(x.size()) + " but code length " +
                         std::to_string(c.length()));
  if (x.weight() % 2 != 0)
    throw SelfOrthogonalityError("neighbor: x has odd weight, so <x,x> = 1 and the result would not be self-orthogonal");

  const auto& rows = c.generator().rows();
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < rows.size() && !pivot; ++i)
    if (inner_product(x, rows[i])) pivot = i;
  if (!pivot) throw TrivialNeighborError("trivial neighbor: x is orthogonal to the code, hence a codeword");

  const BitVector& g_star = rows[*pivot];
  BitMatrix next(c.length());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == *pivot) continue;
    if (inner_product(x, rows[i])) {
      next.append_row(rows[i] ^ g_star);
    } else {
      next.append_row(rows[i]);
    }
  }
  next.append_row(x);
  return make_self_dual(next);
}

/// n/2 - dim(C1 ∩ C2), via dim(C1 ∩ C2) = dim C1 + dim C2 - dim(C1 + C2).
inline std::size_t neighbor_distance(const SelfDualCode& a, const SelfDualCode& b) {
  if (a.length() != b.length())
    throw DimensionError("neighbor_distance: lengths " + std::to_string(a.length()) + " and " +
                         std::to_string(b.length()) + " differ");
  const std::size_t sum = row_space_sum_rank(a.generator(), b.generator());
  const std::size_t intersection = a.dimension() + b.dimension() - sum;
  return a.length() / 2 - intersection;
}

inline std::size_t intersection_dimension(const SelfDualCode& a, const SelfDualCode& b) {
  return a.length() / 2 - neighbor_distance(a, b);
}

inline bool are_k_range_neighbors(const SelfDualCode& a, const SelfDualCode& b, std::size_t k) {
  return neighbor_distance(a, b) <= k;
}

struct NeighborStep {
  BitVector x;
  SelfDualCode code;
};

/// A chain N_0, N_1, ... where each code is the neighbor of its predecessor.
/// Extending returns a new chain; existing chains never change.
class NeighborChain {
 public:
  explicit NeighborChain(SelfDualCode origin) : origin_(std::move(origin)) {}

  const SelfDualCode& origin() const noexcept { return origin_; }
  const std::vector<NeighborStep>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }

  const SelfDualCode& last() const noexcept { return steps_.empty() ? origin_ : steps_.back().code; }

  /// Code i of the chain: 0 is the origin, i >= 1 is the result of step i-1.
  const SelfDualCode& code(std::size_t i) const { return i == 0 ? origin_ : steps_.at(i - 1).code; }

  NeighborChain extend(const BitVector& x) const {
    NeighborChain out = *this;
    out.steps_.push_back({x, neighbor(last(), x)});
    return out;
  }

  std::vector<BitVector> vectors() const {
    std::vector<BitVector> xs;
    xs.reserve(steps_.size());
    for (const auto& s : steps_) xs.push_back(s.x);
    return xs;
  }

 private:
  SelfDualCode origin_;
  std::vector<NeighborStep> steps_;
};

}  // namespace sdn
