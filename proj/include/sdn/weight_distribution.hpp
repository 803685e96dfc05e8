#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sdn/error.hpp"

namespace sdn {

/// Exact codeword counts A_0..A_n of a binary linear code of length n.
class WeightDistribution {
 public:
  explicit WeightDistribution(std::size_t length) : counts_(length + 1, 0) {}
  WeightDistribution(std::size_t length, std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
    if (counts_.size() != length + 1) throw DimensionError("weight distribution needs length + 1 counts");
  }

  std::size_t length() const noexcept { return counts_.size() - 1; }

  std::uint64_t operator[](std::size_t w) const { return counts_.at(w); }
  std::uint64_t& at(std::size_t w) { return counts_.at(w); }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  std::uint64_t total() const noexcept {
    std::uint64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
  }

  /// Smallest nonzero weight that occurs. Throws if only the zero word is present.
  std::size_t min_distance() const {
    for (std::size_t w = 1; w < counts_.size(); ++w)
      if (counts_[w] != 0) return w;
    throw DomainError("minimum distance undefined: no nonzero codewords");
  }

  bool has_odd_weights() const noexcept {
    for (std::size_t w = 1; w < counts_.size(); w += 2)
      if (counts_[w] != 0) return true;
    return false;
  }

  bool is_symmetric() const noexcept {
    const std::size_t n = length();
    for (std::size_t w = 0; w <= n; ++w)
      if (counts_[w] != counts_[n - w]) return false;
    return true;
  }

  WeightDistribution& operator+=(const WeightDistribution& other) {
    if (other.length() != length()) throw DimensionError("cannot add distributions of different lengths");
    for (std::size_t w = 0; w < counts_.size(); ++w) counts_[w] += other.counts_[w];
    return *this;
  }

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

inline std::size_t min_distance(const WeightDistribution& d) { return d.min_distance(); }

}  // namespace sdn
