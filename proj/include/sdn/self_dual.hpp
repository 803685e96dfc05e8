#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "sdn/error.hpp"
#include "sdn/gf2/bit_matrix.hpp"
#include "sdn/gf2/bit_vector.hpp"
#include "sdn/weight_distribution.hpp"

namespace sdn {

enum class CodeType { TypeI, TypeII, Undetermined };

inline std::string_view to_string(CodeType t) noexcept {
  switch (t) {
    case CodeType::TypeI: return "TypeI";
    case CodeType::TypeII: return "TypeII";
    case CodeType::Undetermined: return "Undetermined";
  }
  return "?";
}

class SelfDualCode;
SelfDualCode make_self_dual(const BitMatrix& g);

/// A validated binary self-dual [n, n/2] code.
///
/// The generator is kept in reduced row echelon form, so two codes are equal
/// exactly when their generators are equal. Only make_self_dual() constructs
/// instances.
class SelfDualCode {
 public:
  const BitMatrix& generator() const noexcept { return echelon_.matrix; }
  const RowEchelon& echelon() const noexcept { return echelon_; }
  std::size_t length() const noexcept { return echelon_.matrix.num_cols(); }
  std::size_t dimension() const noexcept { return echelon_.matrix.num_rows(); }

  /// TypeI once a codeword of weight 2 mod 4 is known, otherwise Undetermined.
  /// Use classify_type() with a weight distribution for a definite answer.
  CodeType code_type() const noexcept { return type_; }

  bool contains(const BitVector& v) const { return row_space_contains(echelon_, v); }
  bool contains_all_ones() const noexcept { return contains_all_ones_; }

  /// 64-bit FNV-1a over the little-endian bytes of the echelon generator.
  std::uint64_t fingerprint() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& r : echelon_.matrix) {
      for (Word w : r.words()) {
        for (int b = 0; b < 8; ++b) {
          h ^= (w >> (8 * b)) & 0xFFU;
          h *= 0x100000001b3ULL;
        }
      }
    }
    return h;
  }

  std::string fingerprint_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint()));
    return buf;
  }

  friend bool operator==(const SelfDualCode& a, const SelfDualCode& b) noexcept {
    return a.echelon_.matrix == b.echelon_.matrix;
  }

 private:
  friend SelfDualCode make_self_dual(const BitMatrix& g);

  SelfDualCode(RowEchelon e, CodeType t, bool ones) : echelon_(std::move(e)), type_(t), contains_all_ones_(ones) {}

  RowEchelon echelon_;
  CodeType type_;
  bool contains_all_ones_;
};

/// Validates g as the generator of a self-dual code.
inline SelfDualCode make_self_dual(const BitMatrix& g) {
  if (g.empty()) throw ValidationError("generator matrix has no rows");
  const std::size_t n = g.num_cols();
  if (n % 2 != 0) throw LengthError("self-dual codes need even length, got " + std::to_string(n));

  for (std::size_t i = 0; i < g.num_rows(); ++i) {
    for (std::size_t j = i; j < g.num_rows(); ++j) {
      if (inner_product(g.row(i), g.row(j)))
        throw ValidationError("not self-orthogonal: rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " have inner product 1");
    }
  }

  RowEchelon e = rref(g);
  if (e.pivots.size() != n / 2)
    throw RankError("rank " + std::to_string(e.pivots.size()) + " but a self-dual code of length " +
                    std::to_string(n) + " needs rank " + std::to_string(n / 2));

  CodeType t = CodeType::Undetermined;
  for (const auto& r : e.matrix)
    if (r.weight() % 4 == 2) t = CodeType::TypeI;

  const bool ones = row_space_contains(e, BitVector::ones(n));
  return SelfDualCode(std::move(e), t, ones);
}

/// TypeII iff every occurring weight is divisible by 4.
inline CodeType classify_type(const WeightDistribution& dist) {
  for (std::size_t w = 0; w <= dist.length(); ++w)
    if (w % 4 != 0 && dist[w] != 0) return CodeType::TypeI;
  return CodeType::TypeII;
}

inline CodeType classify_type(const SelfDualCode& c, const WeightDistribution& dist) {
  if (dist.length() != c.length()) throw DimensionError("distribution length does not match code length");
  return classify_type(dist);
}

/// Upper bound on the minimum distance of a self-dual code of length n.
inline std::size_t extremal_bound(std::size_t n, CodeType t) {
  if (n == 0 || n % 2 != 0) throw DomainError("extremal_bound: length must be positive and even");
  const std::size_t base = 4 * (n / 24) + 4;
  switch (t) {
    case CodeType::TypeII:
      if (n % 8 != 0) throw DomainError("Type II codes exist only for lengths divisible by 8");
      return base;
    case CodeType::TypeI:
      return n % 24 == 22 ? base + 2 : base;
    case CodeType::Undetermined:
      break;
  }
  throw DomainError("extremal_bound: code type must be resolved");
}

inline bool is_extremal(const SelfDualCode& c, const WeightDistribution& dist) {
  return dist.min_distance() == extremal_bound(c.length(), classify_type(c, dist));
}

/// The code with its columns reordered so the generator reads (I | A):
/// pivot columns of the rref first, then the others, each in ascending order.
/// `order[j]` is the original coordinate now at position j.
struct StandardForm {
  SelfDualCode code;
  std::vector<std::size_t> order;
};

inline StandardForm standard_form(const SelfDualCode& c) {
  const auto& e = c.echelon();
  std::vector<std::size_t> order(e.pivots.begin(), e.pivots.end());
  std::vector<bool> pivot(c.length(), false);
  for (auto p : e.pivots) pivot[p] = true;
  for (std::size_t j = 0; j < c.length(); ++j)
    if (!pivot[j]) order.push_back(j);
  return {make_self_dual(permute_columns(e.matrix, order)), std::move(order)};
}

}  // namespace sdn
