#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdn/error.hpp"

namespace sdn {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

/// A vector over GF(2), packed 64 coordinates per word.
///
/// Coordinate i (0-based) lives in bit (i % 64) of word (i / 64). Storage past
/// size() is always zero, so equality and weight are plain word operations.
/// External text uses the ASCII form from to_string()/from_string(), whose
/// first character is coordinate 1.
class BitVector {
 public:
  static constexpr std::size_t kMaxLength = 1024;

  explicit BitVector(std::size_t length) : length_(checked_length(length)), words_(words_for(length), 0) {}

  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      const char c = bits[i];
      if (c == '1') {
        v.set(i);
      } else if (c != '0') {
        throw ParseError("expected '0' or '1' but found '" + std::string(1, c) + "'", 1, i + 1);
      }
    }
    return v;
  }

  static BitVector ones(std::size_t length) {
    BitVector v(length);
    for (auto& w : v.words_) w = ~Word{0};
    v.clear_padding();
    return v;
  }

  std::size_t size() const noexcept { return length_; }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const noexcept { return get(i); }

  void set(std::size_t i, bool value = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
  }

  bool is_zero() const noexcept {
    for (Word x : words_)
      if (x != 0) return false;
    return true;
  }

  /// Index of the first set coordinate, or size() if the vector is zero.
  std::size_t first_set() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return length_;
  }

  BitVector& operator^=(const BitVector& other) {
    require_same_length(other, "xor");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const Word> words() const noexcept { return words_; }

  std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  /// Copies this vector into a longer one starting at coordinate `offset`.
  BitVector embedded(std::size_t new_length, std::size_t offset) const {
    if (offset + length_ > new_length) throw DimensionError("embedding does not fit in target length");
    BitVector out(new_length);
    for (std::size_t i = 0; i < length_; ++i)
      if (get(i)) out.set(offset + i);
    return out;
  }

  void require_same_length(const BitVector& other, const char* op) const {
    if (other.length_ != length_)
      throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(length_) + " vs " +
                           std::to_string(other.length_) + ")");
  }

 private:
  static std::size_t checked_length(std::size_t length) {
    if (length == 0 || length > kMaxLength)
      throw LengthError("vector length " + std::to_string(length) + " outside supported range 1.." +
                        std::to_string(kMaxLength));
    return length;
  }

  void clear_padding() noexcept {
    if (const std::size_t tail = length_ % kWordBits; tail != 0) words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t length_;
  std::vector<Word> words_;
};

/// Standard GF(2) inner product: parity of the common support.
inline bool inner_product(const BitVector& x, const BitVector& y) {
  x.require_same_length(y, "inner_product");
  const auto a = x.words();
  const auto b = y.words();
  Word acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc ^= a[k] & b[k];
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace sdn
