#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace stabminor::f2 {

// Dense bit vector over F2. Bits are packed little-endian within 64-bit
// words: bit i lives at word i/64, position i%64. Bits past size() are
// kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n_bits)
      : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

  // Parses "0101..." with bit 0 first.
  static BitVector from_string(const std::string& bits);

  std::size_t size() const { return n_bits_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] ^= o.words_[w];
    }
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BitVector&) const = default;

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Inner product mod 2.
  bool dot(const BitVector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      acc ^= words_[w] & o.words_[w];
    }
    return std::popcount(acc) & 1;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  // Low word; valid whenever size() <= 64.
  std::uint64_t as_word() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_string() const;

 private:
  std::size_t n_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace stabminor::f2
